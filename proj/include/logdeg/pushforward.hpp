#pragma once

#include "logdeg/ring.hpp"

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

// Pushforward engine for exceptional divisor classes.
//
// For a blow-up along a smooth center Z of codimension c with exceptional
// class e, powers of e push forward by
//
//     e^j  |->  (-1)^{j-1} s_{j-c}(N_Z) . [Z]            (j >= 1)
//
// where s is the total Segre series of the normal bundle of the center and
// negative-index graded parts vanish. Both [Z] and s are carried as
// ambient-lifted classes, so the projection formula turns the pushforward of
// alpha * e^j into plain ring multiplication.

namespace logdeg {

struct BlowupStage {
    int symbol;                // ring generator index of the exceptional class
    GradedClass center_class;  // ambient class of the center, pure codimension
    int center_codim;
    GradedClass segre_series;  // ambient-lifted total Segre series of the center's normal bundle

    BlowupStage(int symbol_, GradedClass center, int codim, GradedClass segre)
        : symbol(symbol_),
          center_class(std::move(center)),
          center_codim(codim),
          segre_series(std::move(segre)) {
        if (symbol < 0 || symbol >= center_class.spec()->generator_count())
            throw std::invalid_argument("blowup stage: bad exceptional symbol index");
        if (codim < 1) throw std::invalid_argument("blowup stage: center codimension must be >= 1");
        int deg = 0;
        if (!center_class.is_homogeneous(&deg) || (!center_class.is_zero() && deg != codim))
            throw std::invalid_argument("blowup stage: center class is not pure of its codimension");
        if (segre_series.constant_term() != Rational(1))
            throw std::invalid_argument("blowup stage: Segre series must have constant term 1");
    }
};

namespace detail {

inline bool contains_symbol(const GradedClass& c, int symbol) {
    for (const auto& t : c.terms())
        if (t.mono.exp[symbol] > 0) return true;
    return false;
}

}  // namespace detail

// Pushforward of the j-th power of the stage's exceptional class.
inline GradedClass push_power(const BlowupStage& stage, int j) {
    if (j < 0) throw std::invalid_argument("push_power: negative power");
    const auto& spec = stage.center_class.spec();
    if (j == 0) return GradedClass::unit(spec);
    GradedClass s = stage.segre_series.graded_part(j - stage.center_codim);
    if (s.is_zero()) return GradedClass::zero(spec);
    GradedClass r = s * stage.center_class;
    return (j % 2 == 1) ? r : -r;
}

// Pushforward of a class supported on the part of an exceptional divisor
// lying over a subvariety W of the blow-up center. The integrand G and the
// class of W inside the center are both given as ambient lifts, so the
// projection formula reduces the pushforward to
//
//     graded_part(G, grade) * support * e.
inline GradedClass supported_push(const GradedClass& integrand, const GradedClass& support,
                                  int symbol, int grade) {
    return integrand.graded_part(grade) * support *
           GradedClass::generator(integrand.spec(), integrand.spec()->generator_name(symbol));
}

// Eliminates the exceptional symbols of `stages`, in order, from `poly`.
//
// Monomials containing two symbols of one `disjoint_families` group come from
// intersections of disjoint centers and are annihilated first. Each stage then
// rewrites poly = sum_j alpha_j e^j (alpha_j free of e) and replaces e^j by
// push_power(stage, j); by the projection formula the replacement multiplies,
// so the stage is evaluated in the factored form
//
//     alpha_0 + ( sum_{j>=1} alpha_j (-1)^{j-1} s_{j-c} ) * [Z].
inline GradedClass eliminate(const GradedClass& poly, std::span<const BlowupStage> stages,
                             std::span<const std::vector<int>> disjoint_families = {}) {
    const auto& spec = poly.spec();
    std::vector<Term> kept;
    kept.reserve(poly.terms().size());
    for (const auto& t : poly.terms()) {
        bool drop = false;
        for (const auto& family : disjoint_families) {
            int present = 0;
            for (int s : family)
                if (t.mono.exp[s] > 0) ++present;
            if (present >= 2) {
                drop = true;
                break;
            }
        }
        if (!drop) kept.push_back(t);
    }
    GradedClass cur = GradedClass::from_terms(spec, std::move(kept));

    std::vector<int> eliminated;
    for (const auto& stage : stages) {
        if (!(*stage.center_class.spec() == *spec))
            throw std::invalid_argument("eliminate: stage lives in a different ring");
        if (detail::contains_symbol(stage.center_class, stage.symbol) ||
            detail::contains_symbol(stage.segre_series, stage.symbol))
            throw std::logic_error("eliminate: stage pushforward contains its own symbol");
        for (int done : eliminated)
            if (detail::contains_symbol(stage.center_class, done) ||
                detail::contains_symbol(stage.segre_series, done))
                throw std::logic_error("eliminate: stage reintroduces an eliminated symbol");

        const int sym = stage.symbol;
        std::vector<Term> untouched;
        std::vector<std::vector<Term>> alpha(spec->total_cap() + 1);
        for (const auto& t : cur.terms()) {
            int j = t.mono.exp[sym];
            if (j == 0) {
                untouched.push_back(t);
                continue;
            }
            Term stripped = t;
            stripped.mono.exp[sym] = 0;
            alpha[j].push_back(std::move(stripped));
        }
        GradedClass acc(spec);
        for (int j = 1; j < static_cast<int>(alpha.size()); ++j) {
            if (alpha[j].empty()) continue;
            GradedClass s = stage.segre_series.graded_part(j - stage.center_codim);
            if (s.is_zero()) continue;
            if (j % 2 == 0) s = -s;
            acc += GradedClass::from_terms(spec, std::move(alpha[j])) * s;
        }
        cur = GradedClass::from_terms(spec, std::move(untouched)) + acc * stage.center_class;
        eliminated.push_back(sym);
        if (detail::contains_symbol(cur, sym))
            throw std::logic_error("eliminate: symbol survived its own stage");
    }
    return cur;
}

}  // namespace logdeg
