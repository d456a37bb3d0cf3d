#pragma once

#include "logdeg/geometry.hpp"
#include "logdeg/parallel.hpp"
#include "logdeg/pushforward.hpp"
#include "logdeg/ring.hpp"

#include <array>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <vector>

// Top-level degree pipeline: expand the pulled-back hyperplane class to the
// power 3n+1, eliminate the exceptional symbols, integrate over
// X = P^1 x (P^n)^3 and divide by the order of the symmetry group of the
// parametrization (the three linear poles are interchangeable, so the
// resolved map is generically 6:1 onto the component).

namespace logdeg {

struct DegreeOptions {
    int workers = 1;
    int lift_gen = sym::h2;
    std::array<int, 3> factor_permutation{1, 2, 3};
    int max_n = 12;  // resource cap for table ranges
};

struct DegreeResult {
    int n = 0;
    Int degree;
    Int pre_division_total;
    std::uint64_t term_count = 0;
    std::int64_t elapsed_ms = 0;
};

// rho*(h) = h1 + h2 + h3 + h4 - e1 - e2 - e3_1 - e3_2 - e3_3.
inline GradedClass pullback_class(const Catalog& cat) {
    GradedClass c = cat.gen(sym::h1) + cat.gen(sym::h2) + cat.gen(sym::h3) + cat.gen(sym::h4);
    c -= cat.gen(sym::e1) + cat.gen(sym::e2);
    for (int i = 0; i < 3; ++i) c -= cat.gen(sym::e3_first + i);
    return c;
}

// rho*(h)^{3n+1}, expanded in the symbol ring. Monomials carrying two
// distinct e3 symbols are pruned as they arise: the corresponding centers
// are disjoint, so those terms die in the elimination anyway.
inline GradedClass expand_pullback_power(const Catalog& cat, int workers = 1) {
    const GradedClass pb = pullback_class(cat);
    auto keep = [](const Monomial& m) {
        int present = (m.exp[sym::e3_first] > 0) + (m.exp[sym::e3_first + 1] > 0) +
                      (m.exp[sym::e3_first + 2] > 0);
        return present <= 1;
    };
    GradedClass power = cat.unit();
    const int cap = 3 * cat.n() + 1;
    for (int step = 0; step < cap; ++step) {
        if (workers <= 1 || power.term_count() < 4096) {
            power = mul_filtered(power, pb, keep);
            continue;
        }
        // Multiply chunks of the running power independently, then merge.
        std::vector<GradedClass> parts(workers, cat.zero());
        const auto& terms = power.terms();
        parallel_chunks(terms.size(), workers, [&](int c, std::size_t b, std::size_t e) {
            GradedClass chunk = GradedClass::from_terms(
                cat.ring(), std::vector<Term>(terms.begin() + b, terms.begin() + e));
            parts[c] = mul_filtered(chunk, pb, keep);
        });
        GradedClass acc = cat.zero();
        for (auto& p : parts) acc += p;
        power = std::move(acc);
    }
    return power;
}

// Integral over X: the coefficient of the point class h1 h2^n h3^n h4^n.
// The class must already be free of exceptional symbols.
inline Rational integrate_X(const GradedClass& c, int n) {
    for (const auto& t : c.terms())
        for (int s = sym::e1; s < sym::count; ++s)
            if (t.mono.exp[s] > 0)
                throw std::invalid_argument("integrate_X: residual exceptional symbols");
    Monomial top;
    top.exp[sym::h1] = 1;
    top.exp[sym::h2] = top.exp[sym::h3] = top.exp[sym::h4] = static_cast<std::uint8_t>(n);
    return c.coefficient(top);
}

inline DegreeResult degree_L111(int n, const DegreeOptions& opts = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    if (n < 3) throw std::invalid_argument("degree_L111: requires n >= 3");

    Catalog cat(n, opts.lift_gen);
    if (opts.factor_permutation != std::array<int, 3>{1, 2, 3})
        cat = cat.permuted(opts.factor_permutation);

    GradedClass power = expand_pullback_power(cat, opts.workers);
    const std::uint64_t term_count = power.term_count();

    const auto stages = cat.stages();
    const auto families = cat.disjoint_families();

    // The elimination is linear, so the expanded term stream can be
    // partitioned across workers and the exact integrals summed.
    const auto& terms = power.terms();
    int nchunks = std::max(1, opts.workers);
    std::vector<Rational> partial(nchunks, Rational(0));
    nchunks = parallel_chunks(terms.size(), nchunks, [&](int c, std::size_t b, std::size_t e) {
        GradedClass chunk = GradedClass::from_terms(
            cat.ring(), std::vector<Term>(terms.begin() + b, terms.begin() + e));
        partial[c] = integrate_X(eliminate(chunk, stages, families), n);
    });
    Rational total(0);
    for (int c = 0; c < nchunks; ++c) total += partial[c];

    DegreeResult r;
    r.n = n;
    r.term_count = term_count;
    if (!total.is_integer())
        throw std::logic_error("degree_L111: pre-division total is not an integer: " + total.str());
    r.pre_division_total = total.num();
    if (r.pre_division_total % 6 != 0)
        throw std::logic_error("degree_L111: total " + r.pre_division_total.str() +
                               " is not divisible by 6");
    r.degree = r.pre_division_total / 6;
    if (r.degree <= 0) throw std::logic_error("degree_L111: non-positive degree");
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - t0)
                       .count();
    return r;
}

inline std::vector<DegreeResult> degree_table(int n_from, int n_to, const DegreeOptions& opts = {}) {
    if (n_from < 3 || n_to < n_from) throw std::invalid_argument("degree_table: invalid range");
    if (n_to > opts.max_n)
        throw std::invalid_argument("degree_table: range exceeds the resource cap max_n=" +
                                    std::to_string(opts.max_n));
    std::vector<DegreeResult> rows;
    rows.reserve(n_to - n_from + 1);
    for (int n = n_from; n <= n_to; ++n) rows.push_back(degree_L111(n, opts));
    return rows;
}

}  // namespace logdeg
