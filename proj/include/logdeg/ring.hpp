#pragma once

#include "logdeg/rational.hpp"

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Exact sparse arithmetic in truncated multigraded quotient algebras
//
//     Q[g_1, ..., g_k] / (g_i^{m_i},  total degree > cap)
//
// Every Chow class handled by this library lives in such a ring. Classes are
// immutable after construction and all operations are pure, so values can be
// shared freely across threads.

namespace logdeg {

// Packed exponent vector, one byte per generator. Lexicographic order on the
// byte array equals lexicographic order on the exponent vector.
struct Monomial {
    std::array<std::uint8_t, 16> exp{};

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    int degree() const {
        int d = 0;
        for (auto v : exp) d += v;
        return d;
    }
};

class RingSpec;
using RingSpecPtr = std::shared_ptr<const RingSpec>;

class RingSpec {
public:
    // Byte-packed exponents bound both limits below.
    static constexpr int max_generators = 16;
    static constexpr int max_total_cap = 127;

    RingSpec(std::vector<std::string> generators, std::vector<int> nilpotency, int total_cap)
        : names_(std::move(generators)), nilpotency_(std::move(nilpotency)), cap_(total_cap) {
        if (names_.empty()) throw std::invalid_argument("ring: no generators");
        if (names_.size() != nilpotency_.size())
            throw std::invalid_argument("ring: generator/nilpotency length mismatch");
        if (names_.size() > static_cast<std::size_t>(max_generators))
            throw std::invalid_argument("ring: too many generators");
        if (cap_ < 1 || cap_ > max_total_cap) throw std::invalid_argument("ring: bad total cap");
        max_exp_.fill(0);
        for (std::size_t i = 0; i < names_.size(); ++i) {
            if (names_[i].empty()) throw std::invalid_argument("ring: empty generator name");
            for (std::size_t j = 0; j < i; ++j)
                if (names_[j] == names_[i])
                    throw std::invalid_argument("ring: duplicate generator name: " + names_[i]);
            if (nilpotency_[i] < 1) throw std::invalid_argument("ring: non-positive nilpotency order");
            max_exp_[i] = static_cast<std::uint8_t>(std::min(nilpotency_[i] - 1, cap_));
        }
    }

    int generator_count() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& generators() const { return names_; }
    const std::string& generator_name(int i) const { return names_.at(i); }
    int nilpotency(int i) const { return nilpotency_.at(i); }
    int total_cap() const { return cap_; }

    int index_of(std::string_view name) const {
        for (std::size_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) return static_cast<int>(i);
        throw std::invalid_argument("ring: unknown generator: " + std::string(name));
    }

    // True when the monomial respects both truncation rules.
    bool admits(const Monomial& m) const {
        int total = 0;
        for (int i = 0; i < max_generators; ++i) {
            if (m.exp[i] > max_exp_[i]) return false;
            total += m.exp[i];
        }
        return total <= cap_;
    }

    // Sum of two admissible monomials; false when the product truncates away.
    bool admits_product(const Monomial& a, const Monomial& b, Monomial& out) const {
        int total = 0;
        for (int i = 0; i < max_generators; ++i) {
            int s = a.exp[i] + b.exp[i];
            if (s > max_exp_[i]) return false;
            out.exp[i] = static_cast<std::uint8_t>(s);
            total += s;
        }
        return total <= cap_;
    }

    friend bool operator==(const RingSpec& a, const RingSpec& b) {
        return a.names_ == b.names_ && a.nilpotency_ == b.nilpotency_ && a.cap_ == b.cap_;
    }

private:
    std::vector<std::string> names_;
    std::vector<int> nilpotency_;
    int cap_;
    std::array<std::uint8_t, 16> max_exp_;
};

inline RingSpecPtr make_ring(std::vector<std::string> generators, std::vector<int> nilpotency,
                             int total_cap) {
    return std::make_shared<RingSpec>(std::move(generators), std::move(nilpotency), total_cap);
}

struct Term {
    Monomial mono;
    Rational coeff;
};

namespace detail {

// Merge-add of two term vectors sorted by monomial; drops cancellations.
inline std::vector<Term> merge_add(const std::vector<Term>& a, const std::vector<Term>& b) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].mono < b[j].mono) {
            out.push_back(a[i++]);
        } else if (b[j].mono < a[i].mono) {
            out.push_back(b[j++]);
        } else {
            Rational c = a[i].coeff + b[j].coeff;
            if (!c.is_zero()) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j) out.push_back(b[j]);
    return out;
}

}  // namespace detail

class GradedClass {
public:
    explicit GradedClass(RingSpecPtr spec) : spec_(require_spec(std::move(spec))) {}

    static GradedClass zero(RingSpecPtr spec) { return GradedClass(std::move(spec)); }

    static GradedClass unit(RingSpecPtr spec) { return constant(std::move(spec), Rational(1)); }

    static GradedClass constant(RingSpecPtr spec, Rational c) {
        GradedClass r(std::move(spec));
        if (!c.is_zero()) r.terms_.push_back({Monomial{}, std::move(c)});
        return r;
    }

    static GradedClass generator(RingSpecPtr spec, std::string_view name, int power = 1) {
        GradedClass r(std::move(spec));
        int idx = r.spec_->index_of(name);
        if (power < 0) throw std::invalid_argument("generator: negative power");
        if (power > r.spec_->total_cap()) return r;  // truncated away
        Monomial m;
        m.exp[idx] = static_cast<std::uint8_t>(power);
        if (!r.spec_->admits(m)) return r;
        r.terms_.push_back({m, Rational(1)});
        return r;
    }

    // Builds a class from arbitrary terms (sorted, combined, validated).
    static GradedClass from_terms(RingSpecPtr spec, std::vector<Term> terms) {
        GradedClass r(std::move(spec));
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return a.mono < b.mono; });
        for (auto& t : terms) {
            if (!r.spec_->admits(t.mono))
                throw std::invalid_argument("from_terms: monomial violates ring truncation");
            if (t.coeff.is_zero()) continue;
            if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
                r.terms_.back().coeff += t.coeff;
                if (r.terms_.back().coeff.is_zero()) r.terms_.pop_back();
            } else {
                r.terms_.push_back(std::move(t));
            }
        }
        return r;
    }

    const RingSpecPtr& spec() const { return spec_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Monomial& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Monomial& k) { return t.mono < k; });
        if (it != terms_.end() && it->mono == m) return it->coeff;
        return Rational(0);
    }

    Rational constant_term() const { return coefficient(Monomial{}); }

    // True when all terms share one total degree; reports it through `degree`
    // (zero classes are homogeneous of every degree; `degree` is set to -1).
    bool is_homogeneous(int* degree = nullptr) const {
        if (terms_.empty()) {
            if (degree) *degree = -1;
            return true;
        }
        int d = terms_.front().mono.degree();
        for (const auto& t : terms_)
            if (t.mono.degree() != d) return false;
        if (degree) *degree = d;
        return true;
    }

    // Sum of the terms of total degree exactly k (zero for out-of-range k).
    GradedClass graded_part(int k) const {
        GradedClass r(spec_);
        for (const auto& t : terms_)
            if (t.mono.degree() == k) r.terms_.push_back(t);
        return r;
    }

    GradedClass& operator+=(const GradedClass& o) {
        check_same_spec(o);
        terms_ = detail::merge_add(terms_, o.terms_);
        return *this;
    }
    GradedClass& operator-=(const GradedClass& o) { return *this += -o; }

    friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
    friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
    friend GradedClass operator-(const GradedClass& a) { return a * Rational(-1); }

    friend GradedClass operator*(const GradedClass& a, const Rational& s) {
        GradedClass r(a.spec_);
        if (s.is_zero()) return r;
        r.terms_.reserve(a.terms_.size());
        for (const auto& t : a.terms_) r.terms_.push_back({t.mono, t.coeff * s});
        return r;
    }
    friend GradedClass operator*(const Rational& s, const GradedClass& a) { return a * s; }

    friend GradedClass operator*(const GradedClass& a, const GradedClass& b) {
        return mul_filtered(a, b, [](const Monomial&) { return true; });
    }

    // Product keeping only result monomials accepted by `keep`; the ring
    // truncation is always applied on top of the filter.
    template <class Keep>
    friend GradedClass mul_filtered(const GradedClass& a, const GradedClass& b, Keep keep) {
        a.check_same_spec(b);
        const GradedClass& small = a.terms_.size() <= b.terms_.size() ? a : b;
        const GradedClass& large = a.terms_.size() <= b.terms_.size() ? b : a;
        const RingSpec& spec = *a.spec_;
        GradedClass r(a.spec_);
        std::vector<Term> shifted;
        for (const auto& t : small.terms_) {
            shifted.clear();
            shifted.reserve(large.terms_.size());
            Monomial m;
            for (const auto& u : large.terms_) {
                if (!spec.admits_product(t.mono, u.mono, m)) continue;
                if (!keep(m)) continue;
                shifted.push_back({m, t.coeff * u.coeff});
            }
            r.terms_ = detail::merge_add(r.terms_, shifted);
        }
        return r;
    }

    GradedClass pow(int k) const {
        if (k < 0) throw std::invalid_argument("pow: negative exponent");
        GradedClass r = unit(spec_);
        for (int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    // Multiplicative inverse of a class with invertible constant term,
    // exact up to the ring truncation.
    GradedClass invert_unit() const {
        Rational c0 = constant_term();
        if (c0.is_zero()) throw std::invalid_argument("invert_unit: zero constant term");
        Rational c0inv = Rational(1) / c0;
        // u = 1 - a/c0 is nilpotent, so 1/a = (1/c0) * sum_k u^k terminates.
        GradedClass u = unit(spec_) - (*this) * c0inv;
        GradedClass r = unit(spec_);
        GradedClass p = unit(spec_);
        for (int k = 0; k < spec_->total_cap(); ++k) {
            p = p * u;
            if (p.is_zero()) break;
            r += p;
        }
        return r * c0inv;
    }

    // Ring homomorphism sending each generator to its image in `target`.
    // Every generator appearing in the class must be mapped.
    GradedClass substitute(const std::map<std::string, GradedClass>& images,
                           const RingSpecPtr& target) const {
        for (const auto& [name, img] : images)
            if (!(*img.spec() == *target))
                throw std::invalid_argument("substitute: image of " + name + " not in target ring");
        const int k = spec_->generator_count();
        std::vector<const GradedClass*> image_of(k, nullptr);
        for (int i = 0; i < k; ++i) {
            auto it = images.find(spec_->generator_name(i));
            if (it != images.end()) image_of[i] = &it->second;
        }
        std::vector<std::vector<GradedClass>> powers(k);  // powers[i][e] = image_of[i]^e
        GradedClass acc(target);
        for (const auto& t : terms_) {
            GradedClass prod = GradedClass::constant(target, t.coeff);
            for (int i = 0; i < k && !prod.is_zero(); ++i) {
                int e = t.mono.exp[i];
                if (e == 0) continue;
                if (!image_of[i])
                    throw std::invalid_argument("substitute: unmapped generator " +
                                                spec_->generator_name(i));
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(GradedClass::unit(target));
                while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * (*image_of[i]));
                prod = prod * pw[e];
            }
            acc += prod;
        }
        return acc;
    }

    // Canonical text form: terms in lexicographic monomial order, each as
    // "c * g^a*h^b" with exact rational coefficients; the empty monomial
    // prints as a bare rational and the zero class as "0".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& t : terms_) {
            if (!first) out += " + ";
            first = false;
            std::string mono;
            for (int i = 0; i < spec_->generator_count(); ++i) {
                if (t.mono.exp[i] == 0) continue;
                if (!mono.empty()) mono += '*';
                mono += spec_->generator_name(i);
                mono += '^';
                mono += std::to_string(static_cast<int>(t.mono.exp[i]));
            }
            if (mono.empty()) {
                out += t.coeff.str();
            } else {
                out += t.coeff.str();
                out += " * ";
                out += mono;
            }
        }
        return out;
    }

    friend bool operator==(const GradedClass& a, const GradedClass& b) {
        if (!(*a.spec_ == *b.spec_)) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        for (std::size_t i = 0; i < a.terms_.size(); ++i)
            if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
                return false;
        return true;
    }

    void check_same_spec(const GradedClass& o) const {
        if (spec_ == o.spec_) return;
        if (!(*spec_ == *o.spec_)) throw std::invalid_argument("ring: mismatched ring specs");
    }

private:
    static RingSpecPtr require_spec(RingSpecPtr spec) {
        if (!spec) throw std::invalid_argument("GradedClass: null ring spec");
        return spec;
    }

    RingSpecPtr spec_;
    std::vector<Term> terms_;  // sorted by monomial, unique, nonzero coefficients
};

inline GradedClass graded_part(const GradedClass& a, int k) { return a.graded_part(k); }
inline GradedClass invert_unit(const GradedClass& a) { return a.invert_unit(); }
inline Rational coefficient(const GradedClass& a, const Monomial& m) { return a.coefficient(m); }

}  // namespace logdeg
