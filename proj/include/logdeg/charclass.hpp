#pragma once

#include "logdeg/ring.hpp"

#include <stdexcept>
#include <string_view>
#include <utility>

// Total Chern / Segre class calculus for vector bundles represented by a rank
// together with a total Chern series (a GradedClass with constant term 1).

namespace logdeg {

class BundleClass {
public:
    BundleClass(int rank, GradedClass chern) : rank_(rank), chern_(std::move(chern)) {
        if (rank_ < 0) throw std::invalid_argument("bundle: negative rank");
        if (chern_.constant_term() != Rational(1))
            throw std::invalid_argument("bundle: total Chern class must have constant term 1");
    }

    int rank() const { return rank_; }
    const GradedClass& chern() const { return chern_; }

    friend bool operator==(const BundleClass& a, const BundleClass& b) {
        return a.rank_ == b.rank_ && a.chern_ == b.chern_;
    }

private:
    int rank_;
    GradedClass chern_;
};

// Total Segre class: the formal inverse of the total Chern class.
inline GradedClass segre(const BundleClass& b) { return b.chern().invert_unit(); }

// Quotient bundle of an exact sequence 0 -> sub -> total -> quotient -> 0.
inline BundleClass whitney_quotient(const BundleClass& total, const BundleClass& sub) {
    if (total.rank() < sub.rank()) throw std::invalid_argument("whitney_quotient: rank underflow");
    return BundleClass(total.rank() - sub.rank(), total.chern() * sub.chern().invert_unit());
}

// Tensor product with a line bundle of first Chern class t:
//   c_k(E (x) L) = sum_i C(rank - i, k - i) c_i(E) t^{k-i}.
// t must be homogeneous of degree 1 (or zero, which leaves E unchanged).
inline BundleClass twist(const BundleClass& b, const GradedClass& t) {
    int tdeg = 0;
    if (!t.is_homogeneous(&tdeg) || (!t.is_zero() && tdeg != 1))
        throw std::invalid_argument("twist: class is not homogeneous of degree 1");
    const auto& spec = b.chern().spec();
    const int cap = spec->total_cap();
    GradedClass out = GradedClass::zero(spec);
    GradedClass ci = GradedClass::zero(spec);
    for (int i = 0; i <= cap; ++i) {
        ci = b.chern().graded_part(i);
        if (ci.is_zero()) continue;
        GradedClass tpow = GradedClass::unit(spec);
        for (int j = 0; i + j <= cap; ++j) {
            if (j > 0) {
                tpow = tpow * t;
                if (tpow.is_zero()) break;
            }
            Int c = binomial(Int(b.rank() - i), j);
            if (c == 0) continue;
            out += ci * tpow * Rational(c);
        }
    }
    return BundleClass(b.rank(), out);
}

// Tangent bundle class of m-dimensional projective space with hyperplane
// class h: rank m, total Chern class (1 + h)^{m+1}.
inline BundleClass tangent_projective(const RingSpecPtr& spec, std::string_view h, int m) {
    if (m < 1) throw std::invalid_argument("tangent_projective: dimension must be >= 1");
    GradedClass one_plus_h = GradedClass::unit(spec) + GradedClass::generator(spec, h);
    return BundleClass(m, one_plus_h.pow(m + 1));
}

}  // namespace logdeg
