#pragma once

#include "logdeg/polynomial.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Exact symbolic layer for logarithmic 1-forms of type (1,1,1) on P^n:
//
//     omega = F1 F2 F3 * sum_i lambda_i dF_i / F_i,   sum_i lambda_i = 0,
//
// with the contraction/integrability identities, the order-two expansion of
// the parametrization along a tangent direction, base-locus classification
// and the Vandermonde dichotomy. These are the oracles that pin down the
// geometric facts the degree pipeline relies on.

namespace logdeg {

// A twisted differential 1-form sum_i a_i dx_i with homogeneous coefficients
// of one common degree.
struct TwistedForm {
    std::vector<Poly> coeffs;

    explicit TwistedForm(int nvars) : coeffs(nvars, Poly(nvars)) {}
    explicit TwistedForm(std::vector<Poly> c) : coeffs(std::move(c)) {
        if (coeffs.empty()) throw std::invalid_argument("twisted form: no coefficients");
        int common = -1;
        for (const auto& p : coeffs) {
            int d = 0;
            if (!p.is_homogeneous(&d))
                throw std::invalid_argument("twisted form: non-homogeneous coefficient");
            if (d < 0) continue;
            if (common >= 0 && d != common)
                throw std::invalid_argument("twisted form: mixed coefficient degrees");
            common = d;
        }
    }

    int nvars() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const {
        for (const auto& p : coeffs)
            if (!p.is_zero()) return false;
        return true;
    }

    TwistedForm& operator+=(const TwistedForm& o) {
        for (int i = 0; i < nvars(); ++i) coeffs[i] += o.coeffs[i];
        return *this;
    }
    friend TwistedForm operator+(TwistedForm a, const TwistedForm& b) { return a += b; }
    friend TwistedForm operator-(TwistedForm a, const TwistedForm& b) {
        for (int i = 0; i < a.nvars(); ++i) a.coeffs[i] -= b.coeffs[i];
        return a;
    }
    friend TwistedForm operator*(const TwistedForm& a, const Rational& s) {
        TwistedForm r = a;
        for (auto& p : r.coeffs) p = p * s;
        return r;
    }
    friend TwistedForm operator*(const TwistedForm& a, const Poly& s) {
        TwistedForm r = a;
        for (auto& p : r.coeffs) p = p * s;
        return r;
    }
    friend bool operator==(const TwistedForm& a, const TwistedForm& b) {
        return a.coeffs == b.coeffs;
    }

    std::string str() const {
        std::string out;
        bool first = true;
        for (int i = 0; i < nvars(); ++i) {
            if (coeffs[i].is_zero()) continue;
            if (!first) out += " + ";
            first = false;
            out += "(" + coeffs[i].str() + ")*dx" + std::to_string(i);
        }
        return first ? "0" : out;
    }
};

// Antisymmetric 2-form, stored as the coefficients of dx_i ^ dx_j for i < j.
class Form2 {
public:
    explicit Form2(int nvars) : nvars_(nvars), c_(nvars * (nvars - 1) / 2, Poly(nvars)) {}
    Poly& at(int i, int j) { return c_[index(i, j)]; }
    const Poly& at(int i, int j) const { return c_[index(i, j)]; }
    int nvars() const { return nvars_; }
    bool is_zero() const {
        for (const auto& p : c_)
            if (!p.is_zero()) return false;
        return true;
    }
    friend bool operator==(const Form2& a, const Form2& b) {
        return a.nvars_ == b.nvars_ && a.c_ == b.c_;
    }

private:
    int index(int i, int j) const {
        if (!(0 <= i && i < j && j < nvars_)) throw std::invalid_argument("form2: bad index pair");
        // position of (i,j) in the row-major upper triangle
        return i * nvars_ - i * (i + 1) / 2 + (j - i - 1);
    }
    int nvars_;
    std::vector<Poly> c_;
};

// Antisymmetric 3-form, coefficients of dx_i ^ dx_j ^ dx_k for i < j < k.
class Form3 {
public:
    explicit Form3(int nvars) : nvars_(nvars) {}
    void add(int i, int j, int k, const Poly& p) {
        if (p.is_zero()) return;
        auto [it, inserted] = c_.try_emplace(key(i, j, k), p);
        if (!inserted) {
            it->second += p;
            if (it->second.is_zero()) c_.erase(it);
        }
    }
    bool is_zero() const { return c_.empty(); }

private:
    std::array<int, 3> key(int i, int j, int k) const {
        if (!(0 <= i && i < j && j < k && k < nvars_))
            throw std::invalid_argument("form3: bad index triple");
        return {i, j, k};
    }
    int nvars_;
    std::map<std::array<int, 3>, Poly> c_;
};

inline Form2 exterior_derivative(const TwistedForm& w) {
    const int n = w.nvars();
    Form2 d(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            d.at(i, j) = w.coeffs[j].derivative(i) - w.coeffs[i].derivative(j);
    return d;
}

inline Form2 wedge(const TwistedForm& a, const TwistedForm& b) {
    const int n = a.nvars();
    Form2 r(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) r.at(i, j) = a.coeffs[i] * b.coeffs[j] - a.coeffs[j] * b.coeffs[i];
    return r;
}

inline Form3 wedge(const TwistedForm& a, const Form2& b) {
    const int n = a.nvars();
    Form3 r(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Poly p = a.coeffs[i] * b.at(j, k);
                p -= a.coeffs[j] * b.at(i, k);
                p += a.coeffs[k] * b.at(i, j);
                r.add(i, j, k, p);
            }
    return r;
}

// A point of P(Lambda) x P S_n(1)^3: three weights summing to zero and three
// nonzero linear forms in x0..x_n.
struct LinearTriple {
    std::array<Rational, 3> lambda;
    std::array<Poly, 3> f;

    LinearTriple(std::array<Rational, 3> lambda_, std::array<Poly, 3> f_)
        : lambda(std::move(lambda_)), f(std::move(f_)) {
        if (lambda[0] + lambda[1] + lambda[2] != Rational(0))
            throw std::invalid_argument("linear triple: weights must sum to zero");
        if (lambda[0].is_zero() && lambda[1].is_zero() && lambda[2].is_zero())
            throw std::invalid_argument("linear triple: zero weight vector");
        for (const auto& p : f) {
            int d = 0;
            if (p.is_zero() || !p.is_homogeneous(&d) || d != 1)
                throw std::invalid_argument("linear triple: factors must be nonzero linear forms");
            if (p.nvars() != f[0].nvars())
                throw std::invalid_argument("linear triple: mixed variable counts");
        }
    }

    int nvars() const { return f[0].nvars(); }

    std::string str() const {
        std::string out = "lambda=(" + lambda[0].str() + "," + lambda[1].str() + "," +
                          lambda[2].str() + ")";
        for (int i = 0; i < 3; ++i) out += ", F" + std::to_string(i + 1) + "=" + f[i].str();
        return out;
    }
};

// A tangent representative at a base-locus point: weight direction summing to
// zero plus three linear forms (possibly zero).
struct Perturbation {
    LinearTriple base;
    std::array<Rational, 3> dir_lambda;
    std::array<Poly, 3> dir_f;

    Perturbation(LinearTriple base_, std::array<Rational, 3> dl, std::array<Poly, 3> df)
        : base(std::move(base_)), dir_lambda(std::move(dl)), dir_f(std::move(df)) {
        if (dir_lambda[0] + dir_lambda[1] + dir_lambda[2] != Rational(0))
            throw std::invalid_argument("perturbation: weight direction must sum to zero");
        for (const auto& p : dir_f) {
            int d = 0;
            if (p.nvars() != base.nvars() || !p.is_homogeneous(&d) || (!p.is_zero() && d != 1))
                throw std::invalid_argument("perturbation: directions must be linear forms");
        }
    }

    std::string str() const {
        std::string out = base.str() + "; lambda'=(" + dir_lambda[0].str() + "," +
                          dir_lambda[1].str() + "," + dir_lambda[2].str() + ")";
        for (int i = 0; i < 3; ++i) out += ", F" + std::to_string(i + 1) + "'=" + dir_f[i].str();
        return out;
    }
};

inline Monomial unit_monomial(int i) {
    Monomial m;
    m.exp[i] = 1;
    return m;
}

// omega = sum_i lambda_i (prod_{j != i} F_j) dF_i, with coefficients of
// degree 2 in the homogeneous coordinates.
inline TwistedForm omega(const LinearTriple& t) {
    const int n = t.nvars();
    TwistedForm w(n);
    for (int i = 0; i < 3; ++i) {
        Poly rest = Poly::constant(n, Rational(1));
        for (int j = 0; j < 3; ++j)
            if (j != i) rest = rest * t.f[j];
        rest = rest * t.lambda[i];
        for (int k = 0; k < n; ++k) w.coeffs[k] += rest * t.f[i].coefficient(unit_monomial(k));
    }
    return w;
}

// Contraction with the radial vector field: sum_i x_i a_i.
inline Poly contract_radial(const TwistedForm& w) {
    Poly r(w.nvars());
    for (int i = 0; i < w.nvars(); ++i) r += Poly::variable(w.nvars(), i) * w.coeffs[i];
    return r;
}

// Frobenius integrability: omega ^ d(omega) = 0 as a polynomial 3-form.
inline bool frobenius_check(const TwistedForm& w) {
    return wedge(w, exterior_derivative(w)).is_zero();
}

// F * d(omega) = dF ^ omega for F = F1 F2 F3.
inline bool log_derivative_identity(const LinearTriple& t) {
    TwistedForm w = omega(t);
    const int n = t.nvars();
    Poly f = t.f[0] * t.f[1] * t.f[2];
    Form2 lhs = exterior_derivative(w);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) lhs.at(i, j) = lhs.at(i, j) * f;
    TwistedForm df(n);
    for (int i = 0; i < n; ++i) df.coeffs[i] = f.derivative(i);
    return lhs == wedge(df, w);
}

namespace detail {

// Exact clearing step of the fraction-field computations below: num/den must
// be a polynomial, which is exactly the base-locus precondition.
inline Poly cleared(const Poly& num, const Poly& den, const char* what) {
    auto p = Poly::divide_exact(num, den);
    if (!p)
        throw std::domain_error(std::string(what) +
                                ": denominators do not clear (precondition violated)");
    return *p;
}

}  // namespace detail

// Exact coefficients of eps^0, ..., eps^{order-1} of mu(x + eps v), computed
// by expanding the defining product directly (no rational functions).
// Requires omega(p.base) = 0, i.e. the base point lies in the base locus.
inline std::vector<TwistedForm> expand_eps(const Perturbation& p, int order = 3) {
    if (order < 1 || order > 5) throw std::invalid_argument("expand_eps: order must be in 1..5");
    if (!omega(p.base).is_zero())
        throw std::invalid_argument("expand_eps: base point is not in the base locus");
    const int n = p.base.nvars();
    std::vector<TwistedForm> out(order, TwistedForm(n));
    // mu(x + eps v) = sum_i (lambda_i + eps lambda'_i)
    //                        (prod_{j != i} (F_j + eps F'_j)) d(F_i + eps F'_i)
    for (int i = 0; i < 3; ++i) {
        // scalar prefactor as a polynomial in eps
        std::vector<Poly> pref{Poly::constant(n, p.base.lambda[i]),
                               Poly::constant(n, p.dir_lambda[i])};
        for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            std::vector<Poly> next(pref.size() + 1, Poly(n));
            for (std::size_t d = 0; d < pref.size(); ++d) {
                next[d] += pref[d] * p.base.f[j];
                next[d + 1] += pref[d] * p.dir_f[j];
            }
            pref = std::move(next);
        }
        for (int k = 0; k < n; ++k) {
            Rational c0 = p.base.f[i].coefficient(unit_monomial(k));
            Rational c1 = p.dir_f[i].coefficient(unit_monomial(k));
            for (std::size_t d = 0; d < pref.size(); ++d) {
                if (static_cast<int>(d) < order && !c0.is_zero())
                    out[d].coeffs[k] += pref[d] * c0;
                if (static_cast<int>(d) + 1 < order && !c1.is_zero())
                    out[d + 1].coeffs[k] += pref[d] * c1;
            }
        }
    }
    return out;
}

// Closed form of the first-order term:
//   H1 = F ( sum_i lambda'_i dF_i/F_i + d( sum_i lambda_i F'_i/F_i ) ).
// Clearing the fractions over the common denominator F = F1 F2 F3 gives, per
// coordinate k,
//   H1_k = sum_i lambda'_i rest_i dF_i/dx_k
//          + [ sum_i lambda_i rest_i^2 (dF'_i/dx_k F_i - F'_i dF_i/dx_k) ] / F
// with rest_i = prod_{j != i} F_j; the quotient is a polynomial exactly when
// the base point sits in the base locus.
inline TwistedForm H1(const Perturbation& p) {
    if (!omega(p.base).is_zero())
        throw std::invalid_argument("H1: base point is not in the base locus");
    const int n = p.base.nvars();
    Poly f = p.base.f[0] * p.base.f[1] * p.base.f[2];
    TwistedForm out(n);
    for (int k = 0; k < n; ++k) {
        Poly frac_num(n);
        for (int i = 0; i < 3; ++i) {
            Poly rest = Poly::constant(n, Rational(1));
            for (int j = 0; j < 3; ++j)
                if (j != i) rest = rest * p.base.f[j];
            out.coeffs[k] +=
                rest * (p.dir_lambda[i] * p.base.f[i].coefficient(unit_monomial(k)));
            Poly diff = p.base.f[i] * p.dir_f[i].coefficient(unit_monomial(k)) -
                        p.dir_f[i] * p.base.f[i].coefficient(unit_monomial(k));
            frac_num += rest * rest * diff * p.base.lambda[i];
        }
        out.coeffs[k] += detail::cleared(frac_num, f, "H1");
    }
    return out;
}

// Closed form of the second-order term:
//   H2 = ( sum_i F'_i/F_i ) H1
//        + F d( sum_i (lambda'_i F'_i F_i - (lambda_i/2) F'_i^2) / F_i^2 ).
// Over the common denominator F^2, per coordinate k,
//   H2_k = [ (sum_i F'_i rest_i) H1_k F
//            + sum_i rest_i^3 (du_i/dx_k F_i - 2 u_i dF_i/dx_k) ] / F^2
// with u_i = lambda'_i F'_i F_i - (lambda_i/2) F'_i^2.
inline TwistedForm H2(const Perturbation& p) {
    const int n = p.base.nvars();
    TwistedForm h1 = H1(p);
    Poly f = p.base.f[0] * p.base.f[1] * p.base.f[2];

    std::array<Poly, 3> rest{Poly(n), Poly(n), Poly(n)};
    Poly t_num(n);  // sum_i F'_i prod_{j != i} F_j
    for (int i = 0; i < 3; ++i) {
        rest[i] = Poly::constant(n, Rational(1));
        for (int j = 0; j < 3; ++j)
            if (j != i) rest[i] = rest[i] * p.base.f[j];
        t_num += p.dir_f[i] * rest[i];
    }

    TwistedForm out(n);
    for (int k = 0; k < n; ++k) {
        Poly num = t_num * h1.coeffs[k] * f;
        for (int i = 0; i < 3; ++i) {
            Poly u = p.dir_f[i] * p.base.f[i] * p.dir_lambda[i] -
                     p.dir_f[i] * p.dir_f[i] * (p.base.lambda[i] / Rational(2));
            Poly du_k = u.derivative(k);
            Poly df_k = Poly::constant(n, p.base.f[i].coefficient(unit_monomial(k)));
            num += rest[i] * rest[i] * rest[i] * (du_k * p.base.f[i] - u * df_k * Rational(2));
        }
        out.coeffs[k] = detail::cleared(num, f * f, "H2");
    }
    return out;
}

enum class BaseLocusTag { b0, b1, b2, b3, none };

inline const char* to_string(BaseLocusTag t) {
    switch (t) {
        case BaseLocusTag::b0: return "B0";
        case BaseLocusTag::b1: return "B1";
        case BaseLocusTag::b2: return "B2";
        case BaseLocusTag::b3: return "B3";
        default: return "none";
    }
}

namespace detail {

// Projective comparison of nonzero linear forms: normalize the first nonzero
// coordinate to 1 and compare.
inline Poly normalized(const Poly& p) {
    for (const auto& [m, c] : p.terms()) return p * (Rational(1) / c);
    return p;
}

inline bool proportional(const Poly& a, const Poly& b) {
    return normalized(a) == normalized(b);
}

inline bool lambda_proportional(const std::array<Rational, 3>& l, int a, int b, int c) {
    // proportional to the pattern with zero at position a and opposite signs at b, c
    return l[a].is_zero() && !l[b].is_zero() && l[b] + l[c] == Rational(0);
}

}  // namespace detail

// Classifies a point of X by the component of the base locus it lies in:
// B0 when all three poles coincide; B_i when the two poles other than i
// coincide and the weights match the vanishing pattern mu^(i); none
// otherwise. omega(t) vanishes exactly on classified points.
inline BaseLocusTag base_locus_component(const LinearTriple& t) {
    bool eq12 = detail::proportional(t.f[0], t.f[1]);
    bool eq13 = detail::proportional(t.f[0], t.f[2]);
    bool eq23 = detail::proportional(t.f[1], t.f[2]);
    if (eq12 && eq13 && eq23) return BaseLocusTag::b0;
    if (eq23 && detail::lambda_proportional(t.lambda, 0, 1, 2)) return BaseLocusTag::b1;
    if (eq13 && detail::lambda_proportional(t.lambda, 1, 0, 2)) return BaseLocusTag::b2;
    if (eq12 && detail::lambda_proportional(t.lambda, 2, 0, 1)) return BaseLocusTag::b3;
    return BaseLocusTag::none;
}

// omega is invariant under permuting the weights and poles simultaneously.
inline bool s3_orbit_invariance(const LinearTriple& t) {
    static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                        {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    TwistedForm w = omega(t);
    for (const auto& perm : perms) {
        LinearTriple s({t.lambda[perm[0]], t.lambda[perm[1]], t.lambda[perm[2]]},
                       {t.f[perm[0]], t.f[perm[1]], t.f[perm[2]]});
        if (!(omega(s) == w)) return false;
    }
    return true;
}

// Outcome of the Vandermonde dichotomy: either all three directions are
// congruent modulo F0, or one pair (i, j) is congruent with opposite weights.
struct VandermondeCase {
    bool all_congruent = false;
    int i = 0, j = 0;  // 1-based pair when !all_congruent
};

// Given a nonzero linear form F0, weights with sum zero, and directions F'
// with sum_i lambda_i F'_i = 0 and sum_i lambda_i F'_i^2 = 0 mod F0,
// returns which disjunct of the kernel analysis of the Vandermonde system
// holds. Throws std::logic_error if neither does (impossible for valid
// inputs) and std::invalid_argument when the preconditions fail.
inline VandermondeCase vandermonde_dichotomy(const Poly& f0, const std::array<Rational, 3>& lambda,
                                             const std::array<Poly, 3>& fp) {
    int d = 0;
    if (f0.is_zero() || !f0.is_homogeneous(&d) || d != 1)
        throw std::invalid_argument("vandermonde: F0 must be a nonzero linear form");
    if (lambda[0] + lambda[1] + lambda[2] != Rational(0))
        throw std::invalid_argument("vandermonde: weights must sum to zero");
    if (lambda[0].is_zero() && lambda[1].is_zero() && lambda[2].is_zero())
        throw std::invalid_argument("vandermonde: zero weight vector");
    const int n = f0.nvars();
    std::array<Poly, 3> red{Poly(n), Poly(n), Poly(n)};
    Poly s1(n), s2(n);
    for (int i = 0; i < 3; ++i) {
        red[i] = fp[i].reduce_mod_linear(f0);
        s1 += red[i] * lambda[i];
        s2 += red[i] * red[i] * lambda[i];
    }
    if (!s1.is_zero() || !s2.reduce_mod_linear(f0).is_zero())
        throw std::invalid_argument("vandermonde: congruence preconditions fail");
    if (red[0] == red[1] && red[1] == red[2]) return {true, 0, 0};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (red[i] == red[j] && lambda[i] + lambda[j] == Rational(0))
                return {false, i + 1, j + 1};
    throw std::logic_error("vandermonde: neither disjunct holds");
}

}  // namespace logdeg
