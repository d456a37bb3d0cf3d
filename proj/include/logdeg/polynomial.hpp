#pragma once

#include "logdeg/rational.hpp"
#include "logdeg/ring.hpp"  // reuses the packed Monomial key

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Plain (untruncated) sparse multivariate polynomials over exact rationals,
// in homogeneous coordinates x0..x_{nvars-1}. These are small objects: the
// differential-form oracles only ever handle a few dozen terms.

namespace logdeg {

class Poly {
public:
    explicit Poly(int nvars) : nvars_(nvars) {
        if (nvars < 1 || nvars > 16) throw std::invalid_argument("poly: nvars out of range");
    }

    static Poly constant(int nvars, Rational c) {
        Poly p(nvars);
        if (!c.is_zero()) p.terms_.emplace(Monomial{}, std::move(c));
        return p;
    }

    static Poly variable(int nvars, int i, int power = 1) {
        Poly p(nvars);
        if (i < 0 || i >= nvars) throw std::invalid_argument("poly: variable index out of range");
        if (power < 0 || power > 255) throw std::invalid_argument("poly: bad power");
        Monomial m;
        m.exp[i] = static_cast<std::uint8_t>(power);
        p.terms_.emplace(m, Rational(1));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }

    bool is_homogeneous(int* degree = nullptr) const {
        if (terms_.empty()) {
            if (degree) *degree = -1;
            return true;
        }
        int d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        if (degree) *degree = d;
        return true;
    }

    Poly& operator+=(const Poly& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator-(const Poly& a) { return a * Rational(-1); }

    friend Poly operator*(const Poly& a, const Rational& s) {
        Poly r(a.nvars_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, c * s);
        return r;
    }
    friend Poly operator*(const Rational& s, const Poly& a) { return a * s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check(b);
        Poly r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m;
                for (int i = 0; i < 16; ++i) {
                    int s = ma.exp[i] + mb.exp[i];
                    if (s > 255) throw std::overflow_error("poly: exponent overflow");
                    m.exp[i] = static_cast<std::uint8_t>(s);
                }
                r.add_term(m, ca * cb);
            }
        return r;
    }

    Poly pow(int k) const {
        if (k < 0) throw std::invalid_argument("poly: negative power");
        Poly r = constant(nvars_, Rational(1));
        for (int i = 0; i < k; ++i) r = r * (*this);
        return r;
    }

    Poly derivative(int i) const {
        if (i < 0 || i >= nvars_) throw std::invalid_argument("poly: variable index out of range");
        Poly r(nvars_);
        for (const auto& [m, c] : terms_) {
            if (m.exp[i] == 0) continue;
            Monomial d = m;
            d.exp[i] -= 1;
            r.add_term(d, c * Rational(static_cast<int>(m.exp[i])));
        }
        return r;
    }

    // Substitutes variable i by `image` (evaluated exactly).
    Poly substitute_var(int i, const Poly& image) const {
        check(image);
        Poly r(nvars_);
        std::vector<Poly> powers{constant(nvars_, Rational(1))};
        for (const auto& [m, c] : terms_) {
            int e = m.exp[i];
            while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * image);
            Monomial rest = m;
            rest.exp[i] = 0;
            Poly term(nvars_);
            term.terms_.emplace(rest, c);
            r += term * powers[e];
        }
        return r;
    }

    // Exact quotient a / b; nullopt when b does not divide a.
    static std::optional<Poly> divide_exact(const Poly& a, const Poly& b) {
        a.check(b);
        if (b.is_zero()) throw std::invalid_argument("poly: division by zero polynomial");
        Poly rem = a;
        Poly quot(a.nvars_);
        const auto& [lm, lc] = *b.terms_.rbegin();  // lex-leading term
        while (!rem.is_zero()) {
            const auto& [rm, rc] = *rem.terms_.rbegin();
            Monomial q;
            for (int i = 0; i < 16; ++i) {
                if (rm.exp[i] < lm.exp[i]) return std::nullopt;
                q.exp[i] = static_cast<std::uint8_t>(rm.exp[i] - lm.exp[i]);
            }
            Rational qc = rc / lc;
            Poly qterm(a.nvars_);
            qterm.terms_.emplace(q, qc);
            quot += qterm;
            rem -= qterm * b;
        }
        return quot;
    }

    // Normal form modulo a nonzero linear form: solves the form for its
    // pivot variable and substitutes.
    Poly reduce_mod_linear(const Poly& linear) const {
        check(linear);
        int d = 0;
        if (!linear.is_homogeneous(&d) || d != 1 || linear.is_zero())
            throw std::invalid_argument("poly: modulus must be a nonzero linear form");
        int pivot = -1;
        Rational pc;
        for (const auto& [m, c] : linear.terms_) {
            for (int i = 0; i < nvars_; ++i)
                if (m.exp[i] == 1) {
                    pivot = i;
                    pc = c;
                }
            if (pivot >= 0) break;
        }
        Poly image = variable(nvars_, pivot) - linear * (Rational(1) / pc);
        return substitute_var(pivot, image);
    }

    bool congruent_mod_linear(const Poly& other, const Poly& linear) const {
        return (*this - other).reduce_mod_linear(linear).is_zero();
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) out += " + ";
            first = false;
            std::string mono;
            for (int i = 0; i < nvars_; ++i) {
                if (m.exp[i] == 0) continue;
                if (!mono.empty()) mono += '*';
                mono += 'x';
                mono += std::to_string(i);
                if (m.exp[i] > 1) {
                    mono += '^';
                    mono += std::to_string(static_cast<int>(m.exp[i]));
                }
            }
            out += c.str();
            if (!mono.empty()) {
                out += '*';
                out += mono;
            }
        }
        return out;
    }

private:
    void check(const Poly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("poly: mixed variable counts");
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    int nvars_;
    std::map<Monomial, Rational> terms_;
};

}  // namespace logdeg
