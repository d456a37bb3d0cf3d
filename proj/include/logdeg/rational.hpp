#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace logdeg {

using Int = boost::multiprecision::cpp_int;

// Exact rational number over arbitrary-precision integers.
//
// Canonical form: den > 0 and gcd(num, den) == 1. Almost every coefficient in
// the intersection pipeline is an integer, so the arithmetic below takes a
// den == 1 shortcut before falling back to the general normalizing path.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(long v) : num_(v), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    explicit Rational(Int v) : num_(std::move(v)), den_(1) {}
    Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
        normalize();
    }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    // Exact integer value; throws when the value is not an integer.
    const Int& as_integer() const {
        if (den_ != 1) throw std::domain_error("Rational: not an integer: " + str());
        return num_;
    }

    Rational& operator+=(const Rational& o) {
        if (den_ == 1 && o.den_ == 1) {
            num_ += o.num_;
        } else {
            num_ = num_ * o.den_ + o.num_ * den_;
            den_ *= o.den_;
            normalize();
        }
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        if (den_ == 1 && o.den_ == 1) {
            num_ -= o.num_;
        } else {
            num_ = num_ * o.den_ - o.num_ * den_;
            den_ *= o.den_;
            normalize();
        }
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        if (den_ == 1 && o.den_ == 1) {
            num_ *= o.num_;
        } else {
            num_ *= o.num_;
            den_ *= o.den_;
            normalize();
        }
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.num_ == 0) throw std::invalid_argument("Rational: division by zero");
        num_ *= o.den_;
        den_ *= o.num_;
        normalize();
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(Rational a) {
        a.num_ = -a.num_;
        return a;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }

    // "p" for integers, "p/q" otherwise.
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) {
            s += '/';
            s += den_.str();
        }
        return s;
    }

private:
    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ == 1) return;
        Int g = boost::multiprecision::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Int num_;
    Int den_;
};

// Binomial coefficient for arbitrary integer upper argument (the stepwise
// quotients stay exact because every prefix is itself a binomial).
inline Int binomial(const Int& m, int k) {
    if (k < 0) return 0;
    Int r = 1;
    for (int j = 0; j < k; ++j) {
        r *= m - j;
        r /= j + 1;
    }
    return r;
}

}  // namespace logdeg
