#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logdeg/rational.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <random>

using logdeg::Int;
using logdeg::Rational;
using Oracle = boost::multiprecision::cpp_rational;

namespace {

Oracle to_oracle(const Rational& r) { return Oracle(r.num(), r.den()); }

}  // namespace

TEST_CASE("construction and canonical form") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(5).is_integer());
    CHECK(!Rational(1, 2).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("string form") {
    CHECK(Rational(7).str() == "7");
    CHECK(Rational(-3, 6).str() == "-1/2");
    CHECK(Rational(0).str() == "0");
}

TEST_CASE("integer extraction") {
    CHECK(Rational(12, 4).as_integer() == 3);
    CHECK_THROWS_AS(Rational(1, 3).as_integer(), std::domain_error);
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("randomized agreement with boost cpp_rational") {
    std::mt19937_64 rng(12345);
    auto draw = [&] {
        int num = static_cast<int>(rng() % 41) - 20;
        int den = 0;
        while (den == 0) den = static_cast<int>(rng() % 19) - 9;
        return Rational(num, den);
    };
    for (int round = 0; round < 2000; ++round) {
        Rational a = draw(), b = draw();
        Oracle oa = to_oracle(a), ob = to_oracle(b);
        CHECK(to_oracle(a + b) == oa + ob);
        CHECK(to_oracle(a - b) == oa - ob);
        CHECK(to_oracle(a * b) == oa * ob);
        if (!b.is_zero()) CHECK(to_oracle(a / b) == oa / ob);
        CHECK((a < b) == (oa < ob));
        CHECK((a == b) == (oa == ob));
    }
}

TEST_CASE("mixed integer and fractional accumulation stays exact") {
    Rational acc(0);
    for (int i = 1; i <= 30; ++i) acc += Rational(1, i);
    Rational back = acc;
    for (int i = 1; i <= 30; ++i) back -= Rational(1, i);
    CHECK(back.is_zero());
}

TEST_CASE("generalized binomial") {
    CHECK(logdeg::binomial(Int(8), 3) == 56);
    CHECK(logdeg::binomial(Int(5), 0) == 1);
    CHECK(logdeg::binomial(Int(3), 5) == 0);
    CHECK(logdeg::binomial(Int(-1), 4) == 1);
    CHECK(logdeg::binomial(Int(-2), 3) == -4);
    CHECK(logdeg::binomial(Int(4), -1) == 0);
}
