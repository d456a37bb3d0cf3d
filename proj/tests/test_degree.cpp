#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logdeg/degree.hpp"

using namespace logdeg;

namespace {

Monomial mono(std::initializer_list<std::pair<int, int>> exps) {
    Monomial m;
    for (auto [i, e] : exps) m.exp[i] = static_cast<std::uint8_t>(e);
    return m;
}

Int factorial(int k) {
    Int r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

}  // namespace

TEST_CASE("pullback class") {
    Catalog cat(3);
    GradedClass pb = pullback_class(cat);
    CHECK(pb.term_count() == 9);
    int deg = 0;
    CHECK(pb.is_homogeneous(&deg));
    CHECK(deg == 1);
    CHECK(pb.coefficient(mono({{sym::e2, 1}})) == Rational(-1));
    CHECK(pb.coefficient(mono({{sym::h1, 1}})) == Rational(1));

    std::map<std::string, GradedClass> rot;
    rot.emplace("h1", cat.gen(sym::h1));
    rot.emplace("e1", cat.gen(sym::e1));
    rot.emplace("e2", cat.gen(sym::e2));
    int perm[3] = {2, 3, 1};
    for (int i = 1; i <= 3; ++i) {
        rot.emplace(cat.ring()->generator_name(sym::h2 + i - 1), cat.gen(sym::h2 + perm[i - 1] - 1));
        rot.emplace(cat.ring()->generator_name(sym::e3_first + i - 1),
                    cat.gen(sym::e3_first + perm[i - 1] - 1));
    }
    CHECK(pb.substitute(rot, cat.ring()) == pb);
}

TEST_CASE("integrate_X") {
    const int n = 3;
    Catalog cat(n);
    GradedClass point =
        cat.gen(sym::h1) * cat.gen(sym::h2, n) * cat.gen(sym::h3, n) * cat.gen(sym::h4, n);
    CHECK(integrate_X(point, n) == Rational(1));
    CHECK(integrate_X(cat.gen(sym::h2, 3), n) == Rational(0));

    GradedClass p =
        cat.gen(sym::h1) * (cat.gen(sym::h2) + cat.gen(sym::h3) + cat.gen(sym::h4)).pow(3 * n);
    Rational expected{factorial(3 * n) / (factorial(n) * factorial(n) * factorial(n))};
    CHECK(integrate_X(p, n) == expected);
    CHECK(expected == Rational(1680));

    CHECK_THROWS_AS(integrate_X(cat.gen(sym::e1), n), std::invalid_argument);
}

TEST_CASE("expanded power term count matches box enumeration") {
    const int n = 3;
    Catalog cat(n);
    GradedClass power = expand_pullback_power(cat);
    int deg = 0;
    CHECK(power.is_homogeneous(&deg));
    CHECK(deg == 3 * n + 1);

    // The expansion of a sum of distinct generators never cancels, so the
    // term count equals the number of admissible exponent boxes: a1 <= 1,
    // a2..a4 <= n, at most one e3 symbol, total exactly 3n+1.
    std::uint64_t boxes = 0;
    const int cap = 3 * n + 1;
    for (int a1 = 0; a1 <= 1; ++a1)
        for (int a2 = 0; a2 <= n; ++a2)
            for (int a3 = 0; a3 <= n; ++a3)
                for (int a4 = 0; a4 <= n; ++a4) {
                    int t = cap - a1 - a2 - a3 - a4;
                    if (t < 0) continue;
                    boxes += static_cast<std::uint64_t>(t + 1);            // e3-free
                    boxes += 3ull * (static_cast<std::uint64_t>(t) * (t + 1) / 2);  // one e3 symbol
                }
    CHECK(power.term_count() == boxes);
}

TEST_CASE("degree pipeline reproduces the known values") {
    DegreeResult r3 = degree_L111(3);
    CHECK(r3.degree == 80);
    CHECK(r3.pre_division_total == 480);
    CHECK(r3.pre_division_total == r3.degree * 6);

    DegreeResult r4 = degree_L111(4);
    CHECK(r4.degree == 4035);

    CHECK_THROWS_AS(degree_L111(2), std::invalid_argument);
}

TEST_CASE("worker count does not change the result") {
    DegreeOptions serial, wide;
    serial.workers = 1;
    wide.workers = 4;
    DegreeResult a = degree_L111(3, serial);
    DegreeResult b = degree_L111(3, wide);
    CHECK(a.degree == b.degree);
    CHECK(a.pre_division_total == b.pre_division_total);
    CHECK(a.term_count == b.term_count);
}

TEST_CASE("lift convention does not change the result") {
    for (int lift : {sym::h2, sym::h3, sym::h4}) {
        DegreeOptions o;
        o.lift_gen = lift;
        CHECK(degree_L111(3, o).degree == 80);
    }
}

TEST_CASE("factor permutation does not change the result") {
    for (auto perm : {std::array<int, 3>{2, 1, 3}, std::array<int, 3>{2, 3, 1},
                      std::array<int, 3>{3, 2, 1}}) {
        DegreeOptions o;
        o.factor_permutation = perm;
        CHECK(degree_L111(3, o).degree == 80);
    }
}

TEST_CASE("degree_table") {
    auto rows = degree_table(3, 4);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].degree == 80);
    CHECK(rows[1].degree == 4035);

    auto single = degree_table(3, 3);
    REQUIRE(single.size() == 1);
    CHECK(single[0].degree == 80);

    CHECK_THROWS_AS(degree_table(5, 3), std::invalid_argument);
    CHECK_THROWS_AS(degree_table(2, 3), std::invalid_argument);

    DegreeOptions capped;
    capped.max_n = 12;
    CHECK_THROWS_AS(degree_table(3, 13, capped), std::invalid_argument);
}
