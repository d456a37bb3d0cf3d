#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logdeg/geometry.hpp"
#include "logdeg/pushforward.hpp"
#include "logdeg/selfcheck.hpp"

using namespace logdeg;

TEST_CASE("stage validation") {
    Catalog cat(3);
    // mixed-degree center class is rejected
    CHECK_THROWS_AS(BlowupStage(sym::e1, cat.unit() + cat.gen(sym::h2), 1,
                                cat.unit()),
                    std::invalid_argument);
    // Segre series must be a unit series
    CHECK_THROWS_AS(BlowupStage(sym::e1, cat.class_b0red(), 6, cat.gen(sym::h2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(BlowupStage(42, cat.class_b0red(), 6, cat.unit()), std::invalid_argument);
}

TEST_CASE("push_power of the first-center stage") {
    const int n = 3;
    Catalog cat(n);
    const BlowupStage& st = cat.stage_e1();

    CHECK(push_power(st, 0) == cat.unit());
    for (int j = 1; j < 2 * n; ++j) CHECK(push_power(st, j).is_zero());
    CHECK(push_power(st, 2 * n) == -cat.class_b0red());
    // s_1 of (1+h)^{-(2n+2)} is -(2n+2) h
    CHECK(push_power(st, 2 * n + 1) ==
          Rational(-(2 * n + 2)) * cat.gen(sym::h2) * cat.class_b0red());
    CHECK_THROWS_AS(push_power(st, -1), std::invalid_argument);
}

TEST_CASE("push_power purity") {
    for (int n : {3, 4}) {
        Catalog cat(n);
        for (const auto& stage : cat.stages())
            for (int j = 0; j <= 3 * n + 1; ++j) {
                GradedClass p = push_power(stage, j);
                int deg = 0;
                CHECK(p.is_homogeneous(&deg));
                if (!p.is_zero()) CHECK(deg == j);
            }
    }
}

TEST_CASE("supported_push") {
    Catalog cat(3);
    GradedClass h1 = cat.gen(sym::h1);
    CHECK(supported_push(cat.unit(), h1, sym::e1, 0) == h1 * cat.gen(sym::e1));
    CHECK(supported_push(cat.unit(), h1, sym::e1, 99).is_zero());
    CHECK(supported_push(cat.unit(), h1, sym::e1, -1).is_zero());

    // the strict-transform corrections decompose exactly as supported pushes
    const int n = 3;
    GradedClass g1 = cat.excess_one().chern() *
                     (cat.unit() + cat.gen(cat.lift_generator())).pow(n + 1).invert_unit();
    GradedClass g2 = cat.excess_two().chern() * (cat.unit() + cat.gen(sym::e1)).invert_unit();
    GradedClass corr1 = supported_push(g1, h1, sym::e1, n - 1);
    GradedClass corr2 = supported_push(g2, h1, sym::e2, n - 1);
    for (int i = 1; i <= 3; ++i)
        CHECK(cat.class_b(i) - corr1 - corr2 == cat.class_bdtilde(i));
}

TEST_CASE("eliminate basics") {
    const int n = 3;
    Catalog cat(n);
    const auto stages = cat.stages();
    const auto families = cat.disjoint_families();

    // classes without exceptional symbols pass through
    GradedClass plain = cat.gen(sym::h2, 3) + cat.gen(sym::h1) * cat.gen(sym::h3);
    CHECK(eliminate(plain, stages, families) == plain);

    // disjoint-center cross products die
    CHECK(eliminate(cat.gen(sym::e3_first) * cat.gen(sym::e3_first + 1), stages, families)
              .is_zero());

    // single-stage reduction matches push_power
    CHECK(eliminate(cat.gen(sym::e1, 2 * n), stages, families) == -cat.class_b0red());

    // the result never carries exceptional symbols
    GradedClass big = (cat.gen(sym::h2) + cat.gen(sym::e1) - cat.gen(sym::e2)).pow(2 * n + 1);
    GradedClass reduced = eliminate(big, stages, families);
    for (const auto& t : reduced.terms())
        for (int s = sym::e1; s < sym::count; ++s) CHECK(t.mono.exp[s] == 0);
}

TEST_CASE("eliminate consistency failures") {
    Catalog cat(3);
    // eliminating e1 before e2 makes the e2 stage reintroduce a finished symbol
    std::vector<BlowupStage> wrong{cat.stage_e1(), cat.stage_e2()};
    GradedClass poly = cat.gen(sym::e2, 4) * cat.gen(sym::e1, 2);
    CHECK_THROWS_AS(eliminate(poly, wrong, cat.disjoint_families()), std::logic_error);
}

TEST_CASE("pushforward suite") {
    for (int n : {3, 4, 5}) {
        for (const auto& r : pushforward_checks(n)) {
            INFO(r.name << ": " << r.detail);
            CHECK(r.passed);
        }
    }
}
