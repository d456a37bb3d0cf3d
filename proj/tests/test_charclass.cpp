#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "logdeg/charclass.hpp"
#include "logdeg/geometry.hpp"

using namespace logdeg;

namespace {

// the Chow ring of P^2 with an extra degree-1 twist class
RingSpecPtr plane_ring() { return make_ring({"h", "t"}, {3, 7}, 6); }

GradedClass g(const RingSpecPtr& spec, std::string_view name, int power = 1) {
    return GradedClass::generator(spec, name, power);
}

}  // namespace

TEST_CASE("bundle invariants") {
    auto spec = plane_ring();
    CHECK_THROWS_AS(BundleClass(-1, GradedClass::unit(spec)), std::invalid_argument);
    CHECK_THROWS_AS(BundleClass(2, g(spec, "h")), std::invalid_argument);
}

TEST_CASE("segre basics") {
    auto spec = make_ring({"h2"}, {4}, 10);
    GradedClass one = GradedClass::unit(spec);
    GradedClass h2 = g(spec, "h2");

    BundleClass line(1, one + h2);
    CHECK(segre(line) == one - h2 + h2.pow(2) - h2.pow(3));

    // rank 2n bundle with c = (1+h)^{2n+2} at n = 3
    BundleClass nb(6, (one + h2).pow(8));
    GradedClass s = segre(nb);
    CHECK(s == one - Rational(8) * h2 + Rational(36) * h2.pow(2) - Rational(120) * h2.pow(3));
    CHECK(s * nb.chern() == one);

    CHECK(segre(BundleClass(4, one)) == one);
}

TEST_CASE("whitney_quotient") {
    auto spec = plane_ring();
    GradedClass one = GradedClass::unit(spec);
    GradedClass h = g(spec, "h");

    BundleClass total(2, (one + h).pow(2));
    BundleClass sub(1, one + h);
    BundleClass q = whitney_quotient(total, sub);
    CHECK(q.rank() == 1);
    CHECK(q.chern() == one + h);

    CHECK_THROWS_AS(whitney_quotient(sub, total), std::invalid_argument);
    CHECK(whitney_quotient(total, total).rank() == 0);
    CHECK(whitney_quotient(total, total).chern() == one);

    // the catalog instance: (1+h1)^2 (1+h)^{12} / (1+h1)^2 (1+h)^4 = (1+h)^8
    auto spec4 = make_ring({"h1", "h"}, {2, 4}, 10);
    GradedClass one4 = GradedClass::unit(spec4);
    GradedClass h1 = g(spec4, "h1"), hh = g(spec4, "h");
    BundleClass tx(10, (one4 + h1).pow(2) * (one4 + hh).pow(12));
    BundleClass tb(4, (one4 + h1).pow(2) * (one4 + hh).pow(4));
    BundleClass nq = whitney_quotient(tx, tb);
    CHECK(nq.rank() == 6);
    CHECK(nq.chern() == (one4 + hh).pow(8));
    CHECK(nq.chern() * tb.chern() == tx.chern());
}

TEST_CASE("twist examples") {
    auto spec = plane_ring();
    GradedClass one = GradedClass::unit(spec);
    GradedClass h = g(spec, "h"), t = g(spec, "t");

    // line bundle: c1 just shifts
    CHECK(twist(BundleClass(1, one + h), t).chern() == one + h + t);

    // tangent bundle of the plane against the Euler-sequence oracle:
    // c(TP^2 (x) L) = (1+h+t)^3 / (1+t)
    BundleClass tp2(2, one + Rational(3) * h + Rational(3) * h.pow(2));
    BundleClass tw = twist(tp2, t);
    GradedClass expected = one + (Rational(3) * h + Rational(2) * t) +
                           (Rational(3) * h.pow(2) + Rational(3) * h * t + t.pow(2));
    CHECK(tw.chern().graded_part(0) + tw.chern().graded_part(1) + tw.chern().graded_part(2) ==
          expected);
    GradedClass euler = (one + h + t).pow(3) * (one + t).invert_unit();
    CHECK(tw.chern() == euler);

    CHECK(twist(tp2, GradedClass::zero(spec)) == tp2);
    CHECK_THROWS_AS(twist(tp2, one + h), std::invalid_argument);
    CHECK_THROWS_AS(twist(tp2, h.pow(2)), std::invalid_argument);
}

TEST_CASE("twist round trip and split oracle") {
    auto spec = make_ring({"a1", "a2", "a3", "a4", "a5", "t"}, {7, 7, 7, 7, 7, 7}, 6);
    GradedClass one = GradedClass::unit(spec);
    GradedClass t = g(spec, "t");
    for (int r = 1; r <= 5; ++r) {
        GradedClass chern = one, expected = one;
        for (int i = 0; i < r; ++i) {
            GradedClass a = g(spec, "a" + std::to_string(i + 1));
            chern = chern * (one + a);
            expected = expected * (one + a + t);
        }
        BundleClass e(r, chern);
        CHECK(twist(e, t).chern() == expected);
        CHECK(twist(twist(e, t), -t) == e);
    }
}

TEST_CASE("tangent_projective") {
    // on P^1 the square of the hyperplane class vanishes
    auto line_spec = make_ring({"h"}, {2}, 10);
    BundleClass l = tangent_projective(line_spec, "h", 1);
    CHECK(l.rank() == 1);
    CHECK(l.chern() ==
          GradedClass::unit(line_spec) + Rational(2) * g(line_spec, "h"));

    auto spec = make_ring({"h"}, {4}, 10);
    GradedClass one = GradedClass::unit(spec);
    GradedClass h = g(spec, "h");
    BundleClass p3 = tangent_projective(spec, "h", 3);
    CHECK(p3.rank() == 3);
    CHECK(p3.chern() ==
          one + Rational(4) * h + Rational(6) * h.pow(2) + Rational(4) * h.pow(3));

    CHECK_THROWS_AS(tangent_projective(spec, "h", 0), std::invalid_argument);

    // product rule agreement with the catalog tangent class
    Catalog cat(3);
    GradedClass prod = tangent_projective(cat.ring(), "h1", 1).chern();
    for (auto name : {"h2", "h3", "h4"})
        prod = prod * tangent_projective(cat.ring(), name, 3).chern();
    CHECK(prod == cat.tangent_x().chern());
}
