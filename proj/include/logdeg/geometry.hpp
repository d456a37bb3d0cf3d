#pragma once

#include "logdeg/charclass.hpp"
#include "logdeg/pushforward.hpp"
#include "logdeg/ring.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Catalog of the cycle classes and vector bundles of the blow-up tower that
// resolves the rational parametrization of the space of logarithmic 1-forms
// with three linear poles on P^n.
//
// Ambient space: X = P^1 x P^n x P^n x P^n with hyperplane classes h1..h4.
// The resolution blows up, in order,
//   1. the small diagonal locus B0red = P^1 x P^n            (codim 2n, class e1),
//   2. the projectivized subbundle B0pred inside the first
//      exceptional divisor                                    (codim n+1, class e2),
//   3. the three disjoint double strict transforms of the
//      pairwise-coincidence loci B1, B2, B3                   (codim n+1, classes e3_i).
//
// Everything is expressed in the formal symbol ring
// Q[h1..h4, e1, e2, e3_1..e3_3] truncated at total degree 3n+1, with classes
// living on subvarieties represented by ambient lifts through the diagonal
// identification h2 = h3 = h4 (the lift target generator is configurable, the
// final integrals do not depend on it).

namespace logdeg {

namespace sym {
constexpr int h1 = 0;
constexpr int h2 = 1;
constexpr int h3 = 2;
constexpr int h4 = 3;
constexpr int e1 = 4;
constexpr int e2 = 5;
constexpr int e3_first = 6;  // e3_1, e3_2, e3_3 occupy 6, 7, 8
constexpr int count = 9;
}  // namespace sym

class Catalog {
public:
    // lift_gen: the generator index (h2, h3 or h4) ambient lifts of diagonal
    // classes are written in.
    explicit Catalog(int n, int lift_gen = sym::h2) : n_(n), lift_gen_(lift_gen) {
        if (n < 3) throw std::invalid_argument("catalog: requires n >= 3");
        if (lift_gen < sym::h2 || lift_gen > sym::h4)
            throw std::invalid_argument("catalog: lift generator must be one of h2, h3, h4");
        const int cap = 3 * n + 1;
        ring_ = make_ring({"h1", "h2", "h3", "h4", "e1", "e2", "e3_1", "e3_2", "e3_3"},
                          {2, n + 1, n + 1, n + 1, cap + 1, cap + 1, cap + 1, cap + 1, cap + 1},
                          cap);
        build();
    }

    int n() const { return n_; }
    int lift_generator() const { return lift_gen_; }
    const RingSpecPtr& ring() const { return ring_; }

    GradedClass gen(int index, int power = 1) const {
        return GradedClass::generator(ring_, ring_->generator_name(index), power);
    }
    GradedClass unit() const { return GradedClass::unit(ring_); }
    GradedClass zero() const { return GradedClass::zero(ring_); }

    // --- bundles -----------------------------------------------------------
    const BundleClass& tangent_x() const { return *tangent_x_; }
    const BundleClass& tangent_b0red() const { return *tangent_b0red_; }
    const BundleClass& normal_b0red_x() const { return *normal_b0red_x_; }
    const BundleClass& bundle_q() const { return *bundle_q_; }
    const BundleClass& normal_b0red_b0() const { return *normal_b0red_b0_; }
    const BundleClass& normal_b0pred_xp() const { return *normal_b0pred_xp_; }
    const BundleClass& excess_one() const { return *excess_one_; }
    const BundleClass& excess_two() const { return *excess_two_; }
    const BundleClass& normal_z_x(int i) const { return *normal_z_x_.at(idx(i)); }

    // --- cycle classes -----------------------------------------------------
    const GradedClass& class_b0red() const { return *b0red_; }
    const GradedClass& class_b0pred() const { return *b0pred_; }
    const GradedClass& class_b(int i) const { return *b_[idx(i)]; }
    const GradedClass& class_z(int i) const { return *z_[idx(i)]; }
    const GradedClass& class_b_cap_b0red(int i) const { return *b_cap_b0red_[idx(i)]; }
    const GradedClass& class_bdtilde(int i) const { return *bdtilde_[idx(i)]; }
    const GradedClass& segre_bdtilde_x2(int i) const { return *segre_bdtilde_[idx(i)]; }

    // --- blow-up stages, in elimination order e3_1..e3_3, e2, e1 ------------
    const BlowupStage& stage_e3(int i) const { return *stage_e3_[idx(i)]; }
    const BlowupStage& stage_e2() const { return *stage_e2_; }
    const BlowupStage& stage_e1() const { return *stage_e1_; }

    std::vector<BlowupStage> stages() const {
        return {stage_e3(1), stage_e3(2), stage_e3(3), *stage_e2_, *stage_e1_};
    }
    std::vector<std::vector<int>> disjoint_families() const {
        return {{sym::e3_first, sym::e3_first + 1, sym::e3_first + 2}};
    }

    // Restriction to the small diagonal locus: h2, h3, h4 all map to the lift
    // generator. Classes carrying exceptional symbols do not restrict.
    GradedClass restrict_b0red(const GradedClass& c) const {
        for (const auto& t : c.terms())
            for (int s = sym::e1; s < sym::count; ++s)
                if (t.mono.exp[s] > 0)
                    throw std::invalid_argument("restrict_b0red: class carries exceptional symbols");
        std::map<std::string, GradedClass> images;
        images.emplace("h1", gen(sym::h1));
        for (int g = sym::h2; g <= sym::h4; ++g)
            images.emplace(ring_->generator_name(g), gen(lift_gen_));
        return c.substitute(images, ring_);
    }

    // Ambient lift of a class written in h1 and the lift generator. The lift
    // convention embeds the diagonal sub-ring identically, so this is the
    // identity map; it exists to make restrict/lift round trips explicit.
    GradedClass lift_b0red(const GradedClass& c) const { return c; }

    // The catalog with the roles of the three P^n factors permuted by sigma
    // (a permutation of {1,2,3}): h_{1+i} -> h_{1+sigma(i)}, e3_i -> e3_sigma(i).
    Catalog permuted(const std::array<int, 3>& sigma) const {
        check_permutation(sigma);
        Catalog out(n_, sym::h2 + sigma[lift_gen_ - sym::h2] - 1);
        std::map<std::string, GradedClass> images;
        images.emplace("h1", out.gen(sym::h1));
        images.emplace("e1", out.gen(sym::e1));
        images.emplace("e2", out.gen(sym::e2));
        for (int i = 1; i <= 3; ++i) {
            images.emplace(ring_->generator_name(sym::h2 + i - 1), out.gen(sym::h2 + sigma[i - 1] - 1));
            images.emplace(ring_->generator_name(sym::e3_first + i - 1),
                           out.gen(sym::e3_first + sigma[i - 1] - 1));
        }
        auto sub = [&](const GradedClass& c) { return c.substitute(images, out.ring_); };
        auto sub_bundle = [&](const BundleClass& b) { return BundleClass(b.rank(), sub(b.chern())); };

        out.tangent_x_ = sub_bundle(*tangent_x_);
        out.tangent_b0red_ = sub_bundle(*tangent_b0red_);
        out.normal_b0red_x_ = sub_bundle(*normal_b0red_x_);
        out.bundle_q_ = sub_bundle(*bundle_q_);
        out.normal_b0red_b0_ = sub_bundle(*normal_b0red_b0_);
        out.normal_b0pred_xp_ = sub_bundle(*normal_b0pred_xp_);
        out.excess_one_ = sub_bundle(*excess_one_);
        out.excess_two_ = sub_bundle(*excess_two_);
        out.b0red_ = sub(*b0red_);
        out.b0pred_ = sub(*b0pred_);
        for (int i = 1; i <= 3; ++i) {
            int j = sigma[i - 1];
            out.b_[out.idx(j)] = sub(*b_[idx(i)]);
            out.z_[out.idx(j)] = sub(*z_[idx(i)]);
            out.b_cap_b0red_[out.idx(j)] = sub(*b_cap_b0red_[idx(i)]);
            out.bdtilde_[out.idx(j)] = sub(*bdtilde_[idx(i)]);
            out.segre_bdtilde_[out.idx(j)] = sub(*segre_bdtilde_[idx(i)]);
            out.normal_z_x_[out.idx(j)] = sub_bundle(*normal_z_x_[idx(i)]);
        }
        out.make_stages();
        return out;
    }

    // Named entries in serialization form, for audit dumps.
    std::vector<std::pair<std::string, std::string>> entries() const {
        std::vector<std::pair<std::string, std::string>> out;
        auto cls = [&](const std::string& name, const GradedClass& c) {
            out.emplace_back(name, c.str());
        };
        auto bun = [&](const std::string& name, const BundleClass& b) {
            out.emplace_back(name, "rank " + std::to_string(b.rank()) + ", c = " + b.chern().str());
        };
        bun("TX", *tangent_x_);
        bun("T_B0red", *tangent_b0red_);
        bun("N_B0red_X", *normal_b0red_x_);
        bun("Q", *bundle_q_);
        bun("N_B0red_B0", *normal_b0red_b0_);
        bun("N_B0pred_Xp", *normal_b0pred_xp_);
        bun("excess_E1", *excess_one_);
        bun("excess_E2", *excess_two_);
        cls("B0red", *b0red_);
        cls("B0pred", *b0pred_);
        for (int i = 1; i <= 3; ++i) {
            std::string s = std::to_string(i);
            cls("B" + s, *b_[idx(i)]);
            cls("Z" + s, *z_[idx(i)]);
            bun("N_Z" + s + "_X", *normal_z_x_[idx(i)]);
            cls("B" + s + "_cap_B0red", *b_cap_b0red_[idx(i)]);
            cls("Bdtilde_" + s, *bdtilde_[idx(i)]);
            cls("segre_N_Bdtilde" + s + "_X2", *segre_bdtilde_[idx(i)]);
        }
        return out;
    }

private:
    static int idx(int i) {
        if (i < 1 || i > 3) throw std::invalid_argument("catalog: component index must be 1..3");
        return i - 1;
    }

    static void check_permutation(const std::array<int, 3>& sigma) {
        std::array<bool, 3> seen{};
        for (int v : sigma) {
            if (v < 1 || v > 3 || seen[v - 1])
                throw std::invalid_argument("catalog: not a permutation of {1,2,3}");
            seen[v - 1] = true;
        }
    }

    GradedClass one_plus(int g) const { return unit() + gen(g); }

    // Class of the diagonal of P^n x P^n sitting in the factors with
    // hyperplane classes a and b: sum_k a^k b^{n-k}.
    GradedClass diagonal_pair(int a, int b) const {
        std::vector<Term> terms;
        for (int k = 0; k <= n_; ++k) {
            Monomial m;
            m.exp[a] = static_cast<std::uint8_t>(k);
            m.exp[b] = static_cast<std::uint8_t>(n_ - k);
            terms.push_back({m, Rational(1)});
        }
        return GradedClass::from_terms(ring_, std::move(terms));
    }

    void build() {
        const int n = n_;
        const int g = lift_gen_;

        // c(TX) = (1+h1)^2 (1+h2)^{n+1} (1+h3)^{n+1} (1+h4)^{n+1}, rank 3n+1.
        GradedClass ctx = one_plus(sym::h1).pow(2);
        for (int h = sym::h2; h <= sym::h4; ++h) ctx = ctx * one_plus(h).pow(n + 1);
        tangent_x_ = BundleClass(3 * n + 1, ctx);

        // B0red = P^1 x P^n embedded by the small diagonal:
        // [B0red] = sum_{0<=i,j<=n} h2^i h3^j h4^{2n-i-j}.
        {
            std::vector<Term> terms;
            for (int i = 0; i <= n; ++i)
                for (int j = 0; j <= n; ++j) {
                    int k = 2 * n - i - j;
                    if (k < 0 || k > n) continue;
                    Monomial m;
                    m.exp[sym::h2] = static_cast<std::uint8_t>(i);
                    m.exp[sym::h3] = static_cast<std::uint8_t>(j);
                    m.exp[sym::h4] = static_cast<std::uint8_t>(k);
                    terms.push_back({m, Rational(1)});
                }
            b0red_ = GradedClass::from_terms(ring_, std::move(terms));
        }

        // T(B0red) = T P^1 (+) T P^n under the diagonal identification.
        tangent_b0red_ = BundleClass(n + 1, one_plus(sym::h1).pow(2) * one_plus(g).pow(n + 1));

        // 0 -> T(B0red) -> TX| -> N_{B0red} X -> 0, rank 2n.
        BundleClass tx_restricted(3 * n + 1, restrict_b0red(ctx));
        normal_b0red_x_ = whitney_quotient(tx_restricted, *tangent_b0red_);

        // Q = TX| / TB0| = T P^n (x) O(h1): rank n quotient of the tangent of
        // the non-reduced base component.
        bundle_q_ = twist(tangent_projective(ring_, ring_->generator_name(g), n), gen(sym::h1));

        // 0 -> TB0| -> TX| -> Q -> 0 and 0 -> T(B0red) -> TB0| -> N_{B0red} B0 -> 0.
        BundleClass tangent_b0(2 * n + 1, tx_restricted.chern() * bundle_q_->chern().invert_unit());
        normal_b0red_b0_ = whitney_quotient(tangent_b0, *tangent_b0red_);

        // B0pred = P(N_{B0red} B0) inside E' = P(N_{B0red} X); its ambient
        // class is e1 * sum_i c_i(Q) (-e1)^{n-i} (tautological class = -e1).
        {
            GradedClass acc = zero();
            GradedClass minus_e1 = -gen(sym::e1);
            for (int i = 0; i <= n; ++i)
                acc += bundle_q_->chern().graded_part(i) * minus_e1.pow(n - i);
            b0pred_ = acc * gen(sym::e1);
        }

        // 0 -> N_{B0pred} E' -> N_{B0pred} X' -> N_{E'} X'| -> 0 with
        // N_{B0pred} E' = Q (x) O_{E'}(1) and N_{E'} X' = O_{E'}(-1):
        // c = twist(Q, -e1) * (1 + e1), rank n+1.
        normal_b0pred_xp_ = BundleClass(
            n + 1, twist(*bundle_q_, -gen(sym::e1)).chern() * (unit() + gen(sym::e1)));

        // Excess bundles of the two blow-up formula applications.
        excess_one_ = whitney_quotient(*normal_b0red_x_, BundleClass(1, unit() + gen(sym::e1)));
        excess_two_ = whitney_quotient(*normal_b0pred_xp_, BundleClass(1, unit() + gen(sym::e2)));

        // Pairwise-coincidence data. Component i lives on the diagonal of the
        // two factors other than i.
        static constexpr int pair_first[3] = {sym::h3, sym::h2, sym::h2};
        static constexpr int pair_second[3] = {sym::h4, sym::h4, sym::h3};

        // Strict-transform corrections. Writing the pushed-forward integrands
        // as ambient lifts, the class of a correction supported over the
        // codimension-1 slice of B0red cut by h1 is
        //   e * h1 * { c(excess) * s(normal data) }_{n-1}.
        GradedClass corr1 = supported_push(
            excess_one_->chern() * one_plus(g).pow(n + 1).invert_unit(), gen(sym::h1), sym::e1,
            n - 1);
        GradedClass corr2 = supported_push(
            excess_two_->chern() * one_plus(sym::e1).invert_unit(), gen(sym::h1), sym::e2, n - 1);

        for (int i = 1; i <= 3; ++i) {
            int a = pair_first[i - 1], b = pair_second[i - 1];
            z_[idx(i)] = diagonal_pair(a, b);
            b_[idx(i)] = gen(sym::h1) * (*z_[idx(i)]);
            b_cap_b0red_[idx(i)] = gen(sym::h1) * (*b0red_);
            normal_z_x_[idx(i)] = BundleClass(n, one_plus(a).pow(n + 1));
            // s(N_{Bdtilde_i} X'') = s(N_{Z_i} X (x) O(-e1) (x) O(-e2));
            // the s(N_{B_i'} Z_i') factor is identically 1.
            segre_bdtilde_[idx(i)] =
                segre(twist(twist(*normal_z_x_[idx(i)], -gen(sym::e1)), -gen(sym::e2)));
            bdtilde_[idx(i)] = *b_[idx(i)] - corr1 - corr2;
        }

        make_stages();
    }

    void make_stages() {
        const int n = n_;
        for (int i = 1; i <= 3; ++i)
            stage_e3_[idx(i)] =
                BlowupStage(sym::e3_first + i - 1, *bdtilde_[idx(i)], n + 1, *segre_bdtilde_[idx(i)]);
        stage_e2_ = BlowupStage(sym::e2, *b0pred_, n + 1, segre(*normal_b0pred_xp_));
        stage_e1_ = BlowupStage(sym::e1, *b0red_, 2 * n, segre(*normal_b0red_x_));
    }

    int n_;
    int lift_gen_;
    RingSpecPtr ring_;

    // Deferred members, built once in build().
    std::optional<BundleClass> tangent_x_, tangent_b0red_, normal_b0red_x_, bundle_q_,
        normal_b0red_b0_, normal_b0pred_xp_, excess_one_, excess_two_;
    std::optional<GradedClass> b0red_, b0pred_;
    std::array<std::optional<GradedClass>, 3> b_, z_, b_cap_b0red_, bdtilde_, segre_bdtilde_;
    std::array<std::optional<BundleClass>, 3> normal_z_x_;
    std::array<std::optional<BlowupStage>, 3> stage_e3_;
    std::optional<BlowupStage> stage_e2_, stage_e1_;
};

}  // namespace logdeg
