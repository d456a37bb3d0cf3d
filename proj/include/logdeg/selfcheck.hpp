#pragma once

#include "logdeg/charclass.hpp"
#include "logdeg/degree.hpp"
#include "logdeg/geometry.hpp"
#include "logdeg/pushforward.hpp"

#include <functional>
#include <string>
#include <vector>

// Structural consistency checks over the catalog and the pushforward engine.
// Everything here is exact: a check either holds identically or fails.

namespace logdeg {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace check_detail {

inline void run(std::vector<CheckResult>& out, const std::string& name,
                const std::function<bool()>& body) {
    CheckResult r{name, false, ""};
    try {
        r.passed = body();
        if (!r.passed) r.detail = "identity does not hold";
    } catch (const std::exception& e) {
        r.passed = false;
        r.detail = e.what();
    }
    out.push_back(std::move(r));
}

inline bool pure_of_codim(const GradedClass& c, int codim) {
    int d = 0;
    return c.is_homogeneous(&d) && !c.is_zero() && d == codim;
}

}  // namespace check_detail

// Chern/Segre consistency of every catalog bundle plus the twist formula
// against the split-bundle oracle.
inline std::vector<CheckResult> charclass_checks(int n) {
    using check_detail::run;
    std::vector<CheckResult> out;
    Catalog cat(n);
    const GradedClass one = cat.unit();

    std::vector<std::pair<std::string, const BundleClass*>> bundles{
        {"TX", &cat.tangent_x()},
        {"T_B0red", &cat.tangent_b0red()},
        {"N_B0red_X", &cat.normal_b0red_x()},
        {"Q", &cat.bundle_q()},
        {"N_B0red_B0", &cat.normal_b0red_b0()},
        {"N_B0pred_Xp", &cat.normal_b0pred_xp()},
        {"excess_E1", &cat.excess_one()},
        {"excess_E2", &cat.excess_two()},
        {"N_Z1_X", &cat.normal_z_x(1)},
        {"N_Z2_X", &cat.normal_z_x(2)},
        {"N_Z3_X", &cat.normal_z_x(3)}};
    for (const auto& [name, b] : bundles) {
        run(out, "c*s == 1 for " + name + " (n=" + std::to_string(n) + ")",
            [&, bp = b] { return segre(*bp) * bp->chern() == one; });
    }

    run(out, "Whitney: c(Q) c(N_B0red_B0) == c(N_B0red_X) (n=" + std::to_string(n) + ")", [&] {
        return cat.bundle_q().chern() * cat.normal_b0red_b0().chern() ==
               cat.normal_b0red_x().chern();
    });
    run(out, "closed form: c(N_B0red_X) == (1+g)^{2n+2} (n=" + std::to_string(n) + ")", [&] {
        return cat.normal_b0red_x().chern() ==
               (one + cat.gen(cat.lift_generator())).pow(2 * n + 2);
    });
    run(out, "whitney_quotient inverts: quotient * sub == total (n=" + std::to_string(n) + ")",
        [&] {
            BundleClass tx_restricted(3 * n + 1, cat.restrict_b0red(cat.tangent_x().chern()));
            return whitney_quotient(tx_restricted, cat.tangent_b0red()).chern() *
                       cat.tangent_b0red().chern() ==
                   tx_restricted.chern();
        });

    // twist vs split-bundle oracle, ranks 1..5 with symbolic roots.
    run(out, "twist matches split-bundle oracle (ranks <= 5)", [] {
        auto spec = make_ring({"a1", "a2", "a3", "a4", "a5", "t"}, {7, 7, 7, 7, 7, 7}, 6);
        GradedClass one5 = GradedClass::unit(spec);
        GradedClass t = GradedClass::generator(spec, "t");
        for (int r = 1; r <= 5; ++r) {
            GradedClass chern = one5;
            GradedClass expected = one5;
            for (int i = 0; i < r; ++i) {
                GradedClass a = GradedClass::generator(spec, "a" + std::to_string(i + 1));
                chern = chern * (one5 + a);
                expected = expected * (one5 + a + t);
            }
            if (!(twist(BundleClass(r, chern), t).chern() == expected)) return false;
        }
        return true;
    });
    run(out, "twist(twist(E,t),-t) == E over the catalog (n=" + std::to_string(n) + ")", [&] {
        GradedClass t = cat.gen(sym::h1) + cat.gen(sym::e1);
        return twist(twist(cat.bundle_q(), t), -t) == cat.bundle_q() &&
               twist(cat.bundle_q(), cat.zero()) == cat.bundle_q();
    });
    run(out, "twist composition: (E x L1) x L2 == E x (L1 L2) (n=" + std::to_string(n) + ")",
        [&] {
            GradedClass e1c = cat.gen(sym::e1), e2c = cat.gen(sym::e2);
            return twist(twist(cat.normal_z_x(3), -e1c), -e2c) ==
                   twist(cat.normal_z_x(3), -e1c - e2c);
        });
    return out;
}

// Purity, symmetry and recovery identities of the catalog classes.
inline std::vector<CheckResult> geometry_checks(int n) {
    using check_detail::pure_of_codim;
    using check_detail::run;
    std::vector<CheckResult> out;
    Catalog cat(n);
    const std::string tag = " (n=" + std::to_string(n) + ")";

    run(out, "purity of catalog classes" + tag, [&] {
        bool ok = pure_of_codim(cat.class_b0red(), 2 * n) &&
                  pure_of_codim(cat.class_b0pred(), n + 1);
        for (int i = 1; i <= 3; ++i)
            ok = ok && pure_of_codim(cat.class_b(i), n + 1) &&
                 pure_of_codim(cat.class_z(i), n) &&
                 pure_of_codim(cat.class_b_cap_b0red(i), 2 * n + 1) &&
                 pure_of_codim(cat.class_bdtilde(i), n + 1);
        return ok;
    });
    run(out, "restrict then lift is identity on the diagonal sub-ring" + tag, [&] {
        GradedClass c = (cat.unit() + cat.gen(sym::h1) + cat.gen(cat.lift_generator())).pow(3);
        return cat.lift_b0red(cat.restrict_b0red(c)) == c &&
               cat.restrict_b0red(cat.gen(sym::h2) - cat.gen(sym::h3)).is_zero();
    });
    run(out, "setting e-symbols to zero recovers [B_i] from its strict transform" + tag, [&] {
        std::map<std::string, GradedClass> to_zero;
        for (int s = sym::e1; s < sym::count; ++s)
            to_zero.emplace(cat.ring()->generator_name(s), cat.zero());
        for (int s = sym::h1; s <= sym::h4; ++s)
            to_zero.emplace(cat.ring()->generator_name(s), cat.gen(s));
        for (int i = 1; i <= 3; ++i)
            if (!(cat.class_bdtilde(i).substitute(to_zero, cat.ring()) == cat.class_b(i)))
                return false;
        return true;
    });
    run(out, "transposition symmetry of the component data" + tag, [&] {
        // For the transposition of factors (a b), build the catalog with the
        // fixed generator as lift: the correction terms are then invariant
        // and the cycle classes of the components permute exactly. The
        // ambient Segre series depend on which member of a diagonal pair
        // carries the lift, so they are compared against the diagonal class,
        // which absorbs the relabeling (h_a [D_ab] = h_b [D_ab]).
        static constexpr std::array<std::array<int, 3>, 3> transpositions{
            {{2, 1, 3}, {3, 2, 1}, {1, 3, 2}}};
        static constexpr int fixed_gen[3] = {sym::h4, sym::h3, sym::h2};
        for (int k = 0; k < 3; ++k) {
            const auto& sig = transpositions[k];
            Catalog fixed(n, fixed_gen[k]);
            std::map<std::string, GradedClass> images;
            images.emplace("h1", fixed.gen(sym::h1));
            images.emplace("e1", fixed.gen(sym::e1));
            images.emplace("e2", fixed.gen(sym::e2));
            for (int i = 1; i <= 3; ++i) {
                images.emplace(fixed.ring()->generator_name(sym::h2 + i - 1),
                               fixed.gen(sym::h2 + sig[i - 1] - 1));
                images.emplace(fixed.ring()->generator_name(sym::e3_first + i - 1),
                               fixed.gen(sym::e3_first + sig[i - 1] - 1));
            }
            auto sub = [&](const GradedClass& c) { return c.substitute(images, fixed.ring()); };
            for (int i = 1; i <= 3; ++i) {
                int j = sig[i - 1];
                if (!(sub(fixed.class_b(i)) == fixed.class_b(j))) return false;
                if (!(sub(fixed.class_z(i)) == fixed.class_z(j))) return false;
                if (!(sub(fixed.class_b_cap_b0red(i)) == fixed.class_b_cap_b0red(j)))
                    return false;
                if (!(sub(fixed.class_bdtilde(i)) == fixed.class_bdtilde(j))) return false;
                if (!(sub(fixed.normal_z_x(i).chern()) * fixed.class_z(j) ==
                      fixed.normal_z_x(j).chern() * fixed.class_z(j)))
                    return false;
                if (!(sub(fixed.segre_bdtilde_x2(i)) * fixed.class_z(j) ==
                      fixed.segre_bdtilde_x2(j) * fixed.class_z(j)))
                    return false;
            }
        }
        return true;
    });
    run(out, "rank bookkeeping of the normal bundle tower" + tag, [&] {
        return cat.normal_b0red_x().rank() == 2 * n && cat.bundle_q().rank() == n &&
               cat.normal_b0red_b0().rank() == n && cat.normal_b0pred_xp().rank() == n + 1 &&
               cat.excess_one().rank() == 2 * n - 1 && cat.excess_two().rank() == n &&
               cat.normal_z_x(1).rank() == n;
    });
    return out;
}

// Unit behaviour of the pushforward rules.
inline std::vector<CheckResult> pushforward_checks(int n) {
    using check_detail::pure_of_codim;
    using check_detail::run;
    std::vector<CheckResult> out;
    Catalog cat(n);
    const std::string tag = " (n=" + std::to_string(n) + ")";
    const auto stages = cat.stages();
    const auto families = cat.disjoint_families();

    run(out, "push of e1^j vanishes for 0 < j < 2n" + tag, [&] {
        for (int j = 1; j < 2 * n; ++j)
            if (!push_power(cat.stage_e1(), j).is_zero()) return false;
        return true;
    });
    run(out, "push of e1^{2n} is -[B0red]" + tag,
        [&] { return push_power(cat.stage_e1(), 2 * n) == -cat.class_b0red(); });
    run(out, "push of e1^{2n+1} is -(2n+2) g [B0red]" + tag, [&] {
        return push_power(cat.stage_e1(), 2 * n + 1) ==
               cat.gen(cat.lift_generator()) * cat.class_b0red() * Rational(-(2 * n + 2));
    });
    run(out, "purity: push of e^j is pure of codimension j" + tag, [&] {
        for (const auto& stage : stages)
            for (int j = 0; j <= 3 * n + 1; ++j) {
                GradedClass p = push_power(stage, j);
                int d = 0;
                if (!p.is_homogeneous(&d)) return false;
                if (!p.is_zero() && d != j) return false;
            }
        return true;
    });
    run(out, "disjoint centers annihilate cross-products" + tag, [&] {
        GradedClass cross = cat.gen(sym::e3_first) * cat.gen(sym::e3_first + 1);
        return eliminate(cross, stages, families).is_zero();
    });
    run(out, "projection formula on h-monomial times e-power" + tag, [&] {
        GradedClass mono = cat.gen(sym::h2, 2) * cat.gen(sym::h3);
        for (int j : {n + 1, n + 2, 2 * n, 2 * n + 1}) {
            GradedClass poly = mono * cat.gen(sym::e1, j);
            if (!(eliminate(poly, stages, families) == mono * push_power(cat.stage_e1(), j)))
                return false;
        }
        return true;
    });
    run(out, "elimination order of the disjoint stages is irrelevant" + tag, [&] {
        GradedClass sample =
            (cat.gen(sym::h2) + cat.gen(sym::e3_first) + cat.gen(sym::e3_first + 2)).pow(n + 2) *
            (cat.gen(sym::h1) + cat.gen(sym::e3_first + 1)).pow(2);
        std::vector<BlowupStage> reordered{cat.stage_e3(3), cat.stage_e3(1), cat.stage_e3(2),
                                           cat.stage_e2(), cat.stage_e1()};
        return eliminate(sample, stages, families) == eliminate(sample, reordered, families);
    });
    run(out, "eliminate is linear" + tag, [&] {
        GradedClass a = (cat.gen(sym::h2) + cat.gen(sym::e1)).pow(2 * n + 1);
        GradedClass b = (cat.gen(sym::h3) - cat.gen(sym::e2) + cat.gen(sym::e1)).pow(n + 3);
        return eliminate(a + b, stages, families) ==
               eliminate(a, stages, families) + eliminate(b, stages, families);
    });
    return out;
}

inline std::vector<CheckResult> run_selfcheck(int n) {
    std::vector<CheckResult> out;
    for (auto& r : charclass_checks(n)) out.push_back(std::move(r));
    for (auto& r : geometry_checks(n)) out.push_back(std::move(r));
    for (auto& r : pushforward_checks(n)) out.push_back(std::move(r));
    return out;
}

}  // namespace logdeg
