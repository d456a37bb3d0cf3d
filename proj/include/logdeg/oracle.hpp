#pragma once

#include "logdeg/logforms.hpp"
#include "logdeg/parallel.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

// Randomized property suites over the differential-form layer. Instances are
// drawn deterministically from a seed with small integer coefficients, so
// every run is reproducible and all arithmetic stays exact.

namespace logdeg {

constexpr std::uint64_t kDefaultOracleSeed = 20240817;

struct PropertyReport {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failed = 0;
    std::vector<std::string> counterexamples;  // capped; first few failures

    PropertyReport() = default;
    explicit PropertyReport(std::string name_) : name(std::move(name_)) {}

    bool passed() const { return failed == 0; }
    void record(bool ok, const std::string& instance) {
        ++checked;
        if (!ok) {
            ++failed;
            if (counterexamples.size() < 5) counterexamples.push_back(instance);
        }
    }
};

struct OracleConfig {
    std::uint64_t seed = kDefaultOracleSeed;
    int count = 500;
    int n_min = 3;
    int n_max = 5;
    int workers = 1;
};

namespace oracle_detail {

// Deterministic across standard library implementations, unlike
// std::uniform_int_distribution.
inline int draw(std::mt19937_64& rng, int lo, int hi) {
    return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline Poly random_linear(std::mt19937_64& rng, int nvars, bool nonzero = true) {
    for (;;) {
        Poly p(nvars);
        for (int i = 0; i < nvars; ++i) {
            int c = draw(rng, -4, 4);
            if (c != 0) p += Poly::variable(nvars, i) * Rational(c);
        }
        if (!nonzero || !p.is_zero()) return p;
    }
}

inline std::array<Rational, 3> random_lambda(std::mt19937_64& rng) {
    for (;;) {
        int a = draw(rng, -4, 4), b = draw(rng, -4, 4);
        if (a == 0 && b == 0) continue;
        return {Rational(a), Rational(b), Rational(-a - b)};
    }
}

inline std::array<Rational, 3> random_dir_lambda(std::mt19937_64& rng) {
    int a = draw(rng, -4, 4), b = draw(rng, -4, 4);
    return {Rational(a), Rational(b), Rational(-a - b)};
}

// A random point of X, either generic or constructed inside one of the four
// base-locus components (which one is part of the draw).
inline LinearTriple random_point(std::mt19937_64& rng, int nvars) {
    int kind = draw(rng, 0, 4);  // 0: generic, 1..4: B0..B3
    if (kind == 0) {
        return LinearTriple(random_lambda(rng),
                            {random_linear(rng, nvars), random_linear(rng, nvars),
                             random_linear(rng, nvars)});
    }
    if (kind == 1) {
        Poly g = random_linear(rng, nvars);
        int s1 = draw(rng, 1, 3), s2 = draw(rng, 1, 3), s3 = draw(rng, 1, 3);
        return LinearTriple(random_lambda(rng),
                            {g * Rational(s1), g * Rational(s2), g * Rational(s3)});
    }
    // B_i: the two poles other than i coincide (up to scale) and the weight
    // vector is a multiple of the matching vanishing pattern.
    int i = kind - 2;  // 0-based distinguished index
    Poly g = random_linear(rng, nvars);
    Poly other(nvars);
    do {
        other = random_linear(rng, nvars);
    } while (logdeg::detail::proportional(other, g));
    int s = 0;
    while (s == 0) s = draw(rng, -3, 3);
    std::array<Rational, 3> lambda{Rational(0), Rational(0), Rational(0)};
    std::array<Poly, 3> f{Poly(nvars), Poly(nvars), Poly(nvars)};
    int pos = 0;
    for (int k = 0; k < 3; ++k) {
        if (k == i) {
            f[k] = other;
        } else {
            f[k] = g * Rational(draw(rng, 1, 3));
            lambda[k] = Rational(pos == 0 ? s : -s);
            ++pos;
        }
    }
    return LinearTriple(lambda, f);
}

inline LinearTriple random_base_locus_point(std::mt19937_64& rng, int nvars) {
    for (;;) {
        LinearTriple t = random_point(rng, nvars);
        if (base_locus_component(t) != BaseLocusTag::none) return t;
    }
}

// Base point on the fully-coincident component with equal representatives,
// as required by the tangent-space characterization checks.
inline LinearTriple random_b0_point(std::mt19937_64& rng, int nvars) {
    Poly g = random_linear(rng, nvars);
    return LinearTriple(random_lambda(rng), {g, g, g});
}

inline Perturbation random_perturbation(std::mt19937_64& rng, const LinearTriple& base) {
    const int nvars = base.nvars();
    return Perturbation(base, random_dir_lambda(rng),
                        {random_linear(rng, nvars, false), random_linear(rng, nvars, false),
                         random_linear(rng, nvars, false)});
}

struct VandermondeInstance {
    Poly f0;
    std::array<Rational, 3> lambda;
    std::array<Poly, 3> fp;
};

// Constructs a valid instance of the dichotomy hypotheses: either all three
// directions congruent mod F0, or a congruent pair with opposite weights;
// every direction is then jittered by a multiple of F0.
inline VandermondeInstance random_vandermonde(std::mt19937_64& rng, int nvars) {
    VandermondeInstance inst{random_linear(rng, nvars), {}, {Poly(nvars), Poly(nvars), Poly(nvars)}};
    if (draw(rng, 0, 1) == 0) {
        inst.lambda = random_lambda(rng);
        Poly g = random_linear(rng, nvars, false);
        for (int i = 0; i < 3; ++i) inst.fp[i] = g;
    } else {
        int i = draw(rng, 0, 2);
        int s = 0;
        while (s == 0) s = draw(rng, -3, 3);
        Poly g = random_linear(rng, nvars, false);
        int pos = 0;
        for (int k = 0; k < 3; ++k) {
            if (k == i) {
                inst.fp[k] = random_linear(rng, nvars, false);
            } else {
                inst.fp[k] = g;
                inst.lambda[k] = Rational(pos == 0 ? s : -s);
                ++pos;
            }
        }
    }
    for (int k = 0; k < 3; ++k)
        inst.fp[k] += inst.f0 * Rational(draw(rng, -2, 2));
    return inst;
}

template <class Body>
std::vector<PropertyReport> run_sharded(const OracleConfig& cfg,
                                        const std::vector<std::string>& names, Body body) {
    int workers = std::max(1, cfg.workers);
    std::vector<std::vector<PropertyReport>> shards(workers);
    parallel_chunks(static_cast<std::size_t>(cfg.count), workers,
                    [&](int c, std::size_t b, std::size_t e) {
                        std::vector<PropertyReport>& rep = shards[c];
                        for (const auto& name : names) rep.push_back(PropertyReport(name));
                        std::mt19937_64 rng(cfg.seed + 0x9e3779b97f4a7c15ULL * c);
                        for (std::size_t k = b; k < e; ++k) body(rep, rng);
                    });
    std::vector<PropertyReport> merged;
    for (const auto& name : names) merged.push_back(PropertyReport(name));
    for (const auto& shard : shards)
        for (std::size_t i = 0; i < shard.size(); ++i) {
            merged[i].checked += shard[i].checked;
            merged[i].failed += shard[i].failed;
            for (const auto& ce : shard[i].counterexamples)
                if (merged[i].counterexamples.size() < 5) merged[i].counterexamples.push_back(ce);
        }
    return merged;
}

}  // namespace oracle_detail

// Contraction, integrability, logarithmic-derivative and orbit identities,
// plus the exact vanishing criterion: omega(t) = 0 iff t lies in a classified
// base-locus component.
inline std::vector<PropertyReport> run_form_identity_suite(const OracleConfig& cfg) {
    using namespace oracle_detail;
    std::vector<std::string> names{"contract_radial(omega) == 0", "omega ^ d(omega) == 0",
                                   "F*d(omega) == dF ^ omega", "S3 orbit invariance",
                                   "omega == 0 iff base-locus tag"};
    return run_sharded(cfg, names, [&](std::vector<PropertyReport>& rep, std::mt19937_64& rng) {
        int nvars = draw(rng, cfg.n_min, cfg.n_max) + 1;
        LinearTriple t = random_point(rng, nvars);
        TwistedForm w = omega(t);
        rep[0].record(contract_radial(w).is_zero(), t.str());
        rep[1].record(frobenius_check(w), t.str());
        rep[2].record(log_derivative_identity(t), t.str());
        rep[3].record(s3_orbit_invariance(t), t.str());
        bool in_locus = base_locus_component(t) != BaseLocusTag::none;
        rep[4].record(w.is_zero() == in_locus, t.str());
    });
}

// Order-two expansion against the closed forms, and the tangent-space
// characterization on the fully-coincident component: H1 vanishes exactly
// when sum_i lambda_i F'_i = 0 mod F0.
inline std::vector<PropertyReport> run_perturbation_suite(const OracleConfig& cfg) {
    using namespace oracle_detail;
    std::vector<std::string> names{"expand_eps[0] == 0", "expand_eps[1] == H1",
                                   "expand_eps[2] == H2", "H1 == 0 iff tangent congruence"};
    return run_sharded(cfg, names, [&](std::vector<PropertyReport>& rep, std::mt19937_64& rng) {
        int nvars = draw(rng, cfg.n_min, cfg.n_max) + 1;
        {
            Perturbation p = random_perturbation(rng, random_base_locus_point(rng, nvars));
            auto eps = expand_eps(p);
            rep[0].record(eps[0].is_zero(), p.str());
            rep[1].record(eps[1] == H1(p), p.str());
            rep[2].record(eps[2] == H2(p), p.str());
        }
        {
            // On B0 with equal representatives; every other draw forces the
            // congruence so both sides of the iff get exercised.
            LinearTriple base = random_b0_point(rng, nvars);
            std::array<Poly, 3> df{random_linear(rng, nvars, false),
                                   random_linear(rng, nvars, false), Poly(nvars)};
            std::array<Rational, 3> dl = random_dir_lambda(rng);
            if (draw(rng, 0, 1) == 0 && !base.lambda[2].is_zero()) {
                // pick F'_3 with sum_i lambda_i F'_i = c * F0
                Poly target = base.f[0] * Rational(draw(rng, -2, 2)) -
                              df[0] * base.lambda[0] - df[1] * base.lambda[1];
                df[2] = target * (Rational(1) / base.lambda[2]);
            } else {
                df[2] = random_linear(rng, nvars, false);
            }
            Perturbation p(base, dl, df);
            Poly s(nvars);
            for (int i = 0; i < 3; ++i) s += p.dir_f[i] * base.lambda[i];
            bool congruent = s.reduce_mod_linear(base.f[0]).is_zero();
            rep[3].record(H1(p).is_zero() == congruent, p.str());
        }
    });
}

// Constructed instances of the Vandermonde hypotheses never reach the error
// branch, and the returned disjunct re-checks by brute force.
inline std::vector<PropertyReport> run_vandermonde_suite(const OracleConfig& cfg) {
    using namespace oracle_detail;
    std::vector<std::string> names{"dichotomy resolves", "disjunct re-check"};
    return run_sharded(cfg, names, [&](std::vector<PropertyReport>& rep, std::mt19937_64& rng) {
        int nvars = draw(rng, cfg.n_min, cfg.n_max) + 1;
        VandermondeInstance inst = random_vandermonde(rng, nvars);
        std::string desc = "F0=" + inst.f0.str();
        for (int k = 0; k < 3; ++k)
            desc += ", lambda" + std::to_string(k + 1) + "=" + inst.lambda[k].str() +
                    ", F'" + std::to_string(k + 1) + "=" + inst.fp[k].str();
        bool resolved = true, consistent = true;
        try {
            VandermondeCase c = vandermonde_dichotomy(inst.f0, inst.lambda, inst.fp);
            if (c.all_congruent) {
                for (int k = 0; k < 3; ++k)
                    consistent = consistent && inst.fp[k].congruent_mod_linear(inst.fp[(k + 1) % 3],
                                                                               inst.f0);
            } else {
                consistent = inst.fp[c.i - 1].congruent_mod_linear(inst.fp[c.j - 1], inst.f0) &&
                             inst.lambda[c.i - 1] + inst.lambda[c.j - 1] == Rational(0);
            }
        } catch (const std::exception&) {
            resolved = false;
        }
        rep[0].record(resolved, desc);
        rep[1].record(resolved && consistent, desc);
    });
}

}  // namespace logdeg
