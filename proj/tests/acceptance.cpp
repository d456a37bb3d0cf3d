// Acceptance suite: every release-gating requirement as one pass/fail line.
// All checks are exact (integer or identity equality); the only tolerances
// are the two wall-clock budgets of criterion 1.

#include "logdeg/degree.hpp"
#include "logdeg/oracle.hpp"
#include "logdeg/selfcheck.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <thread>
#include <vector>

using namespace logdeg;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail = "") {
    std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", id, name.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
    if (!pass) ++g_failures;
}

void run(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool pass = false;
    try {
        pass = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(id, name, pass, detail);
}

int workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 2;
}

bool suites_pass(const std::vector<PropertyReport>& reports, std::string& detail) {
    bool ok = true;
    for (const auto& r : reports) {
        if (!r.passed()) {
            ok = false;
            detail += r.name + " failed " + std::to_string(r.failed) + "/" +
                      std::to_string(r.checked);
            if (!r.counterexamples.empty()) detail += " e.g. " + r.counterexamples.front();
            detail += "; ";
        }
    }
    if (ok) detail = std::to_string(reports.size()) + " properties, all exact";
    return ok;
}

}  // namespace

int main() {
    const std::map<int, Int> expected{{3, Int(80)},        {4, Int(4035)},
                                      {5, Int(165984)},    {6, Int(6091960)},
                                      {7, Int(208063680)}, {8, Int(6766823415LL)}};

    DegreeOptions opts;
    opts.workers = workers();

    std::vector<DegreeResult> rows;  // n = 3..10, reused by criteria 1 and 2

    run(1, "exact reproduction of the degree table for n = 3..8", [&](std::string& detail) {
        using clock = std::chrono::steady_clock;
        auto t0 = clock::now();
        DegreeResult r3 = degree_L111(3, opts);
        double n3_seconds = std::chrono::duration<double>(clock::now() - t0).count();
        rows.push_back(r3);
        for (int n = 4; n <= 8; ++n) rows.push_back(degree_L111(n, opts));
        double table_seconds = std::chrono::duration<double>(clock::now() - t0).count();

        bool ok = true;
        for (const auto& r : rows) {
            if (r.degree != expected.at(r.n)) {
                ok = false;
                detail += "n=" + std::to_string(r.n) + " got " + r.degree.str() + " want " +
                          expected.at(r.n).str() + "; ";
            }
        }
        for (std::size_t i = 1; i < rows.size(); ++i) {
            if (!(rows[i - 1].degree < rows[i].degree)) {
                ok = false;
                detail += "degree not strictly increasing at n=" + std::to_string(rows[i].n) + "; ";
            }
        }
        if (n3_seconds > 5.0) {
            ok = false;
            detail += "n=3 took " + std::to_string(n3_seconds) + "s (budget 5s); ";
        }
        if (table_seconds > 600.0) {
            ok = false;
            detail += "table took " + std::to_string(table_seconds) + "s (budget 600s); ";
        }
        if (ok)
            detail = "all six values exact; n=3 in " + std::to_string(n3_seconds) +
                     "s, full table in " + std::to_string(table_seconds) + "s";
        return ok;
    });

    run(2, "pre-division totals divisible by 6 for n = 3..10", [&](std::string& detail) {
        bool ok = true;
        std::string beyond;
        for (int n = 3; n <= 10; ++n) {
            const DegreeResult* row = nullptr;
            for (const auto& r : rows)
                if (r.n == n) row = &r;
            DegreeResult computed;
            if (!row) {
                computed = degree_L111(n, opts);
                row = &computed;
            }
            // degree_L111 already rejects non-integral and non-divisible
            // totals; re-check the arithmetic here against the result fields.
            if (row->pre_division_total != row->degree * 6 || row->degree <= 0) {
                ok = false;
                detail += "n=" + std::to_string(n) + " total " +
                          row->pre_division_total.str() + "; ";
            }
            if (n > 8) beyond += "n=" + std::to_string(n) + ": " + row->degree.str() + " ";
        }
        if (ok) detail = beyond + "(unverified beyond n=8 but integral and divisible)";
        return ok;
    });

    run(3, "characteristic-class suite (c*s = 1, Whitney, twist oracle)",
        [&](std::string& detail) {
            bool ok = true;
            int checked = 0;
            for (int n : {3, 4, 5}) {
                for (const auto& r : charclass_checks(n)) {
                    ++checked;
                    if (!r.passed) {
                        ok = false;
                        detail += r.name + ": " + r.detail + "; ";
                    }
                }
            }
            if (ok) detail = std::to_string(checked) + " identities, all exact";
            return ok;
        });

    run(4, "lift invariance of the degree for n = 3,4,5", [&](std::string& detail) {
        for (int n : {3, 4, 5}) {
            for (int lift : {sym::h2, sym::h3, sym::h4}) {
                DegreeOptions o = opts;
                o.lift_gen = lift;
                Int got = degree_L111(n, o).degree;
                if (got != expected.at(n)) {
                    detail = "n=" + std::to_string(n) + " lift " +
                             std::to_string(lift) + " gave " + got.str();
                    return false;
                }
            }
        }
        detail = "three lift conventions agree at each n";
        return true;
    });

    run(5, "factor-permutation invariance of the degree for n = 3,4", [&](std::string& detail) {
        const std::array<std::array<int, 3>, 6> perms{{{1, 2, 3},
                                                       {1, 3, 2},
                                                       {2, 1, 3},
                                                       {2, 3, 1},
                                                       {3, 1, 2},
                                                       {3, 2, 1}}};
        for (int n : {3, 4}) {
            for (const auto& p : perms) {
                DegreeOptions o = opts;
                o.factor_permutation = p;
                Int got = degree_L111(n, o).degree;
                if (got != expected.at(n)) {
                    detail = "n=" + std::to_string(n) + " permutation (" + std::to_string(p[0]) +
                             std::to_string(p[1]) + std::to_string(p[2]) + ") gave " + got.str();
                    return false;
                }
            }
        }
        detail = "all six permutations agree at each n";
        return true;
    });

    run(6, "pushforward unit laws (vanishing window, purity, disjointness)",
        [&](std::string& detail) {
            bool ok = true;
            int checked = 0;
            for (int n : {3, 4, 5}) {
                for (const auto& r : pushforward_checks(n)) {
                    ++checked;
                    if (!r.passed) {
                        ok = false;
                        detail += r.name + ": " + r.detail + "; ";
                    }
                }
                for (const auto& r : geometry_checks(n)) {
                    ++checked;
                    if (!r.passed) {
                        ok = false;
                        detail += r.name + ": " + r.detail + "; ";
                    }
                }
            }
            if (ok) detail = std::to_string(checked) + " identities, all exact";
            return ok;
        });

    OracleConfig oracle_cfg;
    oracle_cfg.workers = workers();

    run(7, "differential-form identities on 500 randomized instances",
        [&](std::string& detail) {
            OracleConfig cfg = oracle_cfg;
            cfg.count = 500;
            return suites_pass(run_form_identity_suite(cfg), detail);
        });

    run(8, "order-two expansion matches H1/H2 on 200 perturbations",
        [&](std::string& detail) {
            OracleConfig cfg = oracle_cfg;
            cfg.count = 200;
            return suites_pass(run_perturbation_suite(cfg), detail);
        });

    run(9, "Vandermonde dichotomy on 200 constructed instances", [&](std::string& detail) {
        OracleConfig cfg = oracle_cfg;
        cfg.count = 200;
        return suites_pass(run_vandermonde_suite(cfg), detail);
    });

    if (g_failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criteria FAILED\n", g_failures);
    return 1;
}
