// End-to-end acceptance gate. Each numbered criterion prints exactly one
// PASS/FAIL line with the measured quantities; the process exits nonzero if
// any line fails. Tolerances and grids are fixed here on purpose: they are
// the product's published behavior, not tunables.

#include "ness/density_matrix.hpp"
#include "ness/entanglement.hpp"
#include "ness/oracles.hpp"
#include "ness/output.hpp"
#include "ness/reduction.hpp"
#include "ness/selfcheck.hpp"
#include "ness/steady_state.hpp"
#include "ness/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int number, const char* title, bool passed, const std::string& detail) {
    std::printf("%s  %2d  %-28s %s\n", passed ? "PASS" : "FAIL", number, title,
                detail.c_str());
    std::fflush(stdout);
    if (!passed) ++failures;
}

void run_criterion(int number, const char* title,
                   const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool passed = false;
    try {
        passed = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    report(number, title, passed, detail);
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), pattern, a, b, c);
    return buf;
}

// Shared by criteria 4-6: coherent sweeps at step 0.01 with the S2
// derivative column.
ness::SweepResult sharpening_sweep(std::vector<int> sizes, bool averaged) {
    ness::SweepSpec spec;
    spec.n_atoms = std::move(sizes);
    spec.omega_min = 0.0;
    spec.omega_max = 3.0;
    spec.points = 301;
    spec.phase_averaged = averaged;
    spec.derivative_for = 2;
    return ness::run_sweep(spec);
}

double derivative_argmax(const ness::SweepResult& result, int n_atoms) {
    double best = -1e300, where = 0.0;
    for (const ness::SweepRow& row : result.rows) {
        if (row.n_atoms != n_atoms) continue;
        if (*row.record.derivative > best) {
            best = *row.record.derivative;
            where = row.record.omega_s;
        }
    }
    return where;
}

double max_abs_step(const ness::SweepResult& result, int n_atoms) {
    double worst = 0.0;
    double prev = 0.0;
    bool have_prev = false;
    for (const ness::SweepRow& row : result.rows) {
        if (row.n_atoms != n_atoms) continue;
        const double s2 = row.record.entropies.at(2);
        if (have_prev) worst = std::max(worst, std::abs(s2 - prev));
        prev = s2;
        have_prev = true;
    }
    return worst;
}

} // namespace

int main() {
    // 1. Closed-form steady state against the Liouvillian null space.
    run_criterion(1, "solver oracle equivalence", [](std::string& detail) {
        const auto start = Clock::now();
        double worst = 0.0;
        for (int n = 1; n <= 10; ++n)
            for (double omega : {0.1, 0.5, 0.9, 1.0, 1.1, 2.0, 5.0})
                for (double phi : {0.0, 1.2}) {
                    const ness::DriveParams p{n, omega, phi};
                    worst = std::max(worst,
                                     ness::max_entry_distance(
                                         ness::exact_steady_state(p),
                                         ness::steady_state_via_nullspace(p)));
                }
        const double elapsed = seconds_since(start);
        detail = fmt("max entry deviation %.3e (tol 1e-10), %.1f s (limit 30)", worst,
                     elapsed);
        return worst < 1e-10 && elapsed < 30.0;
    });

    // 2. Reduction against the explicit tensor-product partial trace.
    run_criterion(2, "marginal oracle equivalence", [](std::string& detail) {
        const auto start = Clock::now();
        double worst = 0.0;
        for (int n = 2; n <= 8; ++n)
            for (double omega : {0.5, 1.0}) {
                const ness::DensityMatrix state = ness::exact_steady_state({n, omega, 0.0});
                const Eigen::MatrixXcd full = ness::oracles::embed_in_qubit_space(state);
                for (int m = 1; m < n; ++m) {
                    const Eigen::MatrixXcd marginal =
                        ness::oracles::qubit_partial_trace_low(full, n, m);
                    const Eigen::MatrixXcd projected =
                        ness::oracles::project_to_symmetric_sector(marginal, m);
                    const Eigen::MatrixXcd reduced = ness::reduce(state, m).matrix.matrix();
                    worst = std::max(worst, (projected - reduced).cwiseAbs().maxCoeff());
                }
            }
        const double elapsed = seconds_since(start);
        detail = fmt("max entry deviation %.3e (tol 1e-10), %.1f s (limit 60)", worst,
                     elapsed);
        return worst < 1e-10 && elapsed < 60.0;
    });

    // 3. Strong-drive mixed limits of the two- and three-atom marginals.
    run_criterion(3, "asymptotic mixed limit", [](std::string& detail) {
        const double log2_3 = std::log2(3.0);
        double gap2 = 0.0, gap3 = 0.0;
        double prev2 = 1e300, prev3 = 1e300;
        bool monotone = true;
        for (double omega : {10.0, 20.0, 50.0}) {
            const ness::DensityMatrix state = ness::exact_steady_state({100, omega, 0.0});
            gap2 = std::abs(ness::von_neumann_entropy(ness::reduce(state, 2).matrix) - log2_3);
            gap3 = std::abs(ness::von_neumann_entropy(ness::reduce(state, 3).matrix) - 2.0);
            monotone = monotone && gap2 < prev2 && gap3 < prev3;
            prev2 = gap2;
            prev3 = gap3;
        }
        detail = fmt("|S2-log2(3)| = %.4f (tol 0.02), |S3-2| = %.4f (tol 0.03)", gap2, gap3) +
                 (monotone ? ", gaps shrink monotonically" : ", gaps NOT monotone");
        return gap2 < 0.02 && gap3 < 0.03 && monotone;
    });

    // Criteria 4-6 share these sweeps.
    ness::SweepResult coherent, averaged;
    try {
        coherent = sharpening_sweep({20, 40, 80}, false);
        averaged = sharpening_sweep({80}, true);
    } catch (const std::exception& e) {
        report(4, "critical sharpening", false, std::string("sweep failed: ") + e.what());
        report(5, "inequality stays satisfied", false, "sweep failed");
        report(6, "phase-average smoothing", false, "sweep failed");
        std::printf("%d criterion(s) failed\n", failures += 1);
        return 1;
    }

    // 4. The derivative peak sits near the transition and sharpens with N.
    run_criterion(4, "critical sharpening", [&](std::string& detail) {
        const double p20 = derivative_argmax(coherent, 20);
        const double p40 = derivative_argmax(coherent, 40);
        const double p80 = derivative_argmax(coherent, 80);
        const bool in_window = p20 > 0.7 && p20 < 1.3 && p40 > 0.7 && p40 < 1.3 &&
                               p80 > 0.7 && p80 < 1.3;
        const bool tightening = std::abs(p40 - 1.0) <= std::abs(p20 - 1.0) &&
                                std::abs(p80 - 1.0) <= std::abs(p40 - 1.0);
        detail = fmt("peaks at %.3f / %.3f / %.3f for N = 20/40/80", p20, p40, p80);
        return in_window && tightening;
    });

    // 5. The entropy-combination inequality holds at every sweep point.
    run_criterion(5, "inequality stays satisfied", [&](std::string& detail) {
        double worst = -1e300;
        long count = 0;
        for (const ness::SweepRow& row : coherent.rows) {
            worst = std::max(worst, *row.record.lieb_value);
            ++count;
        }
        detail = fmt("max S1+S3-2S2 = %.3e over %g points (tol 1e-12)", worst,
                     static_cast<double>(count));
        return worst <= 1e-12;
    });

    // 6. Random-phase drive transitions more gently than coherent drive.
    run_criterion(6, "phase-average smoothing", [&](std::string& detail) {
        const double slope_coherent = max_abs_step(coherent, 80);
        const double slope_averaged = max_abs_step(averaged, 80);
        double offdiag = 0.0;
        for (double omega : {0.5, 1.0, 2.5}) {
            const ness::DensityMatrix state =
                ness::phase_averaged_steady_state({80, omega, 0.0});
            offdiag = std::max(offdiag, state.max_offdiagonal_magnitude());
        }
        detail = fmt("max |dS2| per step: averaged %.4f < coherent %.4f; off-diagonals %.1e",
                     slope_averaged, slope_coherent, offdiag);
        return slope_averaged < slope_coherent && offdiag == 0.0;
    });

    // 7. No drive, no entanglement: every marginal entropy is exactly zero.
    run_criterion(7, "zero-drive purity", [](std::string& detail) {
        double worst = 0.0;
        for (int n : {2, 3, 4, 6, 10, 40, 100, 400}) {
            const ness::DensityMatrix state = ness::exact_steady_state({n, 0.0, 0.0});
            worst = std::max(worst, ness::von_neumann_entropy(state));
            for (int m = 1; m < std::min(n, 4); ++m)
                worst = std::max(worst,
                                 ness::von_neumann_entropy(ness::reduce(state, m).matrix));
        }
        detail = fmt("largest entropy %.1e (must be exactly 0)", worst);
        return worst == 0.0;
    });

    // 8. Larger ensembles relax to the steady state faster.
    run_criterion(8, "relaxation speeds up with N", [](std::string& detail) {
        auto time_to_reach = [](int n) {
            const ness::DriveParams p{n, 0.5, 0.0};
            const ness::DensityMatrix target = ness::exact_steady_state(p);
            const ness::DensityMatrix start = ness::DensityMatrix::pure_basis_state(n + 1, 0);
            const ness::Trajectory traj =
                ness::evolve(p, start, 40.0, ness::default_time_step(p));
            for (const ness::TrajectorySample& s : traj.samples)
                if (ness::trace_distance(s.state, target) <= 1e-4) return s.time;
            return -1.0;
        };
        const double t4 = time_to_reach(4);
        const double t8 = time_to_reach(8);
        detail = fmt("t(N=8) = %.3f vs t(N=4) = %.3f to reach distance 1e-4", t8, t4);
        return t4 > 0.0 && t8 > 0.0 && t8 < t4;
    });

    // 9. Structural invariants and schedule-independent determinism.
    run_criterion(9, "invariant suite", [&](std::string& detail) {
        const std::vector<ness::CheckResult> checks = ness::run_self_checks(8);
        std::string failed_names;
        for (const ness::CheckResult& c : checks)
            if (!c.passed) failed_names += " " + c.name + " (" + c.detail + ")";

        ness::SweepSpec spec;
        spec.n_atoms = {6, 25};
        spec.points = 41;
        spec.derivative_for = 2;
        const std::string serial = ness::sweep_csv(ness::run_sweep_serial(spec));
        bool deterministic = true;
        for (const char* threads : {"1", "2", "4"}) {
            setenv("NESS_THREADS", threads, 1);
            deterministic = deterministic && ness::sweep_csv(ness::run_sweep(spec)) == serial;
        }
        unsetenv("NESS_THREADS");
        deterministic = deterministic && ness::sweep_csv(ness::run_sweep(spec)) == serial;

        detail = std::string("cross-validation suites: ") +
                 (failed_names.empty() ? "all pass" : ("FAILED:" + failed_names)) +
                 "; repeated/threaded sweeps byte-identical: " +
                 (deterministic ? "yes" : "NO");
        return failed_names.empty() && deterministic;
    });

    // 10. The headline workload finishes quickly.
    run_criterion(10, "sweep performance", [](std::string& detail) {
        ness::SweepSpec spec;
        spec.n_atoms = {100};
        spec.points = 301;
        spec.derivative_for = 2;
        const auto start = Clock::now();
        const ness::SweepResult result = ness::run_sweep(spec);
        const double elapsed = seconds_since(start);
        detail = fmt("%g rows in %.2f s (limit 60)", static_cast<double>(result.rows.size()),
                     elapsed);
        return result.rows.size() == 301 && elapsed < 60.0;
    });

    if (failures == 0) {
        std::printf("all acceptance criteria pass\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", failures);
    return 1;
}
