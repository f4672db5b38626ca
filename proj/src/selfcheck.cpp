#include "ness/selfcheck.hpp"

#include "ness/density_matrix.hpp"
#include "ness/entanglement.hpp"
#include "ness/errors.hpp"
#include "ness/oracles.hpp"
#include "ness/reduction.hpp"
#include "ness/spin_algebra.hpp"
#include "ness/steady_state.hpp"
#include "ness/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

namespace ness {

namespace {

std::string scientific(double v) {
    std::ostringstream os;
    os.precision(2);
    os << std::scientific << v;
    return os.str();
}

CheckResult run_suite(const std::string& name, const std::function<std::string(bool&)>& body) {
    CheckResult result;
    result.name = name;
    try {
        bool ok = true;
        result.detail = body(ok);
        result.passed = ok;
    } catch (const std::exception& e) {
        result.passed = false;
        result.detail = std::string("exception: ") + e.what();
    }
    return result;
}

std::string solver_agreement(int atoms_max, bool& ok) {
    double worst_nullspace = 0.0, worst_direct = 0.0;
    for (int n = 1; n <= std::min(atoms_max, 10); ++n) {
        for (double omega : {0.1, 1.0, 2.0}) {
            for (double phi : {0.0, 1.2}) {
                const DriveParams p{n, omega, phi};
                const DensityMatrix fast = exact_steady_state(p);
                const DensityMatrix kernel = steady_state_via_nullspace(p);
                const DensityMatrix direct = detail::exact_steady_state_direct(p);
                worst_nullspace = std::max(worst_nullspace, max_entry_distance(fast, kernel));
                worst_direct = std::max(worst_direct, max_entry_distance(fast, direct));
            }
        }
    }
    ok = worst_nullspace < 1e-10 && worst_direct < 1e-11;
    return "max |closed-kernel| = " + scientific(worst_nullspace) +
           ", max |fast-direct| = " + scientific(worst_direct);
}

std::string coupling_embedding(int atoms_max, bool& ok) {
    double worst_cg = 0.0, worst_ladder = 0.0;
    for (int n = 2; n <= std::min(atoms_max, 8); ++n) {
        // Stretched coupling coefficients against explicit tensor overlaps;
        // the part occupies the low qubits, matching the partial trace.
        for (int m = 1; m < n; ++m) {
            const CouplingScheme scheme(n, m);
            const long dim_part = 1L << m;
            for (int a = 0; a <= m; ++a) {
                const Eigen::VectorXd va = oracles::symmetric_qubit_vector(m, a);
                for (int b = 0; b <= n - m; ++b) {
                    const Eigen::VectorXd vb = oracles::symmetric_qubit_vector(n - m, b);
                    const Eigen::VectorXd vp = oracles::symmetric_qubit_vector(n, a + b);
                    double overlap = 0.0;
                    for (long cm = 0; cm < vb.size(); ++cm) {
                        if (vb(cm) == 0.0) continue;
                        for (long pm = 0; pm < dim_part; ++pm)
                            overlap += va(pm) * vb(cm) * vp(cm * dim_part + pm);
                    }
                    worst_cg = std::max(
                        worst_cg, std::abs(overlap - scheme.coefficient_by_counts(a, b)));
                }
            }
        }
        // Collective lowering action against the sum of single-qubit flips.
        const Eigen::MatrixXd lower = oracles::collective_lowering_qubits(n);
        for (int k = 1; k <= n; ++k) {
            const Eigen::VectorXd from = oracles::symmetric_qubit_vector(n, k);
            const Eigen::VectorXd to = oracles::symmetric_qubit_vector(n, k - 1);
            const double f = ladder_coefficient(n, 2 * (k - 1) - n, 1);
            worst_ladder = std::max(worst_ladder, (lower * from - f * to).norm());
        }
    }
    ok = worst_cg < 1e-12 && worst_ladder < 1e-12;
    return "max coupling mismatch = " + scientific(worst_cg) +
           ", max ladder mismatch = " + scientific(worst_ladder);
}

std::string reduction_marginals(int atoms_max, bool& ok) {
    double worst_marginal = 0.0, worst_leak = 0.0, worst_chain = 0.0;
    for (int n = 2; n <= std::min(atoms_max, 8); ++n) {
        const DensityMatrix state = exact_steady_state({n, 1.0, 0.3});
        const Eigen::MatrixXcd full = oracles::embed_in_qubit_space(state);
        for (int m = 1; m < n; ++m) {
            const Eigen::MatrixXcd marginal = oracles::qubit_partial_trace_low(full, n, m);
            worst_leak = std::max(worst_leak, oracles::symmetric_sector_leakage(marginal, m));
            const Eigen::MatrixXcd projected = oracles::project_to_symmetric_sector(marginal, m);
            const Eigen::MatrixXcd reduced = reduce(state, m).matrix.matrix();
            worst_marginal =
                std::max(worst_marginal, (projected - reduced).cwiseAbs().maxCoeff());
        }
    }
    for (int n = 4; n <= std::max(4, std::min(atoms_max, 10)); ++n) {
        const DensityMatrix state = exact_steady_state({n, 0.9, 0.0});
        for (int m = 2; m < n; ++m) {
            const DensityMatrix stage = reduce(state, m).matrix;
            for (int mp = 1; mp < m; ++mp) {
                const DensityMatrix two_step = reduce(stage, mp).matrix;
                const DensityMatrix direct = reduce(state, mp).matrix;
                worst_chain = std::max(worst_chain, max_entry_distance(two_step, direct));
            }
        }
    }
    ok = worst_marginal < 1e-10 && worst_leak < 1e-10 && worst_chain < 1e-10;
    return "max marginal mismatch = " + scientific(worst_marginal) +
           ", sector leakage = " + scientific(worst_leak) +
           ", chain mismatch = " + scientific(worst_chain);
}

std::string entropy_inequalities(int atoms_max, bool& ok) {
    SweepSpec spec;
    spec.n_atoms = {std::max(4, atoms_max), 40};
    spec.omega_min = 0.0;
    spec.omega_max = 3.0;
    spec.points = 61;
    spec.derivative_for = 2;
    const SweepResult result = run_sweep(spec);

    double worst_lieb = -1e300, worst_bound = 0.0, worst_variant = 0.0, worst_zero = 0.0;
    for (const SweepRow& row : result.rows) {
        const EntropyRecord& r = row.record;
        for (const auto& [m, s] : r.entropies) {
            worst_bound = std::max(worst_bound, -s);
            worst_bound = std::max(worst_bound, s - std::log2(m + 1.0));
            if (r.omega_s == 0.0) worst_zero = std::max(worst_zero, std::abs(s));
        }
        worst_lieb = std::max(worst_lieb, *r.lieb_value);
        // The two combinations differ by 6 S1 identically.
        worst_variant = std::max(worst_variant, std::abs(*r.relative_eq8 - *r.relative_caption -
                                                         6.0 * r.entropies.at(1)));
    }
    ok = worst_lieb <= 1e-12 && worst_bound <= 1e-9 && worst_variant <= 1e-12 &&
         worst_zero == 0.0;
    return "max lieb = " + scientific(worst_lieb) +
           ", bound excess = " + scientific(worst_bound) +
           ", variant identity = " + scientific(worst_variant) +
           ", zero-drive entropy = " + scientific(worst_zero);
}

std::string state_invariants(int atoms_max, bool& ok) {
    std::vector<int> sizes = {1, 2, 5, std::max(3, atoms_max), 40, 100};
    sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
    double worst_herm = 0.0, worst_trace = 0.0, worst_eig = 0.0, worst_phase = 0.0,
           worst_offdiag = 0.0;
    for (int n : sizes) {
        for (double omega : {0.0, 1e-6, 0.5, 1.0, 5.0, 1e3}) {
            const DensityMatrix state = exact_steady_state({n, omega, 0.0});
            worst_herm = std::max(worst_herm, state.hermiticity_defect());
            worst_trace = std::max(worst_trace, state.trace_defect());
            worst_eig = std::max(worst_eig, -state.min_eigenvalue());
            const DensityMatrix averaged = phase_averaged_steady_state({n, omega, 0.0});
            worst_offdiag = std::max(worst_offdiag, averaged.max_offdiagonal_magnitude());
            if (n >= 3 && omega > 0.0) {
                const DensityMatrix rotated = exact_steady_state({n, omega, 1.2});
                const double s0 = von_neumann_entropy(reduce(state, 2).matrix);
                const double s1 = von_neumann_entropy(reduce(rotated, 2).matrix);
                worst_phase = std::max(worst_phase, std::abs(s1 - s0));
            }
        }
    }
    // The steady state is a fixed point of the integrator.
    const int n_evolve = std::min(atoms_max, 6);
    const DriveParams p{n_evolve, 0.5, 0.0};
    const DensityMatrix target = exact_steady_state(p);
    const Trajectory traj = evolve(p, target, 0.5, default_time_step(p));
    const double drift = trace_distance(traj.samples.back().state, target);

    ok = worst_herm == 0.0 && worst_trace <= 1e-12 && worst_eig <= 1e-10 &&
         worst_phase <= 1e-10 && worst_offdiag == 0.0 && drift < 1e-8;
    return "hermiticity = " + scientific(worst_herm) + ", trace = " + scientific(worst_trace) +
           ", negativity = " + scientific(worst_eig) +
           ", phase-shift entropy drift = " + scientific(worst_phase) +
           ", averaged off-diagonals = " + scientific(worst_offdiag) +
           ", fixed-point drift = " + scientific(drift);
}

} // namespace

std::vector<CheckResult> run_self_checks(int atoms_max) {
    if (atoms_max < 2) throw domain_error("self checks need atoms_max >= 2");
    std::vector<CheckResult> results;
    results.push_back(run_suite("solver agreement",
                                [&](bool& ok) { return solver_agreement(atoms_max, ok); }));
    results.push_back(run_suite("coupling embedding",
                                [&](bool& ok) { return coupling_embedding(atoms_max, ok); }));
    results.push_back(run_suite("reduction marginals",
                                [&](bool& ok) { return reduction_marginals(atoms_max, ok); }));
    results.push_back(run_suite("entropy inequalities",
                                [&](bool& ok) { return entropy_inequalities(atoms_max, ok); }));
    results.push_back(run_suite("state invariants",
                                [&](bool& ok) { return state_invariants(atoms_max, ok); }));
    return results;
}

} // namespace ness
