#pragma once

#include <string>
#include <vector>

namespace ness {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // worst observed deviation, or the failure reason
};

/// The built-in cross-validation suites, sized by the largest ensemble the
/// brute-force oracles may touch (the qubit-space ones cap themselves at 10
/// atoms regardless):
///   solver agreement    closed form vs Liouvillian null space vs direct sum
///   coupling embedding  stretched coupling table and ladder action vs the
///                       explicit 2^N construction
///   reduction marginals marginal vs brute-force partial trace, sector
///                       closure, chain consistency
///   entropy inequalities bounds, zero-drive purity, Lieb sign, variant
///                       arithmetic on a real sweep
///   state invariants    Hermiticity/trace/positivity, phase covariance,
///                       integrator fixed point
std::vector<CheckResult> run_self_checks(int atoms_max);

} // namespace ness
