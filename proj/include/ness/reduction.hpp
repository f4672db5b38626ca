#pragma once

#include "ness/density_matrix.hpp"

namespace ness {

/// Reduced state of an M-atom part of a permutation-symmetric parent.
struct ReducedState {
    int part_size = 0;
    int parent_size = 0;
    DensityMatrix matrix;
};

/// Project the M-atom marginal out of a symmetric N-atom state (N inferred
/// from the parent dimension). The marginal of a symmetric state lives
/// entirely in the part's own symmetric sector, so the result is (M+1)
/// dimensional:
///   out(a, a') = sum_b rho(a+b, a'+b) * C(a, b) * C(a', b)
/// with b over the complement's excitation count and C the stretched
/// coupling coefficients. Requires 1 <= M <= N-1; M = N is rejected.
ReducedState reduce(const DensityMatrix& rho, int part_size);

} // namespace ness
