#pragma once

#include "ness/density_matrix.hpp"

#include <Eigen/Dense>

#include <vector>

namespace ness {

/// Drive/decay working point in units where the collective decay rate is 1.
/// The scaled drive is omega_s = 2G/N, so G = N * omega_s / 2.
struct DriveParams {
    int n_atoms = 1;
    double omega_s = 0.0;
    double phase = 0.0;

    double coupling() const { return 0.5 * n_atoms * omega_s; } // G
    void validate() const;
};

/// Non-equilibrium steady state of the driven, collectively decaying
/// ensemble, from the closed-form ladder expansion. Accumulation runs in the
/// log domain, so the result is finite and correct for omega_s in
/// [1e-6, 1e3] and N up to several hundred. omega_s = 0 returns the pure
/// ground-state projector |S,-S><S,-S|.
///
/// Conventions (fixed by agreement with the Liouvillian null space):
///   - master equation  d rho/dt = -iG [e^{i phi} S+ + e^{-i phi} S-, rho]
///                                 - (S+S- rho + rho S+S- - 2 S- rho S+)
///   - off-diagonal phases  rho_{p,q}(phi) = rho_{p,q}(0) e^{i(p-q) phi},
///     i.e. rho(phi) = U rho(0) U^dag with U = exp(+i phi S_z).
DensityMatrix exact_steady_state(const DriveParams& params);

/// Diagonal part of exact_steady_state: the steady state under a drive of
/// uniformly random phase. Off-diagonals are exactly zero.
DensityMatrix phase_averaged_steady_state(const DriveParams& params);

/// Superoperator L with vec(d rho/dt) = L vec(rho) under column stacking
/// (entry (i,j) of rho sits at vec index i + d*j). Dense oracle; guarded to
/// n_atoms <= 30.
Eigen::MatrixXcd liouvillian_matrix(const DriveParams& params);

/// Steady state from the null space of liouvillian_matrix via SVD.
/// Independent cross-check of exact_steady_state. Requires a unique kernel:
/// the second-smallest singular value must exceed 1e-6.
DensityMatrix steady_state_via_nullspace(const DriveParams& params);

struct TrajectorySample {
    double time;
    DensityMatrix state;
};

struct Trajectory {
    std::vector<TrajectorySample> samples;
};

/// Fixed-step classical 4th-order integration of the master equation in the
/// (N+1)-dimensional Dicke basis. Samples every `sample_stride` steps and
/// always includes both endpoints. Throws integration_error naming the
/// offending time if the trace drifts beyond 1e-9 or an entry blows up.
Trajectory evolve(const DriveParams& params, const DensityMatrix& initial, double t_final,
                  double dt, int sample_stride = 1);

/// Default integration step: the drive/decay heuristic
/// min(0.05, 0.5 / (N max(1, G))) tightened by an explicit stability bound
/// on the dissipator spectral radius (which grows like N^2/2).
double default_time_step(const DriveParams& params);

/// U rho U^dag with U = exp(+i phi S_z); the closed form's phase covariance.
DensityMatrix rotate_drive_phase(const DensityMatrix& rho, double phi);

namespace detail {

/// Reference evaluation of the closed form: per-element two-pass
/// log-domain sums over the ladder index, without the shared suffix-sum
/// rearrangement used by exact_steady_state. Kept for cross-checking.
DensityMatrix exact_steady_state_direct(const DriveParams& params);

} // namespace detail

} // namespace ness
