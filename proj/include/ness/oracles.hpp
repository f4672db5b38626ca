#pragma once

#include "ness/density_matrix.hpp"

#include <Eigen/Dense>

namespace ness::oracles {

/// Brute-force cross-checks in the full 2^N qubit space. Everything here is
/// exponential in n_atoms and intended for n_atoms <= 12; the guards throw
/// resource_error beyond that.

/// Normalised symmetric state with the given excitation count as a 2^N
/// vector: amplitude 1/sqrt(C(N,k)) on every bitmask of popcount k.
Eigen::VectorXd symmetric_qubit_vector(int n_atoms, int excitations);

/// 2^N x (N+1) isometry whose columns are the symmetric_qubit_vector set,
/// ordered by excitation count.
Eigen::MatrixXd symmetric_embedding_isometry(int n_atoms);

/// V rho V^T: the collective state as an explicit 2^N density matrix.
Eigen::MatrixXcd embed_in_qubit_space(const DensityMatrix& rho);

/// Partial trace keeping the n_keep lowest qubits of an n_total-qubit
/// matrix (by permutation symmetry any subset gives the same marginal).
Eigen::MatrixXcd qubit_partial_trace_low(const Eigen::MatrixXcd& full, int n_total, int n_keep);

/// Compress a 2^M marginal onto the part's own collective basis, (M+1)^2.
Eigen::MatrixXcd project_to_symmetric_sector(const Eigen::MatrixXcd& part, int n_keep);

/// Largest entry of the marginal left outside the part's symmetric sector.
/// Zero (to roundoff) for marginals of symmetric states.
double symmetric_sector_leakage(const Eigen::MatrixXcd& part, int n_keep);

/// sum_i sigma^-_i as a 2^N matrix, for checking collective ladder action.
Eigen::MatrixXd collective_lowering_qubits(int n_atoms);

} // namespace ness::oracles
