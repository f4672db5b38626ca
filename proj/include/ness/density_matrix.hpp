#pragma once

#include <Eigen/Dense>

namespace ness {

/// Hermitian, unit-trace, positive-semidefinite complex matrix. Construction
/// always asserts Hermiticity (max |rho - rho^dag| <= 1e-12) and unit trace
/// (|tr - 1| <= 1e-12); the eigenvalue floor (>= -1e-10) is checked by
/// require_positive(), which callers on validated paths invoke explicitly.
/// Immutable after construction.
class DensityMatrix {
public:
    static constexpr double kHermitianTol = 1e-12;
    static constexpr double kTraceTol = 1e-12;
    static constexpr double kEigenvalueFloor = -1e-10;

    explicit DensityMatrix(Eigen::MatrixXcd matrix);

    /// |i><i| on a d-dimensional space.
    static DensityMatrix pure_basis_state(int dimension, int index);
    static DensityMatrix maximally_mixed(int dimension);

    int dimension() const { return static_cast<int>(mat_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return mat_; }

    double hermiticity_defect() const;
    double trace_defect() const;
    double min_eigenvalue() const;
    double max_offdiagonal_magnitude() const;

    /// Throws positivity_error if any eigenvalue sits below the floor.
    void require_positive(double floor = kEigenvalueFloor) const;

private:
    Eigen::MatrixXcd mat_;
};

/// Trace norm ||a - b||_1 (sum of absolute eigenvalues of the Hermitian
/// difference).
double trace_norm_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Trace distance T = ||a - b||_1 / 2.
double trace_distance(const DensityMatrix& a, const DensityMatrix& b);

/// Largest entrywise |a - b|.
double max_entry_distance(const DensityMatrix& a, const DensityMatrix& b);

} // namespace ness
