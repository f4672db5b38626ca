#include "ness/density_matrix.hpp"

#include "ness/errors.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace ness {

DensityMatrix::DensityMatrix(Eigen::MatrixXcd matrix) : mat_(std::move(matrix)) {
    if (mat_.rows() < 1 || mat_.rows() != mat_.cols()) {
        throw domain_error("DensityMatrix: matrix must be square and non-empty");
    }
    const double herm = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
    if (!(herm <= kHermitianTol)) {
        throw invariant_error("DensityMatrix: Hermiticity defect " + std::to_string(herm) +
                              " exceeds " + std::to_string(kHermitianTol));
    }
    const double tr = std::abs(mat_.trace() - std::complex<double>(1.0, 0.0));
    if (!(tr <= kTraceTol)) {
        throw invariant_error("DensityMatrix: trace defect " + std::to_string(tr) + " exceeds " +
                              std::to_string(kTraceTol));
    }
}

DensityMatrix DensityMatrix::pure_basis_state(int dimension, int index) {
    if (dimension < 1 || index < 0 || index >= dimension) {
        throw domain_error("DensityMatrix::pure_basis_state: bad dimension/index");
    }
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dimension, dimension);
    m(index, index) = 1.0;
    return DensityMatrix(std::move(m));
}

DensityMatrix DensityMatrix::maximally_mixed(int dimension) {
    if (dimension < 1) {
        throw domain_error("DensityMatrix::maximally_mixed: bad dimension");
    }
    Eigen::MatrixXcd m =
        Eigen::MatrixXcd::Identity(dimension, dimension) / static_cast<double>(dimension);
    return DensityMatrix(std::move(m));
}

double DensityMatrix::hermiticity_defect() const {
    return (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
}

double DensityMatrix::trace_defect() const {
    return std::abs(mat_.trace() - std::complex<double>(1.0, 0.0));
}

double DensityMatrix::min_eigenvalue() const {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(mat_, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

double DensityMatrix::max_offdiagonal_magnitude() const {
    double worst = 0.0;
    for (int j = 0; j < mat_.cols(); ++j) {
        for (int i = 0; i < mat_.rows(); ++i) {
            if (i == j) continue;
            worst = std::max(worst, std::abs(mat_(i, j)));
        }
    }
    return worst;
}

void DensityMatrix::require_positive(double floor) const {
    const double lowest = min_eigenvalue();
    if (lowest < floor) {
        throw positivity_error("DensityMatrix: eigenvalue " + std::to_string(lowest) +
                               " below floor " + std::to_string(floor));
    }
}

double trace_norm_distance(const DensityMatrix& a, const DensityMatrix& b) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(a.matrix() - b.matrix(),
                                                           Eigen::EigenvaluesOnly);
    return solver.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
    return 0.5 * trace_norm_distance(a, b);
}

double max_entry_distance(const DensityMatrix& a, const DensityMatrix& b) {
    return (a.matrix() - b.matrix()).cwiseAbs().maxCoeff();
}

} // namespace ness
