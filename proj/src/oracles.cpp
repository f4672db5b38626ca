#include "ness/oracles.hpp"

#include "ness/errors.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <string>

namespace ness::oracles {

namespace {

constexpr int kMaxQubits = 10; // 2^10 keeps the dense matrices in check

void guard_qubits(int n_atoms) {
    if (n_atoms < 1) throw domain_error("n_atoms must be positive");
    if (n_atoms > kMaxQubits)
        throw resource_error("qubit-space oracle is limited to n_atoms <= " +
                             std::to_string(kMaxQubits));
}

double binomial(int n, int k) {
    double b = 1.0;
    for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i; // exact at oracle sizes
    return b;
}

} // namespace

Eigen::VectorXd symmetric_qubit_vector(int n_atoms, int excitations) {
    guard_qubits(n_atoms);
    if (excitations < 0 || excitations > n_atoms)
        throw domain_error("excitation count out of range");
    const unsigned dim = 1u << n_atoms;
    Eigen::VectorXd v = Eigen::VectorXd::Zero(dim);
    const double amp = 1.0 / std::sqrt(binomial(n_atoms, excitations));
    for (unsigned mask = 0; mask < dim; ++mask)
        if (std::popcount(mask) == excitations) v(mask) = amp;
    return v;
}

Eigen::MatrixXd symmetric_embedding_isometry(int n_atoms) {
    guard_qubits(n_atoms);
    Eigen::MatrixXd v(1u << n_atoms, n_atoms + 1);
    for (int k = 0; k <= n_atoms; ++k) v.col(k) = symmetric_qubit_vector(n_atoms, k);
    return v;
}

Eigen::MatrixXcd embed_in_qubit_space(const DensityMatrix& rho) {
    const int n_atoms = rho.dimension() - 1;
    const Eigen::MatrixXd v = symmetric_embedding_isometry(n_atoms);
    return v * rho.matrix() * v.transpose();
}

Eigen::MatrixXcd qubit_partial_trace_low(const Eigen::MatrixXcd& full, int n_total, int n_keep) {
    guard_qubits(n_total);
    if (n_keep < 1 || n_keep >= n_total)
        throw domain_error("must keep between 1 and n_total-1 qubits");
    const long dim_keep = 1L << n_keep;
    const long dim_rest = 1L << (n_total - n_keep);
    if (full.rows() != dim_keep * dim_rest || full.cols() != full.rows())
        throw domain_error("matrix dimension does not match n_total qubits");
    Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(dim_keep, dim_keep);
    for (long c = 0; c < dim_rest; ++c)
        for (long a = 0; a < dim_keep; ++a)
            for (long b = 0; b < dim_keep; ++b)
                out(a, b) += full(c * dim_keep + a, c * dim_keep + b);
    return out;
}

Eigen::MatrixXcd project_to_symmetric_sector(const Eigen::MatrixXcd& part, int n_keep) {
    const Eigen::MatrixXd w = symmetric_embedding_isometry(n_keep);
    if (part.rows() != w.rows() || part.cols() != w.rows())
        throw domain_error("marginal dimension does not match n_keep qubits");
    return w.transpose() * part * w;
}

double symmetric_sector_leakage(const Eigen::MatrixXcd& part, int n_keep) {
    const Eigen::MatrixXd w = symmetric_embedding_isometry(n_keep);
    if (part.rows() != w.rows() || part.cols() != w.rows())
        throw domain_error("marginal dimension does not match n_keep qubits");
    const Eigen::MatrixXd projector = w * w.transpose();
    const Eigen::MatrixXcd inside = projector * part * projector;
    return (part - inside).cwiseAbs().maxCoeff();
}

Eigen::MatrixXd collective_lowering_qubits(int n_atoms) {
    guard_qubits(n_atoms);
    const unsigned dim = 1u << n_atoms;
    Eigen::MatrixXd op = Eigen::MatrixXd::Zero(dim, dim);
    for (unsigned mask = 0; mask < dim; ++mask)
        for (int q = 0; q < n_atoms; ++q)
            if (mask & (1u << q)) op(mask ^ (1u << q), mask) += 1.0;
    return op;
}

} // namespace ness::oracles
