#include "ness/entanglement.hpp"

#include "ness/errors.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

namespace ness {

std::vector<double> state_spectrum(const DensityMatrix& rho) {
    const int dim = rho.dimension();
    std::vector<double> eigs(dim);
    if (rho.max_offdiagonal_magnitude() == 0.0) {
        for (int i = 0; i < dim; ++i) eigs[i] = rho.matrix()(i, i).real();
        std::sort(eigs.begin(), eigs.end());
        return eigs;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix(),
                                                           Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw numeric_range_error("eigenvalue iteration failed to converge");
    for (int i = 0; i < dim; ++i) eigs[i] = solver.eigenvalues()(i);
    return eigs;
}

double von_neumann_entropy(const DensityMatrix& rho) {
    constexpr double kZeroCut = 1e-14;
    constexpr double kNegativeFloor = -1e-10;
    double entropy = 0.0;
    for (double lambda : state_spectrum(rho)) {
        if (lambda < kNegativeFloor)
            throw positivity_error("state eigenvalue " + std::to_string(lambda) +
                                   " is below the positivity floor");
        if (lambda < kZeroCut) continue; // 0 log 0 = 0; clamped roundoff included
        entropy -= lambda * std::log2(lambda);
    }
    // Eigenvalues can exceed 1 by roundoff and nudge the sum below zero.
    if (entropy < 0.0) {
        if (entropy < -1e-9)
            throw invariant_error("entropy " + std::to_string(entropy) + " is negative");
        entropy = 0.0;
    }
    return entropy;
}

std::vector<double> entropy_derivative(std::span<const double> abscissae,
                                       std::span<const double> values) {
    const std::size_t n = abscissae.size();
    if (n != values.size())
        throw domain_error("derivative needs matching abscissa/value lengths");
    if (n < 3) throw domain_error("derivative needs at least 3 samples");
    const double h = abscissae[1] - abscissae[0];
    if (!(h > 0.0)) throw domain_error("abscissae must be strictly increasing");
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double step = abscissae[i + 1] - abscissae[i];
        if (!(step > 0.0)) throw domain_error("abscissae must be strictly increasing");
        if (std::abs(step - h) > 1e-8 * std::max(1.0, std::abs(h)))
            throw domain_error("derivative requires uniform spacing; got steps " +
                               std::to_string(h) + " and " + std::to_string(step));
    }
    std::vector<double> out(n);
    out[0] = (-3.0 * values[0] + 4.0 * values[1] - values[2]) / (2.0 * h);
    for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (values[i + 1] - values[i - 1]) / (2.0 * h);
    out[n - 1] = (3.0 * values[n - 1] - 4.0 * values[n - 2] + values[n - 3]) / (2.0 * h);
    return out;
}

namespace {

double entropy_at(const std::map<int, double>& entropies, int part) {
    if (part == 0) return 0.0;
    const auto it = entropies.find(part);
    if (it == entropies.end())
        throw domain_error("missing entropy for part size " + std::to_string(part));
    return it->second;
}

} // namespace

double relative_entropy_multipartite(const std::map<int, double>& entropies, int part_size,
                                     RelativeVariant variant) {
    if (part_size < 1) throw domain_error("part_size must be positive");
    if (variant == RelativeVariant::caption) {
        if (part_size != 3)
            throw domain_error("the caption combination is defined for part_size 3 only");
        return 3.0 * entropy_at(entropies, 2) - 3.0 * entropy_at(entropies, 1) -
               entropy_at(entropies, 3);
    }
    double sum = -entropy_at(entropies, part_size);
    double binom = 1.0;
    for (int k = 1; k <= part_size; ++k) {
        binom = binom * (part_size - k + 1) / k; // exact for the part sizes in use
        sum += binom * entropy_at(entropies, part_size - k);
    }
    return sum;
}

double lieb_quantity(double s1, double s2, double s3) { return s1 + s3 - 2.0 * s2; }

} // namespace ness
