#pragma once

#include "ness/density_matrix.hpp"

#include <map>
#include <optional>
#include <span>
#include <vector>

namespace ness {

/// Eigenvalues of a state in ascending order. Exactly diagonal matrices
/// (every off-diagonal entry identically zero) take an exact fast path that
/// returns the sorted diagonal, so diagonal spectra carry no solver noise.
std::vector<double> state_spectrum(const DensityMatrix& rho);

/// Von Neumann entropy in bits, -sum lambda log2 lambda with 0 log 0 = 0.
/// Eigenvalues below 1e-14 count as exact zeros; values in [-1e-10, 0) are
/// clamped to zero; anything below -1e-10 throws positivity_error.
double von_neumann_entropy(const DensityMatrix& rho);

/// Finite-difference d(values)/d(abscissae) on a uniform grid: central
/// differences inside, second-order one-sided stencils at the ends. Needs
/// at least 3 strictly increasing, uniformly spaced abscissae.
std::vector<double> entropy_derivative(std::span<const double> abscissae,
                                       std::span<const double> values);

enum class RelativeVariant { caption, eq8 };

/// Multipartite relative-entropy combination for an M-atom part.
/// `eq8`: sum_{k=1..M} binom(M,k) S_{M-k} - S_M with S_0 = 0.
/// `caption`: 3 S_2 - 3 S_1 - S_3, defined for M = 3 only.
/// `entropies` must contain every part size 1..M.
double relative_entropy_multipartite(const std::map<int, double>& entropies, int part_size,
                                     RelativeVariant variant);

/// S1 + S3 - 2*S2. Negative values mean the triple satisfies the
/// strong-subadditivity (Lieb) inequality.
double lieb_quantity(double s1, double s2, double s3);

/// One sweep point's entanglement diagnostics. Optional fields stay empty
/// when the requested part set cannot support them.
struct EntropyRecord {
    double omega_s = 0.0;
    std::map<int, double> entropies; // part size -> bits
    std::optional<double> lieb_value;
    std::optional<double> relative_caption;
    std::optional<double> relative_eq8;
    std::optional<double> derivative; // bits per unit omega_s
};

} // namespace ness
