#include "ness/reduction.hpp"

#include "ness/errors.hpp"
#include "ness/spin_algebra.hpp"

#include <complex>
#include <string>

namespace ness {

ReducedState reduce(const DensityMatrix& rho, int part_size) {
    const int parent = rho.dimension() - 1;
    if (parent < 2)
        throw domain_error("reduction needs a parent of at least 2 atoms, got " +
                           std::to_string(parent));
    if (part_size < 1 || part_size >= parent)
        throw domain_error("part_size must satisfy 1 <= M <= N-1 (M=" +
                           std::to_string(part_size) + ", N=" + std::to_string(parent) + ")");

    const CouplingScheme scheme(parent, part_size);
    const int complement = parent - part_size;
    const Eigen::MatrixXcd& full = rho.matrix();
    Eigen::MatrixXcd out(part_size + 1, part_size + 1);
    for (int a = 0; a <= part_size; ++a) {
        for (int ap = 0; ap <= a; ++ap) {
            std::complex<double> acc{0.0, 0.0};
            for (int b = 0; b <= complement; ++b)
                acc += full(a + b, ap + b) * scheme.coefficient_by_counts(a, b) *
                       scheme.coefficient_by_counts(ap, b);
            out(a, ap) = acc;
            if (a != ap) out(ap, a) = std::conj(acc);
        }
    }
    return ReducedState{part_size, parent, DensityMatrix(out)};
}

} // namespace ness
