#pragma once

#include <Eigen/Dense>

#include <vector>

namespace ness {

// Spins and magnetic quantum numbers are carried as doubled integers
// (two_s = 2S, two_m = 2m) so that half-integer bookkeeping stays exact.

/// The (N+1)-dimensional symmetric spin-N/2 sector of N two-level atoms.
/// Basis index i in {0..N} maps to magnetic number m = i - N/2, so index 0
/// is the fully de-excited state |S,-S>.
class DickeBasis {
public:
    explicit DickeBasis(int n_atoms);

    int n_atoms() const { return n_atoms_; }
    int dimension() const { return n_atoms_ + 1; }
    int two_s() const { return n_atoms_; }

    int two_m(int index) const;
    int index_of(int two_m) const;
    double m(int index) const { return 0.5 * two_m(index); }

private:
    int n_atoms_;
};

/// Norm factor f(q, n) with (S+)^n |S,q> = f(q,n) |S,q+n>:
/// f(q, n) = prod_{k=0}^{n-1} sqrt((S-q-k)(S+q+k+1)).
/// Zero when q+n > S, one when n = 0.
double ladder_coefficient(int two_s, int two_q, int n);

/// Log-domain companion of ladder_coefficient for large-N work.
struct LogValue {
    double log_magnitude; // meaningful only when !is_zero
    bool is_zero;
};
LogValue log_ladder_coefficient(int two_s, int two_q, int n);

enum class CollectiveOperator { raise, lower, z };

/// Matrix of S+, S- or S_z on the Dicke basis. (S-) is the exact entrywise
/// adjoint of (S+).
Eigen::MatrixXcd collective_operator_matrix(const DickeBasis& basis, CollectiveOperator which);

/// Stretched angular-momentum coupling M/2 (x) (N-M)/2 -> N/2 with the
/// Condon-Shortley convention; every coefficient is real and nonnegative.
/// The table is immutable after construction and safe to share across
/// threads.
class CouplingScheme {
public:
    CouplingScheme(int total_atoms, int part_size);

    int total_atoms() const { return total_atoms_; }
    int part_size() const { return part_size_; }
    int complement_size() const { return total_atoms_ - part_size_; }
    int two_j1() const { return part_size_; }
    int two_j2() const { return total_atoms_ - part_size_; }

    /// <j1 j; j2 k | J=j1+j2, p=j+k> for doubled magnetic numbers.
    double coefficient(int two_j, int two_k) const;

    /// Table access by excitation counts a = j + j1 in {0..M},
    /// b = k + j2 in {0..N-M}.
    double coefficient_by_counts(int a, int b) const;

private:
    int total_atoms_;
    int part_size_;
    std::vector<double> table_; // (M+1) x (N-M+1), row-major in a
};

double clebsch_gordan(const CouplingScheme& scheme, int two_j, int two_k);

} // namespace ness
