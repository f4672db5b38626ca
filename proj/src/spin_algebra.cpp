#include "ness/spin_algebra.hpp"

#include "ness/errors.hpp"
#include "ness/numeric.hpp"

#include <cmath>
#include <string>

namespace ness {

namespace {

void require_spin_pairing(int two_s, int two_q, const char* where) {
    if (two_s < 0) {
        throw domain_error(std::string(where) + ": negative spin two_s=" + std::to_string(two_s));
    }
    if (std::abs(two_q) > two_s || ((two_s - two_q) & 1) != 0) {
        throw domain_error(std::string(where) + ": invalid (S, q) pairing two_s=" +
                           std::to_string(two_s) + " two_q=" + std::to_string(two_q));
    }
}

} // namespace

DickeBasis::DickeBasis(int n_atoms) : n_atoms_(n_atoms) {
    if (n_atoms < 1) {
        throw domain_error("DickeBasis: n_atoms must be positive, got " + std::to_string(n_atoms));
    }
}

int DickeBasis::two_m(int index) const {
    if (index < 0 || index > n_atoms_) {
        throw domain_error("DickeBasis: index " + std::to_string(index) + " outside [0, " +
                           std::to_string(n_atoms_) + "]");
    }
    return 2 * index - n_atoms_;
}

int DickeBasis::index_of(int two_m) const {
    if (std::abs(two_m) > n_atoms_ || ((two_m + n_atoms_) & 1) != 0) {
        throw domain_error("DickeBasis: two_m=" + std::to_string(two_m) +
                           " not in the spin-" + std::to_string(n_atoms_) + "/2 multiplet");
    }
    return (two_m + n_atoms_) / 2;
}

double ladder_coefficient(int two_s, int two_q, int n) {
    require_spin_pairing(two_s, two_q, "ladder_coefficient");
    if (n < 0) {
        throw domain_error("ladder_coefficient: negative step count n=" + std::to_string(n));
    }
    if (n == 0) return 1.0;
    if (two_q + 2 * n > two_s) return 0.0; // ladder exits the multiplet
    double value = 1.0;
    for (int k = 0; k < n; ++k) {
        const double down = 0.5 * (two_s - two_q) - k;     // S - q - k
        const double up = 0.5 * (two_s + two_q) + k + 1.0; // S + q + k + 1
        value *= std::sqrt(down * up);
    }
    return value;
}

LogValue log_ladder_coefficient(int two_s, int two_q, int n) {
    require_spin_pairing(two_s, two_q, "log_ladder_coefficient");
    if (n < 0) {
        throw domain_error("log_ladder_coefficient: negative step count n=" + std::to_string(n));
    }
    if (n == 0) return {0.0, false};
    if (two_q + 2 * n > two_s) return {0.0, true};
    // f(q,n)^2 = [(S-q)! / (S-q-n)!] * [(S+q+n)! / (S+q)!], all integers here.
    const int s_minus_q = (two_s - two_q) / 2;
    const int s_plus_q = (two_s + two_q) / 2;
    const double log_sq = log_factorial(s_minus_q) - log_factorial(s_minus_q - n) +
                          log_factorial(s_plus_q + n) - log_factorial(s_plus_q);
    return {0.5 * log_sq, false};
}

Eigen::MatrixXcd collective_operator_matrix(const DickeBasis& basis, CollectiveOperator which) {
    const int d = basis.dimension();
    const int two_s = basis.two_s();
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Zero(d, d);
    switch (which) {
    case CollectiveOperator::raise:
        for (int i = 0; i + 1 < d; ++i) {
            op(i + 1, i) = ladder_coefficient(two_s, basis.two_m(i), 1);
        }
        break;
    case CollectiveOperator::lower:
        for (int i = 0; i + 1 < d; ++i) {
            op(i, i + 1) = ladder_coefficient(two_s, basis.two_m(i), 1);
        }
        break;
    case CollectiveOperator::z:
        for (int i = 0; i < d; ++i) {
            op(i, i) = basis.m(i);
        }
        break;
    }
    return op;
}

CouplingScheme::CouplingScheme(int total_atoms, int part_size)
    : total_atoms_(total_atoms), part_size_(part_size) {
    if (total_atoms < 2) {
        throw domain_error("CouplingScheme: total_atoms must be >= 2, got " +
                           std::to_string(total_atoms));
    }
    if (part_size < 1 || part_size > total_atoms - 1) {
        throw domain_error("CouplingScheme: part_size=" + std::to_string(part_size) +
                           " outside [1, " + std::to_string(total_atoms - 1) + "]");
    }
    const int m = part_size_;
    const int c = total_atoms_ - part_size_;
    table_.resize(static_cast<std::size_t>(m + 1) * (c + 1));
    // Stretched coupling: C = sqrt( C(M,a) C(N-M,b) / C(N,a+b) ) with
    // excitation counts a, b; evaluated in the log domain so it stays exact
    // in range for any N this code targets.
    for (int a = 0; a <= m; ++a) {
        for (int b = 0; b <= c; ++b) {
            const double log_sq =
                log_binomial(m, a) + log_binomial(c, b) - log_binomial(total_atoms_, a + b);
            table_[static_cast<std::size_t>(a) * (c + 1) + b] = std::exp(0.5 * log_sq);
        }
    }
}

double CouplingScheme::coefficient_by_counts(int a, int b) const {
    const int c = total_atoms_ - part_size_;
    if (a < 0 || a > part_size_ || b < 0 || b > c) {
        throw domain_error("CouplingScheme: counts (a=" + std::to_string(a) + ", b=" +
                           std::to_string(b) + ") out of range");
    }
    return table_[static_cast<std::size_t>(a) * (c + 1) + b];
}

double CouplingScheme::coefficient(int two_j, int two_k) const {
    const int two_j1 = part_size_;
    const int two_j2 = total_atoms_ - part_size_;
    if (std::abs(two_j) > two_j1 || ((two_j1 - two_j) & 1) != 0) {
        throw domain_error("CouplingScheme: two_j=" + std::to_string(two_j) +
                           " invalid for j1 with two_j1=" + std::to_string(two_j1));
    }
    if (std::abs(two_k) > two_j2 || ((two_j2 - two_k) & 1) != 0) {
        throw domain_error("CouplingScheme: two_k=" + std::to_string(two_k) +
                           " invalid for j2 with two_j2=" + std::to_string(two_j2));
    }
    return coefficient_by_counts((two_j + two_j1) / 2, (two_k + two_j2) / 2);
}

double clebsch_gordan(const CouplingScheme& scheme, int two_j, int two_k) {
    return scheme.coefficient(two_j, two_k);
}

} // namespace ness
