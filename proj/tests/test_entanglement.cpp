#include "ness/density_matrix.hpp"
#include "ness/entanglement.hpp"
#include "ness/errors.hpp"
#include "ness/reduction.hpp"
#include "ness/steady_state.hpp"

#include <doctest.h>

#include <cmath>
#include <map>
#include <vector>

using namespace ness;

namespace {
constexpr double kLog2Of3 = 1.584962500721156;
}

TEST_CASE("pure and maximally mixed states hit the entropy extremes exactly") {
    CHECK(von_neumann_entropy(DensityMatrix::pure_basis_state(5, 2)) == 0.0);
    CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(4)) == 2.0);
    CHECK(von_neumann_entropy(DensityMatrix::maximally_mixed(2)) == 1.0);
}

TEST_CASE("entropy of a known two-level spectrum") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 0) = 0.25;
    m(1, 1) = 0.75;
    const double expected = -0.25 * std::log2(0.25) - 0.75 * std::log2(0.75);
    CHECK(von_neumann_entropy(DensityMatrix(m)) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("a rank-one coherent superposition carries no entropy") {
    Eigen::MatrixXcd m(2, 2);
    m << 0.5, 0.5, 0.5, 0.5;
    const double s = von_neumann_entropy(DensityMatrix(m));
    CHECK(s >= 0.0);
    CHECK(s <= 1e-12);
}

TEST_CASE("entropy is basis independent (unitary similarity leaves it fixed)") {
    const DensityMatrix state = reduce(exact_steady_state({9, 1.0, 0.0}), 3).matrix;
    const DensityMatrix rotated = reduce(exact_steady_state({9, 1.0, 0.8}), 3).matrix;
    CHECK(von_neumann_entropy(state) ==
          doctest::Approx(von_neumann_entropy(rotated)).epsilon(1e-11));
}

TEST_CASE("eigenvalues below the positivity floor are refused") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2, 2);
    m(0, 0) = 1.0 + 1e-8;
    m(1, 1) = -1e-8;
    CHECK_THROWS_AS(von_neumann_entropy(DensityMatrix(m)), positivity_error);
    // Just inside the floor it clamps instead.
    m(0, 0) = 1.0 + 1e-11;
    m(1, 1) = -1e-11;
    CHECK(von_neumann_entropy(DensityMatrix(m)) == 0.0);
}

TEST_CASE("the spectral routine meets the residual contract on real workloads") {
    const DensityMatrix rho = reduce(exact_steady_state({12, 1.0, 0.6}), 3).matrix;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho.matrix());
    REQUIRE(solver.info() == Eigen::Success);
    const double scale = rho.matrix().norm();
    for (int k = 0; k < rho.dimension(); ++k) {
        const double residual =
            (rho.matrix() * solver.eigenvectors().col(k) -
             solver.eigenvalues()(k) * solver.eigenvectors().col(k))
                .norm();
        CHECK(residual <= 1e-11 * scale);
    }
    // The sorted spectrum matches the library's accessor.
    const std::vector<double> eigs = state_spectrum(rho);
    for (int k = 0; k < rho.dimension(); ++k)
        CHECK(eigs[k] == doctest::Approx(solver.eigenvalues()(k)).epsilon(1e-12));
}

TEST_CASE("exactly diagonal states take the exact spectral path") {
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(3, 3);
    m(0, 0) = 0.5;
    m(1, 1) = 0.125;
    m(2, 2) = 0.375;
    const std::vector<double> eigs = state_spectrum(DensityMatrix(m));
    CHECK(eigs[0] == 0.125);
    CHECK(eigs[1] == 0.375);
    CHECK(eigs[2] == 0.5);
    const double expected = -(0.5 * std::log2(0.5) + 0.125 * std::log2(0.125) +
                              0.375 * std::log2(0.375));
    CHECK(von_neumann_entropy(DensityMatrix(m)) == doctest::Approx(expected).epsilon(1e-15));
}

TEST_CASE("finite differences recover polynomial slopes exactly") {
    std::vector<double> xs(9), constant(9), linear(9), quadratic(9);
    for (int i = 0; i < 9; ++i) {
        xs[i] = 0.5 + 0.25 * i;
        constant[i] = 3.25;
        linear[i] = 2.0 * xs[i];
        quadratic[i] = xs[i] * xs[i];
    }
    for (double d : entropy_derivative(xs, constant)) CHECK(d == 0.0);
    for (double d : entropy_derivative(xs, linear))
        CHECK(d == doctest::Approx(2.0).epsilon(1e-12));
    const std::vector<double> dq = entropy_derivative(xs, quadratic);
    for (int i = 0; i < 9; ++i) CHECK(dq[i] == doctest::Approx(2.0 * xs[i]).epsilon(1e-12));
}

TEST_CASE("derivative rejects malformed grids") {
    const std::vector<double> two = {0.0, 1.0};
    CHECK_THROWS_AS(entropy_derivative(two, two), domain_error);
    const std::vector<double> uneven = {0.0, 1.0, 2.5};
    const std::vector<double> ys = {0.0, 0.0, 0.0};
    CHECK_THROWS_AS(entropy_derivative(uneven, ys), domain_error);
    const std::vector<double> backwards = {2.0, 1.0, 0.0};
    CHECK_THROWS_AS(entropy_derivative(backwards, ys), domain_error);
    const std::vector<double> mismatch = {0.0, 1.0, 2.0, 3.0};
    CHECK_THROWS_AS(entropy_derivative(mismatch, ys), domain_error);
}

TEST_CASE("entropy combinations reproduce their defining arithmetic") {
    const std::map<int, double> zeros = {{1, 0.0}, {2, 0.0}, {3, 0.0}};
    CHECK(relative_entropy_multipartite(zeros, 3, RelativeVariant::caption) == 0.0);
    CHECK(relative_entropy_multipartite(zeros, 3, RelativeVariant::eq8) == 0.0);

    const std::map<int, double> asymptotic = {{1, 1.0}, {2, kLog2Of3}, {3, 2.0}};
    CHECK(relative_entropy_multipartite(asymptotic, 3, RelativeVariant::caption) ==
          doctest::Approx(-0.245).epsilon(1e-3));
    CHECK(relative_entropy_multipartite(asymptotic, 3, RelativeVariant::eq8) ==
          doctest::Approx(5.755).epsilon(1e-3));

    const double s = 0.731;
    const std::map<int, double> flat = {{1, s}, {2, s}, {3, s}};
    CHECK(relative_entropy_multipartite(flat, 3, RelativeVariant::caption) ==
          doctest::Approx(-s).epsilon(1e-13));
    CHECK(relative_entropy_multipartite(flat, 3, RelativeVariant::eq8) ==
          doctest::Approx(5.0 * s).epsilon(1e-13));

    // The literal combination generalizes to other part sizes.
    const std::map<int, double> pair = {{1, 0.5}, {2, 0.8}};
    CHECK(relative_entropy_multipartite(pair, 2, RelativeVariant::eq8) ==
          doctest::Approx(2.0 * 0.5 - 0.8).epsilon(1e-13));
}

TEST_CASE("entropy combination preconditions") {
    const std::map<int, double> missing = {{1, 0.5}, {3, 0.9}};
    CHECK_THROWS_AS(relative_entropy_multipartite(missing, 3, RelativeVariant::eq8),
                    domain_error);
    const std::map<int, double> pair = {{1, 0.5}, {2, 0.8}};
    CHECK_THROWS_AS(relative_entropy_multipartite(pair, 2, RelativeVariant::caption),
                    domain_error); // the caption combination is a 3-part quantity
    CHECK_THROWS_AS(relative_entropy_multipartite(pair, 0, RelativeVariant::eq8),
                    domain_error);
}

TEST_CASE("inequality quantity is the stated combination") {
    CHECK(lieb_quantity(0.0, 0.0, 0.0) == 0.0);
    CHECK(lieb_quantity(1.0, kLog2Of3, 2.0) == doctest::Approx(-0.17).epsilon(1e-3));
    CHECK(lieb_quantity(0.2, 0.5, 0.7) == doctest::Approx(-0.1).epsilon(1e-12));
}

TEST_CASE("strong drive saturates the marginal entropies at their mixed limits") {
    const DensityMatrix state = exact_steady_state({100, 50.0, 0.0});
    const double s2 = von_neumann_entropy(reduce(state, 2).matrix);
    const double s3 = von_neumann_entropy(reduce(state, 3).matrix);
    CHECK(std::abs(s2 - kLog2Of3) < 0.02);
    CHECK(std::abs(s3 - 2.0) < 0.03);
}
