#include "ness/errors.hpp"
#include "ness/output.hpp"
#include "ness/sweep.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

using namespace ness;

namespace {

SweepSpec small_spec() {
    SweepSpec spec;
    spec.n_atoms = {4};
    spec.omega_min = 0.0;
    spec.omega_max = 2.0;
    spec.points = 5;
    return spec;
}

} // namespace

TEST_CASE("a small sweep produces one row per grid point with zeroed origin") {
    const SweepResult result = run_sweep(small_spec());
    REQUIRE(result.rows.size() == 5);
    CHECK(result.rows.front().record.omega_s == 0.0);
    CHECK(result.rows.back().record.omega_s == doctest::Approx(2.0));
    for (int m : {1, 2, 3}) CHECK(result.rows.front().record.entropies.at(m) == 0.0);
    for (const SweepRow& row : result.rows) {
        CHECK(row.n_atoms == 4);
        REQUIRE(row.record.lieb_value.has_value());
        CHECK(*row.record.lieb_value <= 1e-12);
        REQUIRE(row.record.relative_caption.has_value());
        REQUIRE(row.record.relative_eq8.has_value());
        CHECK_FALSE(row.record.derivative.has_value());
        for (const auto& [m, s] : row.record.entropies) {
            CHECK(s >= 0.0);
            CHECK(s <= std::log2(m + 1.0) + 1e-9);
        }
    }
}

TEST_CASE("grid points rise monotonically and respect the requested bounds") {
    const SweepSpec spec = small_spec();
    CHECK(spec.omega_at(0) == 0.0);
    CHECK(spec.omega_at(4) == doctest::Approx(2.0));
    for (int i = 0; i + 1 < 5; ++i) CHECK(spec.omega_at(i) < spec.omega_at(i + 1));
}

TEST_CASE("repeated, serial and thread-capped runs are byte identical") {
    SweepSpec spec = small_spec();
    spec.n_atoms = {4, 9};
    spec.points = 21;
    spec.derivative_for = 2;

    const std::string first = sweep_csv(run_sweep(spec));
    const std::string again = sweep_csv(run_sweep(spec));
    const std::string serial = sweep_csv(run_sweep_serial(spec));
    CHECK(first == again);
    CHECK(first == serial);

    setenv("NESS_THREADS", "3", 1);
    const std::string capped = sweep_csv(run_sweep(spec));
    unsetenv("NESS_THREADS");
    CHECK(first == capped);
}

TEST_CASE("derivative column peaks near the transition region") {
    SweepSpec spec;
    spec.n_atoms = {20};
    spec.omega_min = 0.0;
    spec.omega_max = 3.0;
    spec.points = 101;
    spec.derivative_for = 2;
    const SweepResult result = run_sweep(spec);
    double best = -1e300, best_omega = 0.0;
    for (const SweepRow& row : result.rows) {
        REQUIRE(row.record.derivative.has_value());
        if (*row.record.derivative > best) {
            best = *row.record.derivative;
            best_omega = row.record.omega_s;
        }
    }
    CHECK(best > 0.0);
    CHECK(best_omega > 0.5);
    CHECK(best_omega < 1.5);
}

TEST_CASE("entropies do not depend on the drive phase") {
    SweepSpec spec = small_spec();
    spec.n_atoms = {7};
    const SweepResult at_zero = run_sweep(spec);
    spec.phase = 0.7;
    const SweepResult at_phi = run_sweep(spec);
    for (std::size_t i = 0; i < at_zero.rows.size(); ++i)
        for (int m : {1, 2, 3})
            CHECK(std::abs(at_zero.rows[i].record.entropies.at(m) -
                           at_phi.rows[i].record.entropies.at(m)) < 1e-10);
}

TEST_CASE("phase-averaged sweeps transition more gently than coherent ones") {
    SweepSpec spec;
    spec.n_atoms = {40};
    spec.points = 61;
    const SweepResult coherent = run_sweep(spec);
    spec.phase_averaged = true;
    const SweepResult averaged = run_sweep(spec);

    auto max_slope = [](const SweepResult& r) {
        double worst = 0.0;
        for (std::size_t i = 1; i < r.rows.size(); ++i)
            worst = std::max(worst, std::abs(r.rows[i].record.entropies.at(2) -
                                             r.rows[i - 1].record.entropies.at(2)));
        return worst;
    };
    CHECK(max_slope(averaged) < max_slope(coherent));
}

TEST_CASE("invalid sweep requests are rejected up front") {
    SweepSpec spec = small_spec();
    spec.parts = {2, 3, 4};
    CHECK_THROWS_AS(spec.validate(), domain_error); // part 4 needs N > 4

    spec = small_spec();
    spec.points = 1;
    CHECK_THROWS_AS(spec.validate(), domain_error);

    spec = small_spec();
    spec.derivative_for = 5;
    CHECK_THROWS_AS(spec.validate(), domain_error);

    spec = small_spec();
    spec.omega_min = -0.5;
    CHECK_THROWS_AS(spec.validate(), domain_error);

    spec = small_spec();
    spec.n_atoms = {};
    CHECK_THROWS_AS(spec.validate(), domain_error);
}
