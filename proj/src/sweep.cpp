#include "ness/sweep.hpp"

#include "ness/errors.hpp"
#include "ness/numeric.hpp"
#include "ness/reduction.hpp"
#include "ness/steady_state.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <sstream>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ness {

void SweepSpec::validate() const {
    if (n_atoms.empty()) throw domain_error("sweep needs at least one ensemble size");
    for (int n : n_atoms)
        if (n < 1) throw domain_error("n_atoms must be positive, got " + std::to_string(n));
    if (points < 2) throw domain_error("grid needs at least 2 points");
    if (!(omega_min >= 0.0)) throw domain_error("omega_min must be non-negative");
    if (!(omega_max > omega_min)) throw domain_error("omega_max must exceed omega_min");
    if (parts.empty()) throw domain_error("sweep needs at least one part size");
    const int n_min = *std::min_element(n_atoms.begin(), n_atoms.end());
    for (int m : parts)
        if (m < 1 || m >= n_min)
            throw domain_error("part size " + std::to_string(m) +
                               " must satisfy 1 <= M <= N-1 for every requested N (min N = " +
                               std::to_string(n_min) + ")");
    if (derivative_for &&
        std::find(parts.begin(), parts.end(), *derivative_for) == parts.end())
        throw domain_error("derivative part size " + std::to_string(*derivative_for) +
                           " is not in the requested parts");
    if (!std::isfinite(phase)) throw domain_error("phase must be finite");
}

double SweepSpec::omega_at(int index) const {
    const double h = (omega_max - omega_min) / (points - 1);
    return omega_min + index * h;
}

namespace {

EntropyRecord evaluate_point(const SweepSpec& spec, int n, double omega) {
    const DriveParams params{n, omega, spec.phase};
    const DensityMatrix state =
        spec.phase_averaged ? phase_averaged_steady_state(params) : exact_steady_state(params);

    EntropyRecord rec;
    rec.omega_s = omega;
    for (int m : spec.parts) rec.entropies[m] = von_neumann_entropy(reduce(state, m).matrix);

    const bool has123 = rec.entropies.count(1) && rec.entropies.count(2) && rec.entropies.count(3);
    if (has123) {
        rec.lieb_value = lieb_quantity(rec.entropies.at(1), rec.entropies.at(2),
                                       rec.entropies.at(3));
        rec.relative_caption =
            relative_entropy_multipartite(rec.entropies, 3, RelativeVariant::caption);
        rec.relative_eq8 = relative_entropy_multipartite(rec.entropies, 3, RelativeVariant::eq8);
    }
    return rec;
}

SweepResult run_sweep_impl(SweepSpec spec, int workers) {
    spec.validate();
    std::sort(spec.n_atoms.begin(), spec.n_atoms.end()); // rows ordered by (N, grid index)
    const int points = spec.points;
    const long total = static_cast<long>(spec.n_atoms.size()) * points;

    SweepResult result;
    result.spec = spec;
    result.rows.resize(total);

    std::atomic<bool> failed{false};
    std::string failure;

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(workers)
#endif
    for (long idx = 0; idx < total; ++idx) {
        if (failed.load(std::memory_order_relaxed)) continue;
        const int n = spec.n_atoms[idx / points];
        const double omega = spec.omega_at(static_cast<int>(idx % points));
        try {
            result.rows[idx] = SweepRow{n, evaluate_point(spec, n, omega)};
        } catch (const std::exception& e) {
#ifdef _OPENMP
#pragma omp critical
#endif
            {
                if (!failed.load(std::memory_order_relaxed)) {
                    std::ostringstream os;
                    os << "sweep point n_atoms=" << n << ", omega_s=" << omega
                       << " failed: " << e.what();
                    failure = os.str();
                    failed.store(true, std::memory_order_relaxed);
                }
            }
        }
    }
    if (failed) throw numeric_range_error(failure);

    // Derivative pass: a cheap serial post-step per ensemble size.
    if (spec.derivative_for) {
        const int m = *spec.derivative_for;
        std::vector<double> xs(points), ys(points);
        for (int i = 0; i < points; ++i) xs[i] = spec.omega_at(i);
        for (std::size_t block = 0; block < spec.n_atoms.size(); ++block) {
            const long base = static_cast<long>(block) * points;
            for (int i = 0; i < points; ++i)
                ys[i] = result.rows[base + i].record.entropies.at(m);
            const std::vector<double> dy = entropy_derivative(xs, ys);
            for (int i = 0; i < points; ++i) result.rows[base + i].record.derivative = dy[i];
        }
    }

    std::ostringstream prov;
    prov << "closed-form ladder expansion, log-domain accumulation; trace tol 1e-12, "
            "positivity floor -1e-10; workers=" << workers;
    result.provenance = prov.str();
    return result;
}

} // namespace

SweepResult run_sweep(const SweepSpec& spec) { return run_sweep_impl(spec, worker_count()); }

SweepResult run_sweep_serial(const SweepSpec& spec) { return run_sweep_impl(spec, 1); }

} // namespace ness
