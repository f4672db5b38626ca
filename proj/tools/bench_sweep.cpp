// Timing harness: the worker-parallel sweep against its serial reference,
// on the workload class the library is sized for. Also verifies the two
// paths produce byte-identical tables, which is the determinism contract.

#include "ness/numeric.hpp"
#include "ness/output.hpp"
#include "ness/sweep.hpp"

#include <chrono>
#include <cstdio>

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

} // namespace

int main() {
    ness::SweepSpec spec;
    spec.n_atoms = {50, 100, 200, 400};
    spec.points = 301;
    spec.derivative_for = 2;

    std::printf("sweep workload: N={50,100,200,400}, 301 grid points, parts {1,2,3}\n");

    const auto t0 = std::chrono::steady_clock::now();
    const ness::SweepResult serial = ness::run_sweep_serial(spec);
    const double serial_s = seconds_since(t0);
    std::printf("serial:   %8.3f s\n", serial_s);

    const auto t1 = std::chrono::steady_clock::now();
    const ness::SweepResult parallel = ness::run_sweep(spec);
    const double parallel_s = seconds_since(t1);
    std::printf("parallel: %8.3f s  (%d workers)  speedup %.2fx\n", parallel_s,
                ness::worker_count(), serial_s / parallel_s);

    const bool identical = ness::sweep_csv(serial) == ness::sweep_csv(parallel);
    std::printf("tables byte-identical: %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
