#pragma once

#include "ness/entanglement.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ness {

/// One figure-ready table request: a uniform omega_s grid crossed with a
/// list of ensemble sizes.
struct SweepSpec {
    std::vector<int> n_atoms;
    double omega_min = 0.0;
    double omega_max = 3.0;
    int points = 301;
    std::vector<int> parts{1, 2, 3};
    double phase = 0.0;
    bool phase_averaged = false;
    RelativeVariant relative_variant = RelativeVariant::caption;
    std::optional<int> derivative_for; // part size whose entropy is differentiated

    void validate() const;
    double omega_at(int index) const;
};

struct SweepRow {
    int n_atoms = 0;
    EntropyRecord record;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<SweepRow> rows; // sorted by (n_atoms list order, grid index)
    std::string provenance;    // solver and tolerance notes; never serialized
};

/// Evaluate the sweep with the point loop shared across workers. Rows are
/// written by index, so the result is bitwise identical for any worker
/// count, including the serial reference below. A numeric failure at any
/// point aborts the sweep naming the offending (n_atoms, omega_s).
SweepResult run_sweep(const SweepSpec& spec);

/// Same computation on a single thread; kept as the determinism and
/// benchmark reference for run_sweep.
SweepResult run_sweep_serial(const SweepSpec& spec);

} // namespace ness
