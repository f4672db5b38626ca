#pragma once

#include "ness/sweep.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ness {

/// Shortest round-trippable decimal with 12 significant digits ("%.12g").
std::string format_double(double value);

/// Fixed-schema table of a sweep, one row per (n_atoms, grid point):
///   n_atoms,omega_s,S1,S2,S3,dS2_domega,lieb,S_rel_caption,S_rel_eq8,phase_averaged
/// Missing quantities are empty cells; phase_averaged is 0 or 1. Byte
/// deterministic for a given result. The derivative column carries the
/// requested part's derivative (part 2 in every shipped preset).
std::string sweep_csv(const SweepResult& result);

/// JSON mirror of sweep_csv: an array of objects with the same keys, null
/// where the CSV cell is empty, numbers rendered exactly as in the CSV.
std::string sweep_json(const SweepResult& result);

/// Relaxation series as "time,trace_distance" rows.
std::string relaxation_csv(const std::vector<std::pair<double, double>>& series);

/// Comma-separated table with a header row; empty cells become nullopt.
struct CsvTable {
    std::vector<std::string> columns;
    std::vector<std::vector<std::optional<double>>> rows;

    /// Column index by header name, -1 when absent.
    int column(const std::string& name) const;
};

CsvTable parse_csv(const std::string& text);

/// Gnuplot script reproducing the standard figure set from a sweep table:
/// entropy curves, the derivative peak, phase-average comparison when both
/// drives are present, both entropy combinations, and the inequality
/// quantity. Only figures whose columns hold data are emitted. The script
/// reads `csv_path` at plot time; nothing is rendered here.
std::string gnuplot_script(const CsvTable& table, const std::string& csv_path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace ness
