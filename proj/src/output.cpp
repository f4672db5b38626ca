#include "ness/output.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ness {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value);
    return buf;
}

namespace {

std::string cell(const std::optional<double>& v) { return v ? format_double(*v) : std::string(); }

std::optional<double> entropy_cell(const EntropyRecord& rec, int part) {
    const auto it = rec.entropies.find(part);
    if (it == rec.entropies.end()) return std::nullopt;
    return it->second;
}

const char* kColumns[] = {"n_atoms",      "omega_s", "S1",
                          "S2",           "S3",      "dS2_domega",
                          "lieb",         "S_rel_caption", "S_rel_eq8",
                          "phase_averaged"};

std::vector<std::optional<double>> row_values(const SweepRow& row, bool phase_averaged) {
    const EntropyRecord& r = row.record;
    return {static_cast<double>(row.n_atoms),
            r.omega_s,
            entropy_cell(r, 1),
            entropy_cell(r, 2),
            entropy_cell(r, 3),
            r.derivative,
            r.lieb_value,
            r.relative_caption,
            r.relative_eq8,
            phase_averaged ? 1.0 : 0.0};
}

} // namespace

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream os;
    for (std::size_t c = 0; c < std::size(kColumns); ++c)
        os << (c ? "," : "") << kColumns[c];
    os << '\n';
    for (const SweepRow& row : result.rows) {
        const auto values = row_values(row, result.spec.phase_averaged);
        os << row.n_atoms << ',' << format_double(row.record.omega_s);
        for (std::size_t c = 2; c < values.size(); ++c) os << ',' << cell(values[c]);
        os << '\n';
    }
    return os.str();
}

std::string sweep_json(const SweepResult& result) {
    std::ostringstream os;
    os << "[\n";
    for (std::size_t i = 0; i < result.rows.size(); ++i) {
        const auto values = row_values(result.rows[i], result.spec.phase_averaged);
        os << "  {";
        for (std::size_t c = 0; c < values.size(); ++c) {
            os << (c ? ", " : "") << '"' << kColumns[c] << "\": ";
            if (!values[c]) {
                os << "null";
            } else if (c == 0 || c + 1 == values.size()) {
                os << static_cast<long>(*values[c]); // integer-valued columns
            } else {
                os << format_double(*values[c]);
            }
        }
        os << '}' << (i + 1 < result.rows.size() ? "," : "") << '\n';
    }
    os << "]\n";
    return os.str();
}

std::string relaxation_csv(const std::vector<std::pair<double, double>>& series) {
    std::ostringstream os;
    os << "time,trace_distance\n";
    for (const auto& [t, d] : series) os << format_double(t) << ',' << format_double(d) << '\n';
    return os.str();
}

int CsvTable::column(const std::string& name) const {
    const auto it = std::find(columns.begin(), columns.end(), name);
    return it == columns.end() ? -1 : static_cast<int>(it - columns.begin());
}

CsvTable parse_csv(const std::string& text) {
    CsvTable table;
    std::istringstream in(text);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::string::size_type pos = 0;
        while (true) {
            const auto comma = line.find(',', pos);
            cells.push_back(line.substr(pos, comma == std::string::npos ? comma : comma - pos));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        if (header) {
            table.columns = cells;
            header = false;
            continue;
        }
        std::vector<std::optional<double>> row;
        row.reserve(cells.size());
        for (const std::string& c : cells) {
            if (c.empty()) {
                row.emplace_back(std::nullopt);
            } else {
                row.emplace_back(std::stod(c));
            }
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

namespace {

bool column_has_data(const CsvTable& t, int col) {
    if (col < 0) return false;
    for (const auto& row : t.rows)
        if (static_cast<int>(row.size()) > col && row[col]) return true;
    return false;
}

} // namespace

std::string gnuplot_script(const CsvTable& table, const std::string& csv_path) {
    const int c_n = table.column("n_atoms");
    const int c_omega = table.column("omega_s");
    if (c_n < 0 || c_omega < 0)
        throw std::runtime_error("sweep table needs n_atoms and omega_s columns");
    const int c_s1 = table.column("S1");
    const int c_s2 = table.column("S2");
    const int c_s3 = table.column("S3");
    const int c_d = table.column("dS2_domega");
    const int c_lieb = table.column("lieb");
    const int c_cap = table.column("S_rel_caption");
    const int c_eq8 = table.column("S_rel_eq8");
    const int c_pa = table.column("phase_averaged");

    std::set<int> coherent_ns, averaged_ns;
    for (const auto& row : table.rows) {
        if (static_cast<int>(row.size()) <= c_n || !row[c_n]) continue;
        const int n = static_cast<int>(*row[c_n]);
        const bool averaged = c_pa >= 0 && row[c_pa] && *row[c_pa] != 0.0;
        (averaged ? averaged_ns : coherent_ns).insert(n);
    }
    std::set<int> all_ns = coherent_ns;
    all_ns.insert(averaged_ns.begin(), averaged_ns.end());
    if (all_ns.empty()) throw std::runtime_error("sweep table holds no rows");

    // gnuplot columns are 1-based.
    const int g_n = c_n + 1, g_omega = c_omega + 1, g_pa = c_pa + 1;
    auto filtered = [&](int n, bool averaged, int value_col) {
        std::ostringstream os;
        os << "using (($" << g_n << "==" << n;
        if (c_pa >= 0) os << " && $" << g_pa << "==" << (averaged ? 1 : 0);
        os << ") ? $" << g_omega << " : NaN):" << (value_col + 1);
        return os.str();
    };

    std::ostringstream os;
    os << "# Figure scripts for the sweep table in " << csv_path << "\n"
       << "# Run:  gnuplot <this file>\n"
       << "set datafile separator comma\n"
       << "set datafile missing \"\"\n"
       << "set terminal pngcairo size 960,640\n"
       << "set grid\n"
       << "set xlabel \"omega_s\"\n"
       << "file = \"" << csv_path << "\"\n";

    auto begin_figure = [&](const std::string& out, const std::string& ylabel,
                            const std::string& key) {
        os << "\nset output \"" << out << "\"\n"
           << "set ylabel \"" << ylabel << "\"\n"
           << "set key " << key << "\n"
           << "plot ";
    };

    if (column_has_data(table, c_s2) && !coherent_ns.empty()) {
        begin_figure("fig_entropy_scaling.png", "S2 (bits)", "left top");
        bool first = true;
        for (int n : coherent_ns) {
            os << (first ? "" : ", \\\n     ") << "file skip 1 " << filtered(n, false, c_s2)
               << " with lines title \"N=" << n << "\"";
            first = false;
        }
        os << "\n";
    }

    if (column_has_data(table, c_d) && !coherent_ns.empty()) {
        begin_figure("fig_entropy_derivative.png", "dS2/domega_s (bits)", "left top");
        bool first = true;
        for (int n : coherent_ns) {
            os << (first ? "" : ", \\\n     ") << "file skip 1 " << filtered(n, false, c_d)
               << " with lines title \"N=" << n << "\"";
            first = false;
        }
        os << "\n";
    }

    if (column_has_data(table, c_s2) && !averaged_ns.empty()) {
        begin_figure("fig_phase_average.png", "S2 (bits)", "left top");
        bool first = true;
        for (int n : averaged_ns) {
            if (coherent_ns.count(n)) {
                os << (first ? "" : ", \\\n     ") << "file skip 1 " << filtered(n, false, c_s2)
                   << " with lines title \"coherent N=" << n << "\"";
                first = false;
            }
            os << (first ? "" : ", \\\n     ") << "file skip 1 " << filtered(n, true, c_s2)
               << " with lines title \"phase-averaged N=" << n << "\"";
            first = false;
        }
        os << "\n";
    }

    const int n_large = *all_ns.rbegin();
    const bool parts_data = column_has_data(table, c_s1) || column_has_data(table, c_s2) ||
                            column_has_data(table, c_s3);
    if (parts_data) {
        begin_figure("fig_parts_entropy.png", "S_M (bits)", "left top");
        bool first = true;
        const bool averaged = coherent_ns.count(n_large) == 0;
        const int part_cols[] = {c_s1, c_s2, c_s3};
        for (int m = 0; m < 3; ++m) {
            if (!column_has_data(table, part_cols[m])) continue;
            os << (first ? "" : ", \\\n     ") << "file skip 1 "
               << filtered(n_large, averaged, part_cols[m]) << " with lines title \"M=" << (m + 1)
               << ", N=" << n_large << "\"";
            first = false;
        }
        os << "\n";
    }

    if (column_has_data(table, c_cap) || column_has_data(table, c_eq8)) {
        begin_figure("fig_relative_entropy.png", "entropy combination (bits)", "left top");
        const bool averaged = coherent_ns.count(n_large) == 0;
        bool first = true;
        if (column_has_data(table, c_cap)) {
            os << "file skip 1 " << filtered(n_large, averaged, c_cap)
               << " with lines title \"3S2-3S1-S3, N=" << n_large << "\"";
            first = false;
        }
        if (column_has_data(table, c_eq8)) {
            os << (first ? "" : ", \\\n     ") << "file skip 1 "
               << filtered(n_large, averaged, c_eq8) << " with lines title \"3S2+3S1-S3, N="
               << n_large << "\"";
        }
        os << "\n";
    }

    if (column_has_data(table, c_lieb)) {
        begin_figure("fig_lieb.png", "S1+S3-2S2 (bits)", "right bottom");
        bool first = true;
        for (int n : all_ns) {
            const bool averaged = coherent_ns.count(n) == 0;
            os << (first ? "" : ", \\\n     ") << "file skip 1 " << filtered(n, averaged, c_lieb)
               << " with lines title \"N=" << n << "\"";
            first = false;
        }
        os << "\n";
    }

    os << "\nset output\n";
    return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw std::runtime_error("failed while writing " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace ness
