#include "ness/density_matrix.hpp"
#include "ness/errors.hpp"
#include "ness/output.hpp"
#include "ness/selfcheck.hpp"
#include "ness/steady_state.hpp"
#include "ness/sweep.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

int run_sweep_command(const ness::SweepSpec& spec, const std::string& out_path,
                      const std::string& format) {
    try {
        spec.validate();
    } catch (const ness::domain_error& e) {
        std::cerr << "invalid sweep request: " << e.what() << '\n';
        return 2;
    }
    const ness::SweepResult result = ness::run_sweep(spec);
    const std::string body = format == "json" ? ness::sweep_json(result)
                                              : ness::sweep_csv(result);
    ness::write_text_file(out_path, body);
    std::cout << "wrote " << result.rows.size() << " rows to " << out_path << '\n';
    return 0;
}

int run_check_command(int atoms_max) {
    const std::vector<ness::CheckResult> results = ness::run_self_checks(atoms_max);
    std::size_t width = 4;
    for (const auto& r : results) width = std::max(width, r.name.size());
    bool all_passed = true;
    for (const auto& r : results) {
        std::printf("%-*s  %s  %s\n", static_cast<int>(width), r.name.c_str(),
                    r.passed ? "PASS" : "FAIL", r.detail.c_str());
        all_passed = all_passed && r.passed;
    }
    std::printf("%s\n", all_passed ? "all checks passed" : "CHECK FAILURES PRESENT");
    return all_passed ? 0 : 1;
}

int run_relax_command(int atoms, double omega_s, double t_final, double dt,
                      const std::string& out_path) {
    const ness::DriveParams params{atoms, omega_s, 0.0};
    params.validate();
    const double step = dt > 0.0 ? dt : ness::default_time_step(params);
    const ness::DensityMatrix target = ness::exact_steady_state(params);
    const ness::DensityMatrix start = ness::DensityMatrix::pure_basis_state(atoms + 1, 0);

    const long steps = static_cast<long>(t_final / step) + 1;
    const int stride = static_cast<int>(std::max(1L, steps / 2000));
    const ness::Trajectory traj = ness::evolve(params, start, t_final, step, stride);

    std::vector<std::pair<double, double>> series;
    series.reserve(traj.samples.size());
    for (const auto& sample : traj.samples)
        series.emplace_back(sample.time, ness::trace_distance(sample.state, target));
    ness::write_text_file(out_path, ness::relaxation_csv(series));
    std::cout << "wrote " << series.size() << " samples to " << out_path << '\n';
    return 0;
}

int run_plot_command(const std::string& in_path, const std::string& out_path) {
    const ness::CsvTable table = ness::parse_csv(ness::read_text_file(in_path));
    ness::write_text_file(out_path, ness::gnuplot_script(table, in_path));
    std::cout << "wrote plot script to " << out_path << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact steady states and entanglement diagnostics of driven, "
                 "collectively decaying two-level ensembles"};
    app.require_subcommand(1);

    // sweep
    auto* sweep = app.add_subcommand("sweep", "Tabulate entropies over an omega_s grid");
    ness::SweepSpec spec;
    std::string sweep_out;
    std::string format = "csv";
    int derivative_m = 0;
    sweep->add_option("--atoms", spec.n_atoms, "ensemble sizes (comma list)")
        ->required()
        ->delimiter(',');
    sweep->add_option("--omega-min", spec.omega_min, "grid start (default 0)");
    sweep->add_option("--omega-max", spec.omega_max, "grid end (default 3)");
    sweep->add_option("--points", spec.points, "grid point count (default 301)");
    sweep->add_option("--parts", spec.parts, "part sizes to reduce to (default 1,2,3)")
        ->delimiter(',');
    sweep->add_option("--phase", spec.phase, "drive phase (default 0)");
    sweep->add_flag("--phase-average", spec.phase_averaged,
                    "use the phase-averaged (diagonal) steady state");
    auto* deriv_opt = sweep->add_option("--derivative", derivative_m,
                                        "part size M whose entropy is differentiated");
    sweep->add_option("--out", sweep_out, "output file path")->required();
    sweep->add_option("--format", format, "csv or json (default csv)")
        ->check(CLI::IsMember({"csv", "json"}));

    // check
    auto* check = app.add_subcommand("check", "Run the built-in cross-validation suites");
    int atoms_max = 8;
    check->add_option("--atoms-max", atoms_max, "largest ensemble for brute-force oracles")
        ->check(CLI::Range(2, 1000));

    // relax
    auto* relax = app.add_subcommand("relax",
                                     "Integrate from the ground state and record the "
                                     "trace distance to the steady state");
    int relax_atoms = 4;
    double relax_omega = 0.5, relax_t_final = 10.0, relax_dt = 0.0;
    std::string relax_out;
    relax->add_option("--atoms", relax_atoms, "ensemble size")->required();
    relax->add_option("--omega-s", relax_omega, "scaled drive (default 0.5)");
    relax->add_option("--t-final", relax_t_final, "integration horizon (default 10)");
    relax->add_option("--dt", relax_dt, "time step (default: stability heuristic)")
        ->check(CLI::PositiveNumber);
    relax->add_option("--out", relax_out, "output CSV path")->required();

    // plot
    auto* plot = app.add_subcommand("plot", "Emit a gnuplot script for a sweep CSV");
    std::string plot_in, plot_out;
    plot->add_option("--in", plot_in, "sweep CSV path")
        ->required()
        ->check(CLI::ExistingFile);
    plot->add_option("--out", plot_out, "script output path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sweep->parsed()) {
            if (deriv_opt->count() > 0) spec.derivative_for = derivative_m;
            return run_sweep_command(spec, sweep_out, format);
        }
        if (check->parsed()) return run_check_command(atoms_max);
        if (relax->parsed())
            return run_relax_command(relax_atoms, relax_omega, relax_t_final, relax_dt,
                                     relax_out);
        if (plot->parsed()) return run_plot_command(plot_in, plot_out);
    } catch (const ness::domain_error& e) {
        std::cerr << "invalid request: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 2; // no subcommand matched; require_subcommand should prevent this
}
