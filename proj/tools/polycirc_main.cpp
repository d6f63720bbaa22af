#include <CLI11.hpp>

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "polycirc/circuit.hpp"
#include "polycirc/config.hpp"
#include "polycirc/constants.hpp"
#include "polycirc/errors.hpp"
#include "polycirc/report.hpp"
#include "polycirc/tline.hpp"
#include "polycirc/units.hpp"

namespace {

using namespace polycirc;

struct GlobalArgs {
    std::string config_path;
    std::string out_dir;
    std::string format = "table";
    std::string converge;  // e.g. "1 kHz"
    int n_max = 0;         // 0 = not set
    int jobs = 1;
    std::string ratios = "1:100:1";
};

void write_file(const std::string& out_dir, const std::string& name,
                const std::string& content) {
    namespace fs = std::filesystem;
    fs::create_directories(out_dir);
    const fs::path path = fs::path(out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw ConfigError("cannot write output file '" + path.string() + "'");
    }
    out << content;
    std::cout << "wrote " << path.string() << "\n";
}

void emit(const GlobalArgs& args, const std::string& name,
          const std::string& content) {
    if (args.out_dir.empty()) {
        std::cout << content;
    } else {
        write_file(args.out_dir, name, content);
    }
}

RunConfig load_with_overrides(GlobalArgs& args) {
    if (args.config_path.empty()) {
        throw ConfigError("this subcommand requires --config <path>");
    }
    RunConfig config = load_config_file(args.config_path);
    if (args.n_max > 0) config.options.default_n_max = args.n_max;
    if (!args.converge.empty()) {
        config.options.converge_tol =
            parse_quantity_as(args.converge, Dimension::frequency) * kPlanck;
    }
    // --out beats the config's [options] out
    if (args.out_dir.empty() && config.options.out_dir) {
        args.out_dir = *config.options.out_dir;
    }
    return config;
}

int run_report_cmd(GlobalArgs& args) {
    const RunConfig config = load_with_overrides(args);
    const auto reports = run_report(config, args.jobs);
    const OutputFormat format = parse_format(args.format);
    const std::string content = render_report(reports, format);
    const char* name = format == OutputFormat::table ? "report.txt"
                       : format == OutputFormat::structured
                           ? "report.structured"
                           : "report.csv";
    emit(args, name, content);
    return 0;
}

int run_curve_cmd(const GlobalArgs& args) {
    const auto ratios = parse_range_spec(args.ratios);
    for (double r : ratios) {
        if (!(r > 0.0)) throw ConfigError("curve ratios must be positive");
    }
    std::vector<PerturbationResult> rows(ratios.size());
    {
        // deterministic regardless of --jobs: rows land by index
        std::vector<double> values(ratios.begin(), ratios.end());
        std::vector<std::thread> pool;
        std::atomic<std::size_t> next{0};
        const std::size_t workers = std::min<std::size_t>(
            std::max(args.jobs, 1), values.size());
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < values.size();
                     i = next.fetch_add(1)) {
                    rows[i] = perturbation_at(values[i]);
                }
            });
        }
        for (auto& t : pool) t.join();
    }
    emit(args, "curve.csv", render_curve_csv(rows));
    return 0;
}

int run_tline_cmd(GlobalArgs& args) {
    const RunConfig config = load_with_overrides(args);
    if (config.tlines.empty()) {
        throw ConfigError("config has no [tline] sections");
    }
    std::ostringstream out;
    for (const auto& t : config.tlines) {
        const auto report = mode_report(t.inductance, t.capacitance, t.cells);
        const auto& m = report.reduction;
        const std::string p = "tline." + t.name + ".";
        out << p << "cells = " << m.cells << " dimensionless\n";
        out << p << "E_l_over_h = "
            << format_number(m.line_inductive_energy / kPlanck / 1e9, 10)
            << " GHz\n";
        out << p << "E_c_over_h = "
            << format_number(m.line_charging_energy / kPlanck / 1e6, 10)
            << " MHz\n";
        out << p << "ratio = "
            << format_number(m.line_inductive_energy / m.line_charging_energy,
                             10)
            << " dimensionless\n";
        out << p << "renormalized_E_l_over_h = "
            << format_number(m.renormalized_inductive_energy / kPlanck, 10)
            << " Hz\n";
        out << p << "renormalized_E_c_over_h = "
            << format_number(m.renormalized_charging_energy / kPlanck, 10)
            << " Hz\n";
        out << p << "renormalized_ratio = "
            << format_number(m.participation_ratio, 10) << " dimensionless\n";
        out << p << "alpha_over_h = " << format_number(report.alpha_over_h, 10)
            << " Hz\n";
        for (std::size_t i = 0; i < report.notes.size(); ++i) {
            out << p << "note_" << i + 1 << " = " << report.notes[i] << "\n";
        }
    }
    emit(args, "tline.structured", out.str());
    return 0;
}

int run_classical_cmd(GlobalArgs& args) {
    const RunConfig config = load_with_overrides(args);
    if (config.classical_runs.empty()) {
        throw ConfigError("config has no [classical] sections");
    }
    std::ostringstream out;
    for (const auto& c : config.classical_runs) {
        const EnergyScales scales =
            c.kind == ElementKind::inductor
                ? scales_from_inductor(c.capacitance, *c.inductance)
                : scales_from_junction(c.capacitance, *c.critical_current);
        const Trajectory traj =
            integrate(scales, c.drive, {c.n0, c.phi0}, c.dt, c.steps);

        const std::string p = "classical." + c.name + ".";
        out << p << "kind = "
            << (c.kind == ElementKind::inductor ? "lc" : "junction") << "\n";
        out << p << "dt = " << format_number(c.dt, 10) << " s\n";
        out << p << "steps = " << c.steps << " dimensionless\n";
        try {
            const double f = oscillation_frequency(traj);
            out << p << "measured_frequency = " << format_number(f / 1e9, 10)
                << " GHz\n";
        } catch (const std::domain_error&) {
            out << p << "measured_frequency_note = too few zero crossings to "
                        "estimate a frequency\n";
        }
        out << p << "energy_drift_max = "
            << format_number(traj.max_energy_deviation(), 10)
            << " dimensionless\n";
        out << p << "energy_drift_endpoint = "
            << format_number(traj.endpoint_energy_drift(), 10)
            << " dimensionless\n";
        out << p << "current_saturation_steps = "
            << traj.current_saturation_steps << " dimensionless\n";
        if (!args.out_dir.empty()) {
            write_file(args.out_dir, "classical_" + c.name + ".csv",
                       render_trajectory_csv(traj));
        }
    }
    if (args.out_dir.empty()) {
        std::cout << out.str();
    } else {
        write_file(args.out_dir, "classical.structured", out.str());
    }
    return 0;
}

int run_sweep_cmd(GlobalArgs& args) {
    const RunConfig config = load_with_overrides(args);
    if (config.sweeps.empty()) {
        throw ConfigError("config has no [sweep] sections");
    }
    for (const auto& sweep : config.sweeps) {
        const auto rows = run_sweep(sweep, config, args.jobs);
        emit(args, "sweep_" + sweep.name + ".csv",
             render_sweep_csv(sweep, rows));
    }
    return 0;
}

void add_common(CLI::App* cmd, GlobalArgs& args, bool with_config) {
    if (with_config) {
        cmd->add_option("--config", args.config_path, "config file path");
    }
    cmd->add_option("--out", args.out_dir, "output directory");
    cmd->add_option("--nmax", args.n_max, "charge-basis truncation override");
    cmd->add_option("--converge", args.converge,
                    "truncation search tolerance, e.g. '1 kHz'");
    cmd->add_option("--format", args.format, "table, structured or csv");
    cmd->add_option("--jobs", args.jobs, "worker threads");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "charge-basis spectra, couplings and classical dynamics for "
        "superconducting circuits with periodic effective phase potentials"};
    app.require_subcommand(1);
    GlobalArgs args;

    auto* report = app.add_subcommand(
        "report", "figures of merit for every configured qubit");
    add_common(report, args, true);
    auto* curve = app.add_subcommand(
        "curve", "perturbative anharmonicity vs E_l/E_c curve (CSV)");
    add_common(curve, args, false);
    curve->add_option("--ratios", args.ratios,
                      "start:stop:step or list, default 1:100:1");
    auto* tline = app.add_subcommand(
        "tline", "transmission-line fundamental-mode reduction");
    add_common(tline, args, true);
    auto* classical = app.add_subcommand(
        "classical", "integrate classical circuit dynamics");
    add_common(classical, args, true);
    auto* sweep =
        app.add_subcommand("sweep", "parameter sweeps over configured qubits");
    add_common(sweep, args, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (report->parsed()) return run_report_cmd(args);
        if (curve->parsed()) return run_curve_cmd(args);
        if (tline->parsed()) return run_tline_cmd(args);
        if (classical->parsed()) return run_classical_cmd(args);
        if (sweep->parsed()) return run_sweep_cmd(args);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
