#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycirc/config.hpp"
#include "polycirc/perturbation.hpp"
#include "polycirc/spectrum.hpp"

namespace polycirc {

// Everything the report emits for one qubit, in SI units. Serialization
// attaches explicit unit strings.
struct QubitReport {
    std::string name;
    double capacitance = 0.0;       // F
    double inductance = 0.0;        // H (shunt L or Josephson L_0)
    bool junction = false;
    double charging_energy = 0.0;   // J
    double ratio = 0.0;             // E_pot / E_c
    double e01 = 0.0;               // J
    double alpha = 0.0;             // J (signed)
    std::optional<double> perturbative_alpha;  // J
    double n01 = 0.0;
    int n_max_used = 0;
    bool truncation_search = false;
    bool fourier_truncation_warning = false;
    double fourier_reconstruction_error = 0.0;
    std::optional<double> f_lumped;        // Hz
    std::optional<double> f_analytic;      // Hz
    std::optional<double> g_lumped;        // Hz
    std::optional<double> g_analytic;      // Hz
    std::optional<double> chi_lumped;      // Hz
    std::optional<double> chi_analytic;    // Hz
};

QubitReport analyze_qubit(const QubitConfig& qubit,
                          const ResonatorConfig* resonator,
                          const RunOptions& options);

std::vector<QubitReport> run_report(const RunConfig& config, int jobs = 1);

enum class OutputFormat { table, structured, csv };

OutputFormat parse_format(const std::string& name);

std::string render_report_table(const std::vector<QubitReport>& reports);
std::string render_report_structured(const std::vector<QubitReport>& reports);
std::string render_report_csv(const std::vector<QubitReport>& reports);
std::string render_report(const std::vector<QubitReport>& reports,
                          OutputFormat format);

std::string render_curve_csv(const std::vector<PerturbationResult>& rows);

struct SweepRow {
    double parameter = 0.0;
    double e01 = 0.0;    // J
    double alpha = 0.0;  // J
    double n01 = 0.0;
};

std::vector<SweepRow> run_sweep(const SweepConfig& sweep,
                                const RunConfig& config, int jobs = 1);
std::string render_sweep_csv(const SweepConfig& sweep,
                             const std::vector<SweepRow>& rows);

std::string render_trajectory_csv(const Trajectory& trajectory);

}  // namespace polycirc
