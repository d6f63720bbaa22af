#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polycirc/dynamics.hpp"
#include "polycirc/potential.hpp"

namespace polycirc {

struct QubitConfig {
    std::string name;
    double capacitance = 0.0;                      // F
    std::optional<double> inductance;              // H
    std::optional<double> critical_current;        // A
    PotentialKind potential = PotentialKind::josephson_cosine;
    std::vector<double> custom_coefficients;       // custom_fourier only
    double theta = 0.0;
    double drive_voltage = 0.0;                    // V (static)
    std::optional<double> ng;                      // overrides theta/drive
    std::optional<int> n_max;
    std::optional<double> coupling_capacitance;    // F
    std::optional<std::string> resonator;          // by name
};

struct ResonatorConfig {
    std::string name;
    double inductance = 0.0;   // H
    double capacitance = 0.0;  // F
    std::optional<double> length;                // m
    std::optional<double> substrate_dielectric;  // -> eps_eff = (e+1)/2
};

struct TlineConfig {
    std::string name;
    int cells = 0;
    double inductance = 0.0;   // H
    double capacitance = 0.0;  // F
};

struct ClassicalConfig {
    std::string name;
    ElementKind kind = ElementKind::inductor;
    double capacitance = 0.0;                // F
    std::optional<double> inductance;        // H (kind = lc)
    std::optional<double> critical_current;  // A (kind = junction)
    DriveWaveform drive;
    double dt = 0.0;      // s
    long steps = 0;
    double n0 = 0.0;
    double phi0 = 0.0;
};

struct SweepConfig {
    std::string name;
    std::string qubit;
    enum class Parameter { ng, ratio, inductance_nh } parameter = Parameter::ng;
    std::vector<double> values;
};

struct RunOptions {
    int default_n_max = 100;
    std::optional<double> converge_tol;  // J; set => truncation search
    double dispersive_floor = 10e6;      // Hz
    int fourier_k_max = 32;
    double fourier_tol = 1e-10;
    std::optional<std::string> out_dir;
};

struct RunConfig {
    std::vector<QubitConfig> qubits;
    std::vector<ResonatorConfig> resonators;
    std::vector<TlineConfig> tlines;
    std::vector<ClassicalConfig> classical_runs;
    std::vector<SweepConfig> sweeps;
    RunOptions options;

    const ResonatorConfig* find_resonator(const std::string& name) const;
    const QubitConfig* find_qubit(const std::string& name) const;
};

// Parses the sectioned key = value format (see README for the grammar).
// Unknown sections/keys, bad units, unresolved references and missing
// required keys all throw ConfigError with the line number.
RunConfig parse_config(const std::string& text);

RunConfig load_config_file(const std::string& path);

// Turns "a:b:step" or a whitespace/comma list into values; used for sweep
// values and curve ratio specs.
std::vector<double> parse_range_spec(const std::string& spec);

}  // namespace polycirc
