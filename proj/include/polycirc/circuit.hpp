#pragma once

#include <optional>

namespace polycirc {

// Element values for one qubit plus its readout resonator, all in SI base
// units (farad, henry, ampere, meter). User-facing units are converted at
// the CLI boundary only.
struct CircuitParams {
    double qubit_capacitance = 0.0;                   // C_q
    std::optional<double> shunt_inductance;           // L
    std::optional<double> critical_current;           // I_c
    double coupling_capacitance = 0.0;                // C_qr
    double resonator_inductance = 0.0;                // L_r
    double resonator_capacitance = 0.0;               // C_r
    std::optional<double> resonator_length;           // l
    std::optional<double> substrate_dielectric;       // eps_substrate

    // Throws std::domain_error on non-positive values, std::invalid_argument
    // when neither shunt inductance nor critical current is given.
    void validate() const;
};

enum class ElementKind { inductor, junction };

// E_c plus the potential-energy scale (E_l for inductors, E_j for junctions).
struct EnergyScales {
    double charging_energy = 0.0;   // E_c [J]
    double potential_energy = 0.0;  // E_l or E_j [J]
    double ratio = 0.0;             // potential_energy / charging_energy
    ElementKind kind = ElementKind::inductor;

    void validate() const;
};

// E_c = e^2 / (2C)
double charging_energy(double capacitance);

// E_l = hbar^2 / (4 e^2 L)
double inductive_energy(double inductance);

struct JosephsonParams {
    double inductance;  // L_0 = Phi0 / (2 pi I_c)
    double energy;      // E_j = I_c Phi0 / (2 pi)
};
JosephsonParams josephson_params(double critical_current);

// Static charge offset n_g = theta - C V_d / (2e). The sqrt(C / 8 E_c)
// drive prefactor reduces to C/(2e) exactly, so it is evaluated that way.
double effective_offset(double theta, double capacitance, double drive_voltage);

// Derives qubit energy scales from the circuit. Exactly one of
// {shunt_inductance, critical_current} must be present.
EnergyScales scales_from_circuit(const CircuitParams& params);

EnergyScales scales_from_inductor(double capacitance, double inductance);
EnergyScales scales_from_junction(double capacitance, double critical_current);

}  // namespace polycirc
