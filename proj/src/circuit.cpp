#include "polycirc/circuit.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polycirc/constants.hpp"

namespace polycirc {

namespace {

void require_positive(double value, const char* what) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw std::domain_error(std::string(what) + " must be positive");
    }
}

}  // namespace

void CircuitParams::validate() const {
    require_positive(qubit_capacitance, "qubit capacitance");
    require_positive(coupling_capacitance, "coupling capacitance");
    require_positive(resonator_inductance, "resonator inductance");
    require_positive(resonator_capacitance, "resonator capacitance");
    if (shunt_inductance) require_positive(*shunt_inductance, "shunt inductance");
    if (critical_current) require_positive(*critical_current, "critical current");
    if (resonator_length) require_positive(*resonator_length, "resonator length");
    if (substrate_dielectric && *substrate_dielectric < 1.0) {
        throw std::domain_error("substrate dielectric must be >= 1");
    }
    if (!shunt_inductance && !critical_current) {
        throw std::invalid_argument(
            "qubit requires a shunt inductance or a critical current");
    }
}

void EnergyScales::validate() const {
    require_positive(charging_energy, "charging energy");
    if (potential_energy < 0.0 || !std::isfinite(potential_energy)) {
        throw std::domain_error("potential energy must be non-negative");
    }
}

double charging_energy(double capacitance) {
    require_positive(capacitance, "capacitance");
    return kElectronCharge * kElectronCharge / (2.0 * capacitance);
}

double inductive_energy(double inductance) {
    require_positive(inductance, "inductance");
    return kReducedPlanck * kReducedPlanck /
           (4.0 * kElectronCharge * kElectronCharge * inductance);
}

JosephsonParams josephson_params(double critical_current) {
    require_positive(critical_current, "critical current");
    const double l0 = kFluxQuantum / (2.0 * std::numbers::pi * critical_current);
    return {l0, critical_current * critical_current * l0};
}

double effective_offset(double theta, double capacitance,
                        double drive_voltage) {
    require_positive(capacitance, "capacitance");
    return theta - capacitance * drive_voltage / (2.0 * kElectronCharge);
}

EnergyScales scales_from_inductor(double capacitance, double inductance) {
    const double ec = charging_energy(capacitance);
    const double el = inductive_energy(inductance);
    return {ec, el, el / ec, ElementKind::inductor};
}

EnergyScales scales_from_junction(double capacitance,
                                  double critical_current) {
    const double ec = charging_energy(capacitance);
    const double ej = josephson_params(critical_current).energy;
    return {ec, ej, ej / ec, ElementKind::junction};
}

EnergyScales scales_from_circuit(const CircuitParams& params) {
    params.validate();
    if (params.shunt_inductance && params.critical_current) {
        throw std::invalid_argument(
            "specify either a shunt inductance or a critical current, not both");
    }
    if (params.shunt_inductance) {
        return scales_from_inductor(params.qubit_capacitance,
                                    *params.shunt_inductance);
    }
    return scales_from_junction(params.qubit_capacitance,
                                *params.critical_current);
}

}  // namespace polycirc
