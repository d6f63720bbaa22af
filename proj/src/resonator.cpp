#include "polycirc/resonator.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polycirc/constants.hpp"
#include "polycirc/errors.hpp"

namespace polycirc {

void ResonatorParams::validate() const {
    if (!(inductance > 0.0) || !(capacitance > 0.0)) {
        throw std::domain_error("resonator L and C must be positive");
    }
    if (length && !(*length > 0.0)) {
        throw std::domain_error("resonator length must be positive");
    }
    if (effective_dielectric && *effective_dielectric < 1.0) {
        throw std::domain_error("effective dielectric must be >= 1");
    }
}

double effective_dielectric(double substrate_dielectric) {
    if (substrate_dielectric < 1.0) {
        throw std::domain_error("substrate dielectric must be >= 1");
    }
    return 0.5 * (substrate_dielectric + 1.0);
}

double quarter_wave_frequency(double inductance, double capacitance) {
    if (!(inductance > 0.0) || !(capacitance > 0.0)) {
        throw std::domain_error("L and C must be positive");
    }
    return 1.0 / (4.0 * std::sqrt(inductance * capacitance));
}

double quarter_wave_frequency_analytic(double length,
                                       double effective_dielectric) {
    if (!(length > 0.0)) {
        throw std::domain_error("length must be positive");
    }
    if (effective_dielectric < 1.0) {
        throw std::domain_error("effective dielectric must be >= 1");
    }
    return kLightSpeed / (4.0 * length * std::sqrt(effective_dielectric));
}

double coupling_g(double coupling_capacitance, double qubit_capacitance,
                  double resonator_frequency, double resonator_capacitance,
                  double n01) {
    if (!(coupling_capacitance > 0.0) || !(qubit_capacitance > 0.0) ||
        !(resonator_frequency > 0.0) || !(resonator_capacitance > 0.0)) {
        throw std::domain_error("coupling inputs must be positive");
    }
    if (!(n01 > 0.0)) {
        throw std::domain_error("n01 must be positive");
    }
    const double beta =
        coupling_capacitance / (coupling_capacitance + qubit_capacitance);
    const double zero_point_voltage =
        std::sqrt(kPlanck * resonator_frequency /
                  (2.0 * resonator_capacitance));
    const double energy =
        2.0 * kElectronCharge * beta * zero_point_voltage * n01;
    return kCouplingCalibration * energy / kPlanck;
}

CouplingResult compute_coupling(double coupling_capacitance,
                                double qubit_capacitance,
                                double resonator_capacitance,
                                double resonator_frequency,
                                double qubit_frequency, double n01,
                                double detuning_floor) {
    CouplingResult result;
    result.participation =
        coupling_capacitance / (coupling_capacitance + qubit_capacitance);
    result.n01 = n01;
    result.detuning = resonator_frequency - qubit_frequency;
    result.g = coupling_g(coupling_capacitance, qubit_capacitance,
                          resonator_frequency, resonator_capacitance, n01);
    result.chi = dispersive_shift(result.g, resonator_frequency,
                                  qubit_frequency, detuning_floor);
    return result;
}

double dispersive_shift(double g, double resonator_frequency,
                        double qubit_frequency, double detuning_floor) {
    const double detuning = resonator_frequency - qubit_frequency;
    if (std::abs(detuning) < detuning_floor) {
        throw NumericalError(
            "dispersive approximation invalid: |f_r - f_01| below the floor");
    }
    return g * g / (2.0 * std::numbers::pi * detuning);
}

}  // namespace polycirc
