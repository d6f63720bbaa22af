#pragma once

#include <cstddef>
#include <vector>

#include "polycirc/circuit.hpp"

namespace polycirc {

// Classical phase-space point; n is real-valued classically.
struct PhaseState {
    double n = 0.0;
    double phi = 0.0;
};

struct DriveWaveform {
    enum class Kind { zero, constant, sinusoid };
    Kind kind = Kind::zero;
    double amplitude = 0.0;  // V
    double frequency = 0.0;  // Hz
    double phase = 0.0;      // rad

    static DriveWaveform zero() { return {}; }
    static DriveWaveform constant(double volts);
    static DriveWaveform sinusoid(double amplitude_volts, double frequency_hz,
                                  double phase_rad);

    double value(double t) const;
};

struct Trajectory {
    std::vector<double> times;        // s, strictly increasing
    std::vector<PhaseState> states;
    std::vector<double> energies;     // H evaluated at each sample [J]
    // Steps at which the junction current |I_c sin(phi)| exceeded 0.99 I_c
    // (always 0 for LC runs).
    std::size_t current_saturation_steps = 0;

    std::size_t size() const { return times.size(); }
    double max_energy_deviation() const;  // max |E(t) - E(0)| / |E(0)|
    double endpoint_energy_drift() const; // |E(end) - E(0)| / |E(0)|
};

// Hamilton's equations under the bracket {n, phi} = 1/hbar, with the sign
// pairing dn/dt = +(1/hbar) dH/dphi, dphi/dt = -(1/hbar) dH/dn. This is the
// pairing inherited from the canonical (Q, Phi) pair via Q = 2e n,
// phi = (2e/hbar) Phi, and it reproduces the LC frequency 1/(2 pi sqrt(LC)).
//
// Junction: H = -E_j cos(phi) + 4 E_c (n - n_d(t))^2
// LC:       H = (1/2) E_l phi^2 + 4 E_c n^2 - 2e n V_d(t)
// Both give the same drive offset n_d = C V_d / (2e) = e V_d / (4 E_c).
PhaseState junction_equations(const PhaseState& state,
                              const EnergyScales& scales,
                              const DriveWaveform& drive, double t);
PhaseState lc_equations(const PhaseState& state, const EnergyScales& scales,
                        const DriveWaveform& drive, double t);

double drive_offset(const EnergyScales& scales, double drive_voltage);

double hamiltonian_energy(const PhaseState& state, const EnergyScales& scales,
                          const DriveWaveform& drive, double t);

// Fixed-step symplectic splitting (half kick in n, drift in phi, half kick),
// second order; the drive is sampled at the step midpoint. Throws
// NumericalError with the step index if the state becomes non-finite.
Trajectory integrate(const EnergyScales& scales, const DriveWaveform& drive,
                     const PhaseState& initial, double dt, long steps);

// Frequency from the mean interval between rising zero crossings of
// phi - mean(phi), located by linear interpolation. Requires at least 5
// crossings in total.
double oscillation_frequency(const Trajectory& trajectory);

}  // namespace polycirc
