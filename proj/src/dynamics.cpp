#include "polycirc/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "polycirc/constants.hpp"
#include "polycirc/errors.hpp"

namespace polycirc {

DriveWaveform DriveWaveform::constant(double volts) {
    DriveWaveform d;
    d.kind = Kind::constant;
    d.amplitude = volts;
    return d;
}

DriveWaveform DriveWaveform::sinusoid(double amplitude_volts,
                                      double frequency_hz, double phase_rad) {
    DriveWaveform d;
    d.kind = Kind::sinusoid;
    d.amplitude = amplitude_volts;
    d.frequency = frequency_hz;
    d.phase = phase_rad;
    return d;
}

double DriveWaveform::value(double t) const {
    switch (kind) {
        case Kind::zero: return 0.0;
        case Kind::constant: return amplitude;
        case Kind::sinusoid:
            return amplitude *
                   std::sin(2.0 * std::numbers::pi * frequency * t + phase);
    }
    return 0.0;
}

double drive_offset(const EnergyScales& scales, double drive_voltage) {
    // C V / (2e) rewritten through E_c = e^2 / 2C
    return kElectronCharge * drive_voltage / (4.0 * scales.charging_energy);
}

PhaseState junction_equations(const PhaseState& state,
                              const EnergyScales& scales,
                              const DriveWaveform& drive, double t) {
    if (scales.kind != ElementKind::junction) {
        throw std::invalid_argument("junction equations need junction scales");
    }
    const double nd = drive_offset(scales, drive.value(t));
    PhaseState d;
    d.n = scales.potential_energy / kReducedPlanck * std::sin(state.phi);
    d.phi = -8.0 * scales.charging_energy / kReducedPlanck * (state.n - nd);
    return d;
}

PhaseState lc_equations(const PhaseState& state, const EnergyScales& scales,
                        const DriveWaveform& drive, double t) {
    if (scales.kind != ElementKind::inductor) {
        throw std::invalid_argument("LC equations need inductor scales");
    }
    const double nd = drive_offset(scales, drive.value(t));
    PhaseState d;
    d.n = scales.potential_energy / kReducedPlanck * state.phi;
    d.phi = -8.0 * scales.charging_energy / kReducedPlanck * (state.n - nd);
    return d;
}

double hamiltonian_energy(const PhaseState& state, const EnergyScales& scales,
                          const DriveWaveform& drive, double t) {
    const double nd = drive_offset(scales, drive.value(t));
    const double shifted = state.n - nd;
    const double charging = 4.0 * scales.charging_energy * shifted * shifted;
    if (scales.kind == ElementKind::junction) {
        return -scales.potential_energy * std::cos(state.phi) + charging;
    }
    // LC: written with the same completed square; differs from
    // (1/2)E_l phi^2 + 4 E_c n^2 - 2e n V_d only by a state-independent term
    return 0.5 * scales.potential_energy * state.phi * state.phi + charging;
}

Trajectory integrate(const EnergyScales& scales, const DriveWaveform& drive,
                     const PhaseState& initial, double dt, long steps) {
    scales.validate();
    if (!(dt > 0.0)) {
        throw std::domain_error("dt must be positive");
    }
    if (steps < 1) {
        throw std::domain_error("steps must be >= 1");
    }

    const bool junction = scales.kind == ElementKind::junction;
    const double kick_scale = scales.potential_energy / kReducedPlanck;
    const double drift_scale = 8.0 * scales.charging_energy / kReducedPlanck;

    Trajectory traj;
    traj.times.reserve(static_cast<std::size_t>(steps) + 1);
    traj.states.reserve(static_cast<std::size_t>(steps) + 1);
    traj.energies.reserve(static_cast<std::size_t>(steps) + 1);

    PhaseState s = initial;
    traj.times.push_back(0.0);
    traj.states.push_back(s);
    traj.energies.push_back(hamiltonian_energy(s, scales, drive, 0.0));

    for (long step = 0; step < steps; ++step) {
        const double t0 = double(step) * dt;
        const double t_mid = t0 + 0.5 * dt;
        const double nd = drive_offset(scales, drive.value(t_mid));

        s.n += 0.5 * dt * kick_scale * (junction ? std::sin(s.phi) : s.phi);
        s.phi -= dt * drift_scale * (s.n - nd);
        s.n += 0.5 * dt * kick_scale * (junction ? std::sin(s.phi) : s.phi);

        if (!std::isfinite(s.n) || !std::isfinite(s.phi)) {
            throw NumericalError("non-finite state at step " +
                                 std::to_string(step));
        }
        if (junction && std::abs(std::sin(s.phi)) > 0.99) {
            ++traj.current_saturation_steps;
        }
        const double t1 = double(step + 1) * dt;
        traj.times.push_back(t1);
        traj.states.push_back(s);
        traj.energies.push_back(hamiltonian_energy(s, scales, drive, t1));
    }
    return traj;
}

double Trajectory::max_energy_deviation() const {
    if (energies.empty()) return 0.0;
    const double e0 = energies.front();
    const double scale = std::max(std::abs(e0), 1e-300);
    double worst = 0.0;
    for (double e : energies) {
        worst = std::max(worst, std::abs(e - e0) / scale);
    }
    return worst;
}

double Trajectory::endpoint_energy_drift() const {
    if (energies.empty()) return 0.0;
    const double e0 = energies.front();
    return std::abs(energies.back() - e0) / std::max(std::abs(e0), 1e-300);
}

double oscillation_frequency(const Trajectory& trajectory) {
    const std::size_t count = trajectory.size();
    if (count < 3) {
        throw std::domain_error("trajectory too short for frequency estimate");
    }
    double mean = 0.0;
    for (const auto& s : trajectory.states) mean += s.phi;
    mean /= double(count);

    // rising crossings are spaced by exactly one period even when the signal
    // is asymmetric about its mean; mixing both edges would alternate
    // unequal sub-intervals
    std::size_t total_crossings = 0;
    std::vector<double> rising;
    for (std::size_t i = 0; i + 1 < count; ++i) {
        const double a = trajectory.states[i].phi - mean;
        const double b = trajectory.states[i + 1].phi - mean;
        if (a == 0.0 || (a < 0.0) == (b < 0.0)) continue;
        ++total_crossings;
        if (a < 0.0) {
            const double t0 = trajectory.times[i];
            const double t1 = trajectory.times[i + 1];
            rising.push_back(t0 + (t1 - t0) * (-a) / (b - a));
        }
    }
    if (total_crossings < 5 || rising.size() < 2) {
        throw std::domain_error(
            "need at least 5 zero crossings to estimate a frequency");
    }
    const double mean_period =
        (rising.back() - rising.front()) / double(rising.size() - 1);
    return 1.0 / mean_period;
}

}  // namespace polycirc
