#include "polycirc/tline.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polycirc/circuit.hpp"
#include "polycirc/constants.hpp"

namespace polycirc {

namespace {
constexpr double kPi = std::numbers::pi;
}

ModeReduction renormalize_mode(double inductive_energy, double charging_energy,
                               int cells) {
    if (cells < 2) {
        throw std::domain_error("mode reduction needs at least 2 cells");
    }
    if (!(inductive_energy > 0.0) || !(charging_energy > 0.0)) {
        throw std::domain_error("energies must be positive");
    }
    const double n = double(cells);
    ModeReduction r;
    r.cells = cells;
    r.line_inductive_energy = inductive_energy;
    r.line_charging_energy = charging_energy;
    r.renormalized_inductive_energy = (4.0 / 3.0) * (n / 2.0) * inductive_energy;
    r.renormalized_charging_energy =
        (3.0 / 4.0) * (kPi / 4.0) * std::pow(2.0 / n, 3) * charging_energy;
    r.participation_ratio = (16.0 / 9.0) * (4.0 / kPi) * std::pow(n / 2.0, 3) *
                            (inductive_energy / charging_energy);
    r.mode_alpha = -(3.0 / 4.0) * (kPi / 2.0) * std::pow(2.0 / n, 2) *
                   charging_energy;
    return r;
}

double mode_anharmonicity(int cells, double capacitance) {
    if (cells < 2) {
        throw std::domain_error("mode anharmonicity needs at least 2 cells");
    }
    return -(3.0 / 4.0) * (kPi / 2.0) * std::pow(2.0 / double(cells), 2) *
           charging_energy(capacitance);
}

ModeReport mode_report(double inductance, double capacitance, int cells) {
    ModeReport report;
    report.reduction = renormalize_mode(inductive_energy(inductance),
                                        charging_energy(capacitance), cells);
    report.alpha_over_h = report.reduction.mode_alpha / kPlanck;

    report.notes.push_back(
        "alpha equals minus the renormalized charging energy of the quartic "
        "mode model (cosine potential expanded through fourth order)");
    if (cells >= 500) {
        report.notes.push_back(
            "cell count typical of Josephson traveling-wave parametric "
            "amplifiers");
    }
    if (std::abs(report.alpha_over_h) < 1e3) {
        report.notes.push_back(
            "|alpha|/h below 1 kHz: unmeasurable within typical qubit "
            "lifetimes");
    }
    return report;
}

}  // namespace polycirc
