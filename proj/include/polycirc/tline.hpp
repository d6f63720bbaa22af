#pragma once

#include <string>
#include <vector>

namespace polycirc {

// Single fundamental-mode reduction of an N-cell LC ladder with quarter-wave
// boundary conditions. Each stored field follows its own quoted formula;
// they are deliberately not derived from one another (see mode_report's
// interpretation note relating alpha to the renormalized charging energy of
// the quartic mode model).
struct ModeReduction {
    int cells = 0;                                // N
    double line_inductive_energy = 0.0;           // E_l [J]
    double line_charging_energy = 0.0;            // E_c [J]
    double renormalized_inductive_energy = 0.0;   // (4/3)(N/2) E_l
    double renormalized_charging_energy = 0.0;    // (3/4)(pi/4)(2/N)^3 E_c
    double participation_ratio = 0.0;             // (16/9)(4/pi)(N/2)^3 E_l/E_c
    double mode_alpha = 0.0;                      // -(3/4)(pi/2)(2/N)^2 E_c [J]
};

ModeReduction renormalize_mode(double inductive_energy, double charging_energy,
                               int cells);

// alpha = -(3/4)(pi/2)(2/N)^2 e^2/(2C); exact N^-2 and C^-1 scaling.
double mode_anharmonicity(int cells, double capacitance);

struct ModeReport {
    ModeReduction reduction;
    double alpha_over_h = 0.0;  // Hz
    std::vector<std::string> notes;
};

// Bundles the reduction computed from the line's total L and C with
// context/advisory notes.
ModeReport mode_report(double inductance, double capacitance, int cells);

}  // namespace polycirc
