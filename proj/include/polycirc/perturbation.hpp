#pragma once

#include <span>
#include <vector>

namespace polycirc {

// Normalized harmonic-oscillator eigenfunction
//   psi_n(phi) = N H_n(s phi) exp(-s^2 phi^2 / 2),
//   N = sqrt(s) / (pi^{1/4} sqrt(2^n n!)),  s = (E_l / 8 E_c)^{1/4}.
// Returns 0 once |s phi| > 30 where the Gaussian underflows anyway.
double hermite_mode_value(int n, double s, double phi);

// First-order level shift of the arcsin(sin)^2 potential about its harmonic
// part:
//   Delta_n = (E_l / 2) int |psi_n|^2 (T(phi)^2 - phi^2) dphi,
// with T the triangle wave. The integrand vanishes identically on
// |phi| <= pi/2, so only the tails contribute; they are integrated piecewise
// between the kinks of T up to |phi| = pi/2 + 12/s. Result in joules,
// always <= 0. n must be 0, 1, or 2.
double perturbation_shift(int n, double inductive_energy,
                          double charging_energy);

struct PerturbationResult {
    double ratio = 0.0;         // E_l / E_c
    double delta0 = 0.0;        // shifts in units of E_c
    double delta1 = 0.0;
    double delta2 = 0.0;
    double alpha_over_ec = 0.0; // (d2 - d1) - (d1 - d0)
};

PerturbationResult perturbation_at(double ratio);

// One result per ratio; ratios must be positive and <= 1e4.
std::vector<PerturbationResult> perturbative_alpha_curve(
    std::span<const double> ratios);

// Fourth-order expansion of the cosine potential: alpha = -E_c.
double transmon_quartic_alpha(double charging_energy);

}  // namespace polycirc
