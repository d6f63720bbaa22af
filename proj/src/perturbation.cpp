#include "polycirc/perturbation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polycirc/potential.hpp"
#include "polycirc/quadrature.hpp"

namespace polycirc {

namespace {
constexpr double kPi = std::numbers::pi;
}

double hermite_mode_value(int n, double s, double phi) {
    if (n < 0 || n > 10) {
        throw std::domain_error("Hermite level must be in [0, 10]");
    }
    if (!(s > 0.0)) {
        throw std::domain_error("width parameter s must be positive");
    }
    const double x = s * phi;
    if (std::abs(x) > 30.0) {
        return 0.0;
    }
    // physicists' Hermite recurrence H_{k+1} = 2x H_k - 2k H_{k-1}
    double hkm1 = 0.0;
    double hk = 1.0;
    for (int k = 0; k < n; ++k) {
        const double next = 2.0 * x * hk - 2.0 * double(k) * hkm1;
        hkm1 = hk;
        hk = next;
    }
    double two_n_factorial = 1.0;  // 2^n n!
    for (int k = 1; k <= n; ++k) two_n_factorial *= 2.0 * double(k);
    const double norm =
        std::sqrt(s) / (std::pow(kPi, 0.25) * std::sqrt(two_n_factorial));
    return norm * hk * std::exp(-0.5 * x * x);
}

namespace {

// integral over [pi/2, upper] of |psi_n|^2 (T^2 - phi^2), done piecewise
// between the triangle-wave kinks; the integrand is even, and identically
// zero on [0, pi/2] where T(phi) = phi.
double tail_integral(int n, double s) {
    auto integrand = [n, s](double phi) {
        const double psi = hermite_mode_value(n, s, phi);
        const double t = triangle_wave(phi);
        return psi * psi * (t * t - phi * phi);
    };
    const double upper = kPi / 2.0 + 12.0 / s;
    // rough magnitude for scaling the absolute tolerance of each piece
    double rough = 0.0;
    {
        const int kProbe = 64;
        const double step = (upper - kPi / 2.0) / kProbe;
        for (int i = 0; i < kProbe; ++i) {
            rough += std::abs(integrand(kPi / 2.0 + (i + 0.5) * step)) * step;
        }
    }
    const double abs_tol = std::max(rough, 1e-30) * 1e-10;

    double total = 0.0;
    double a = kPi / 2.0;
    while (a < upper) {
        const double b = std::min(a + kPi, upper);
        total += integrate_adaptive(integrand, a, b, abs_tol);
        a = b;
    }
    return total;
}

}  // namespace

double perturbation_shift(int n, double inductive_energy,
                          double charging_energy) {
    if (n < 0 || n > 2) {
        throw std::domain_error("perturbation shift defined for n in {0,1,2}");
    }
    if (!(inductive_energy > 0.0) || !(charging_energy > 0.0)) {
        throw std::domain_error("energies must be positive");
    }
    const double s =
        std::pow(inductive_energy / (8.0 * charging_energy), 0.25);
    // (E_l/2) * 2 * tail (even integrand)
    return inductive_energy * tail_integral(n, s);
}

PerturbationResult perturbation_at(double ratio) {
    if (!(ratio > 0.0) || ratio > 1e4) {
        throw std::domain_error("ratio must be in (0, 1e4]");
    }
    // shifts scale with E_c at fixed ratio, so evaluate at E_c = 1
    const double ec = 1.0;
    PerturbationResult r;
    r.ratio = ratio;
    r.delta0 = perturbation_shift(0, ratio * ec, ec);
    r.delta1 = perturbation_shift(1, ratio * ec, ec);
    r.delta2 = perturbation_shift(2, ratio * ec, ec);
    r.alpha_over_ec = (r.delta2 - r.delta1) - (r.delta1 - r.delta0);
    return r;
}

std::vector<PerturbationResult> perturbative_alpha_curve(
    std::span<const double> ratios) {
    std::vector<PerturbationResult> results;
    results.reserve(ratios.size());
    for (double ratio : ratios) {
        try {
            results.push_back(perturbation_at(ratio));
        } catch (const NumericalError& e) {
            throw NumericalError("ratio " + std::to_string(ratio) + ": " +
                                 e.what());
        }
    }
    return results;
}

double transmon_quartic_alpha(double charging_energy) {
    if (charging_energy < 0.0) {
        throw std::domain_error("charging energy must be non-negative");
    }
    return -charging_energy;
}

}  // namespace polycirc
