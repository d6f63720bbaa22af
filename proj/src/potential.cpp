#include "polycirc/potential.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "polycirc/quadrature.hpp"

namespace polycirc {

namespace {
constexpr double kPi = std::numbers::pi;
}

double triangle_wave(double phi) {
    // reduce to [-pi, pi), then fold the outer branches
    double x = std::remainder(phi, 2.0 * kPi);
    if (x > kPi / 2.0) return kPi - x;
    if (x < -kPi / 2.0) return -kPi - x;
    return x;
}

const char* to_string(PotentialKind kind) {
    switch (kind) {
        case PotentialKind::josephson_cosine: return "josephson_cosine";
        case PotentialKind::arcsin_sin_squared: return "arcsin_sin_squared";
        case PotentialKind::quartic_expansion: return "quartic_expansion";
        case PotentialKind::custom_fourier: return "custom_fourier";
    }
    return "?";
}

PhasePotential PhasePotential::josephson_cosine() {
    return {PotentialKind::josephson_cosine, {}, true};
}

PhasePotential PhasePotential::arcsin_sin_squared() {
    return {PotentialKind::arcsin_sin_squared, {}, true};
}

PhasePotential PhasePotential::quartic_expansion() {
    return {PotentialKind::quartic_expansion, {}, true};
}

PhasePotential PhasePotential::custom_fourier(std::vector<double> coeffs) {
    if (coeffs.empty()) {
        throw std::invalid_argument("custom_fourier needs at least a_0");
    }
    return {PotentialKind::custom_fourier, std::move(coeffs), true};
}

double PhasePotential::value(double phi) const {
    switch (kind) {
        case PotentialKind::josephson_cosine:
            return 1.0 - std::cos(phi);
        case PotentialKind::arcsin_sin_squared: {
            const double t = triangle_wave(phi);
            return 0.5 * t * t;
        }
        case PotentialKind::quartic_expansion:
            return 0.5 * phi * phi - phi * phi * phi * phi / 24.0;
        case PotentialKind::custom_fourier: {
            double v = coefficients[0];
            for (std::size_t k = 1; k < coefficients.size(); ++k) {
                v += coefficients[k] * std::cos(double(k) * phi);
            }
            return v;
        }
    }
    throw std::logic_error("unreachable");
}

double FourierSeries::value(double phi) const {
    double v = coefficients.empty() ? 0.0 : coefficients[0];
    for (std::size_t k = 1; k < coefficients.size(); ++k) {
        v += coefficients[k] * std::cos(double(k) * phi);
    }
    return v;
}

namespace {

// a_k of arcsin(sin phi)^2/2 by piecewise quadrature between the kinks of
// the triangle wave at +-pi/2. Each smooth piece is pre-split into panels
// shorter than half a period of cos(k phi); a coarse Simpson sample on a
// full piece can alias the oscillation and pass the refinement test with a
// wrong answer.
double arcsin_coefficient(int k, double tol) {
    auto integrand = [k](double phi) {
        const double t = triangle_wave(phi);
        return 0.5 * t * t * (k == 0 ? 1.0 : std::cos(k * phi));
    };
    const int panels_per_piece = std::max(2, 2 * k);
    const double piece_tol =
        std::max(tol / (4.0 * panels_per_piece), 1e-16);
    auto piece = [&](double a, double b) {
        double sum = 0.0;
        const double width = (b - a) / panels_per_piece;
        for (int i = 0; i < panels_per_piece; ++i) {
            sum += integrate_adaptive(integrand, a + i * width,
                                      a + (i + 1) * width, piece_tol);
        }
        return sum;
    };
    // even integrand: integrate [0, pi] and double
    const double integral =
        2.0 * (piece(0.0, kPi / 2.0) + piece(kPi / 2.0, kPi));
    return k == 0 ? integral / (2.0 * kPi) : integral / kPi;
}

void check_reconstruction(const PhasePotential& potential, FourierSeries& series,
                          double tol) {
    constexpr int kGrid = 2048;
    double worst = 0.0;
    for (int i = 0; i < kGrid; ++i) {
        const double phi = -kPi + 2.0 * kPi * double(i) / kGrid;
        worst = std::max(worst,
                         std::abs(series.value(phi) - potential.value(phi)));
    }
    series.max_reconstruction_error = worst;
    series.truncation_warning = worst > tol;
}

}  // namespace

FourierSeries potential_fourier(const PhasePotential& potential, int k_max,
                                double tol) {
    if (!potential.periodic()) {
        throw std::invalid_argument(
            "quartic_expansion potential is not polymer-representable "
            "(not 2pi-periodic); use it only in continuum cross-checks");
    }
    if (k_max < 1) {
        throw std::domain_error("k_max must be >= 1");
    }
    if (!(tol > 0.0)) {
        throw std::domain_error("tolerance must be positive");
    }

    FourierSeries series;
    switch (potential.kind) {
        case PotentialKind::josephson_cosine:
            // 1 - cos(phi): exact at any k_max >= 1
            series.coefficients.assign(static_cast<std::size_t>(k_max) + 1, 0.0);
            series.coefficients[0] = 1.0;
            series.coefficients[1] = -1.0;
            break;
        case PotentialKind::arcsin_sin_squared:
            series.coefficients.resize(static_cast<std::size_t>(k_max) + 1);
            for (int k = 0; k <= k_max; ++k) {
                // odd harmonics vanish (the squared triangle has period pi)
                series.coefficients[static_cast<std::size_t>(k)] =
                    (k % 2 == 1) ? 0.0 : arcsin_coefficient(k, tol);
            }
            break;
        case PotentialKind::custom_fourier:
            // returned unchanged unless it exceeds k_max; the reconstruction
            // check below flags any dropped weight
            series.coefficients = potential.coefficients;
            if (series.k_max() > k_max) {
                series.coefficients.resize(static_cast<std::size_t>(k_max) + 1);
            }
            break;
        case PotentialKind::quartic_expansion:
            throw std::logic_error("unreachable");
    }

    check_reconstruction(potential, series, tol);
    return series;
}

}  // namespace polycirc
