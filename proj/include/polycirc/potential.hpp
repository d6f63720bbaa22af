#pragma once

#include <string>
#include <vector>

namespace polycirc {

// Triangle wave arcsin(sin(phi)) of amplitude pi/2, evaluated by branch
// reduction of phi mod 2pi rather than by composing arcsin(sin(.)), which
// loses accuracy far from the origin.
double triangle_wave(double phi);

enum class PotentialKind {
    josephson_cosine,     // V(phi) = 1 - cos(phi)
    arcsin_sin_squared,   // V(phi) = arcsin(sin phi)^2 / 2
    quartic_expansion,    // V(phi) = phi^2/2 - phi^4/24, continuum-only
    custom_fourier,       // explicit cosine coefficients
};

const char* to_string(PotentialKind kind);

// A 2pi-periodic effective phase potential (except quartic_expansion, which
// is kept only for the continuum cross-check and is rejected by everything
// that needs periodicity). All variants are even in phi; sine terms are
// never generated, which keeps charge-basis matrices real symmetric.
struct PhasePotential {
    PotentialKind kind = PotentialKind::josephson_cosine;
    std::vector<double> coefficients;  // custom_fourier only: a_0, a_1, ...
    bool even_symmetry = true;

    static PhasePotential josephson_cosine();
    static PhasePotential arcsin_sin_squared();
    static PhasePotential quartic_expansion();
    static PhasePotential custom_fourier(std::vector<double> cosine_coefficients);

    bool periodic() const { return kind != PotentialKind::quartic_expansion; }

    double value(double phi) const;
};

// Cosine series a_0 + sum_k a_k cos(k phi).
struct FourierSeries {
    std::vector<double> coefficients;  // index k holds a_k
    bool truncation_warning = false;
    double max_reconstruction_error = 0.0;

    int k_max() const { return static_cast<int>(coefficients.size()) - 1; }
    double a(int k) const { return coefficients[static_cast<std::size_t>(k)]; }
    double value(double phi) const;
};

// Expands a periodic potential into its cosine series:
//   a_0 = (1/2pi) int V dphi,  a_k = (1/pi) int V cos(k phi) dphi.
// josephson_cosine and custom_fourier are exact; arcsin_sin_squared is
// integrated piecewise by adaptive quadrature to absolute error <= tol per
// coefficient. If the truncated series misses the potential by more than tol
// on a 2048-point grid, truncation_warning is set (the series is still
// returned). quartic_expansion is rejected.
FourierSeries potential_fourier(const PhasePotential& potential, int k_max,
                                double tol);

}  // namespace polycirc
