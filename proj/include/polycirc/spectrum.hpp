#pragma once

#include <Eigen/Dense>

#include "polycirc/hamiltonian.hpp"

namespace polycirc {

// Full eigendecomposition of a charge-basis Hamiltonian. Eigenvalues are
// ascending with multiplicity; each eigenvector's phase is fixed by making
// its largest-magnitude component positive.
//
// Transition energies use the distinct-level ladder: runs of eigenvalues
// closer than kDegeneracyTol times the spectral span count as one level.
// This only matters for artificial degenerate cases (e.g. E_pot = 0); any
// potential with E_pot > 0 has non-degenerate low-lying levels.
struct Spectrum {
    Eigen::VectorXd eigenvalues;   // [J], ascending
    Eigen::MatrixXd eigenvectors;  // columns, orthonormal, phase-fixed
    int n_max = 0;
    double e01 = 0.0;    // E_1 - E_0 on the distinct ladder [J]
    double e12 = 0.0;    // E_2 - E_1 on the distinct ladder [J]
    double alpha = 0.0;  // e12 - e01 [J]

    int level_count() const { return static_cast<int>(eigenvalues.size()); }
};

inline constexpr double kDegeneracyTol = 1e-9;

Spectrum eigendecompose(const ChargeHamiltonian& hamiltonian);

// alpha = E12 - E01 (signed; negative for cosine-like potentials).
// Requires at least 3 distinct levels.
double anharmonicity(const Spectrum& spectrum);

// |<i| n |j>| in the charge basis; the absolute value fixes the global
// eigenvector phase freedom.
double number_matrix_element(const Spectrum& spectrum, int i, int j);

struct TruncationResult {
    int n_max = 0;
    double e01 = 0.0;    // [J], at the returned truncation
    double alpha = 0.0;  // [J]
};

// Doubling search for the smallest n_max with |E01(n) - E01(2n)| <= tol and
// the same for alpha. Starts at max(8, series k_max); throws NumericalError
// when the cap is reached without convergence.
TruncationResult converge_truncation(const EnergyScales& scales,
                                     const FourierSeries& series, double n_g,
                                     double tol, int cap = 512);

}  // namespace polycirc
