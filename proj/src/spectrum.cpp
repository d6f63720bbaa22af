#include "polycirc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "polycirc/errors.hpp"

namespace polycirc {

namespace {

// Collapse eigenvalues into distinct levels; returns the first value of each
// run. Gap threshold is relative to the spectral span.
std::vector<double> distinct_levels(const Eigen::VectorXd& eigenvalues,
                                    std::size_t want) {
    const double span =
        eigenvalues(eigenvalues.size() - 1) - eigenvalues(0);
    const double tol = kDegeneracyTol * std::max(span, 1e-300);
    std::vector<double> levels;
    levels.push_back(eigenvalues(0));
    for (Eigen::Index i = 1; i < eigenvalues.size() && levels.size() < want;
         ++i) {
        if (eigenvalues(i) - levels.back() > tol) {
            levels.push_back(eigenvalues(i));
        }
    }
    return levels;
}

}  // namespace

Spectrum eigendecompose(const ChargeHamiltonian& hamiltonian) {
    if (!hamiltonian.matrix.allFinite()) {
        throw NumericalError("charge Hamiltonian contains non-finite entries");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian.matrix);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("symmetric eigensolver did not converge");
    }

    Spectrum spectrum;
    spectrum.eigenvalues = solver.eigenvalues();
    spectrum.eigenvectors = solver.eigenvectors();
    spectrum.n_max = hamiltonian.n_max;

    // fix each eigenvector's sign: largest-magnitude component positive
    for (Eigen::Index j = 0; j < spectrum.eigenvectors.cols(); ++j) {
        Eigen::Index imax = 0;
        spectrum.eigenvectors.col(j).cwiseAbs().maxCoeff(&imax);
        if (spectrum.eigenvectors(imax, j) < 0.0) {
            spectrum.eigenvectors.col(j) = -spectrum.eigenvectors.col(j);
        }
    }

    if (spectrum.level_count() >= 3) {
        const auto levels = distinct_levels(spectrum.eigenvalues, 3);
        if (levels.size() == 3) {
            spectrum.e01 = levels[1] - levels[0];
            spectrum.e12 = levels[2] - levels[1];
            spectrum.alpha = spectrum.e12 - spectrum.e01;
        }
    }
    return spectrum;
}

double anharmonicity(const Spectrum& spectrum) {
    if (spectrum.level_count() < 3) {
        throw std::domain_error("anharmonicity needs at least 3 levels");
    }
    const auto levels = distinct_levels(spectrum.eigenvalues, 3);
    if (levels.size() < 3) {
        throw std::domain_error(
            "anharmonicity needs 3 distinct levels in the truncated spectrum");
    }
    return (levels[2] - levels[1]) - (levels[1] - levels[0]);
}

double number_matrix_element(const Spectrum& spectrum, int i, int j) {
    if (i < 0 || j < 0 || i >= spectrum.level_count() ||
        j >= spectrum.level_count()) {
        throw std::out_of_range("eigenstate index out of range");
    }
    double element = 0.0;
    const int dim = spectrum.level_count();
    for (int row = 0; row < dim; ++row) {
        const double n = double(row - spectrum.n_max);
        element += spectrum.eigenvectors(row, i) * n *
                   spectrum.eigenvectors(row, j);
    }
    return std::abs(element);
}

TruncationResult converge_truncation(const EnergyScales& scales,
                                     const FourierSeries& series, double n_g,
                                     double tol, int cap) {
    if (!(tol > 0.0)) {
        throw std::domain_error("convergence tolerance must be positive");
    }
    int candidate = std::max(8, series.k_max());

    auto solve = [&](int n_max) {
        const auto spectrum = eigendecompose(
            build_charge_hamiltonian(scales, series, n_g, n_max));
        return TruncationResult{n_max, spectrum.e01, spectrum.alpha};
    };

    TruncationResult at = solve(candidate);
    while (candidate <= cap) {
        const TruncationResult refined = solve(2 * candidate);
        if (std::abs(at.e01 - refined.e01) <= tol &&
            std::abs(at.alpha - refined.alpha) <= tol) {
            return at;
        }
        candidate *= 2;
        at = refined;
    }
    throw NumericalError("truncation search reached the cap (" +
                         std::to_string(cap) + ") without converging");
}

}  // namespace polycirc
