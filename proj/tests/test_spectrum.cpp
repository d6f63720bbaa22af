#include <doctest.h>

#include <stdexcept>
#include <cmath>
#include <vector>

#include "polycirc/circuit.hpp"
#include "polycirc/constants.hpp"
#include "polycirc/errors.hpp"
#include "polycirc/spectrum.hpp"

using namespace polycirc;

namespace {

constexpr double kH = kPlanck;

FourierSeries cosine_series() {
    return potential_fourier(PhasePotential::josephson_cosine(), 1, 1e-10);
}

EnergyScales meander_scales() {
    return scales_from_inductor(118.1e-15, 18.2e-9);
}

Spectrum solve(const EnergyScales& scales, double ng, int nmax) {
    return eigendecompose(
        build_charge_hamiltonian(scales, cosine_series(), ng, nmax));
}

// dimensionless scales with a unit charging energy, handy for property tests
EnergyScales ratio_scales(double ratio) {
    return {1.0, ratio, ratio, ElementKind::inductor};
}

}  // namespace

TEST_SUITE("spectrum") {

TEST_CASE("matrix structure") {
    // pure charging term at n_max = 1: diag(4, 0, 4) E_c
    const auto h0 = build_charge_hamiltonian(
        EnergyScales{1.0, 0.0, 0.0, ElementKind::inductor}, cosine_series(),
        0.0, 1);
    CHECK(h0.matrix(0, 0) == 4.0);
    CHECK(h0.matrix(1, 1) == 0.0);
    CHECK(h0.matrix(2, 2) == 4.0);
    CHECK(h0.matrix(0, 1) == 0.0);
    CHECK(h0.matrix(0, 2) == 0.0);

    // cosine potential: -E_pot/2 on the first off-diagonals
    const double ej = 2.5e-24;
    const auto h1 = build_charge_hamiltonian(
        EnergyScales{1e-24, ej, ej / 1e-24, ElementKind::junction},
        cosine_series(), 0.0, 5);
    for (int i = 0; i + 1 < h1.dimension(); ++i) {
        CHECK(h1.matrix(i, i + 1) == -ej / 2.0);
        CHECK(h1.matrix(i + 1, i) == -ej / 2.0);
    }
    CHECK(h1.bandwidth == 1);

    // n_g enters the diagonal as 4 E_c (n + n_g)^2 + E_pot a_0
    const auto h2 = build_charge_hamiltonian(
        EnergyScales{1.0, 2.0, 2.0, ElementKind::inductor}, cosine_series(),
        0.5, 3);
    CHECK(h2.matrix(3, 3) == doctest::Approx(1.0 + 2.0).epsilon(1e-15));
}

TEST_CASE("hermiticity and bandedness are structural") {
    const auto potential =
        PhasePotential::custom_fourier({0.4, -1.0, 0.25, -0.05});
    const auto series = potential_fourier(potential, 3, 1e-10);
    const auto h = build_charge_hamiltonian(
        EnergyScales{1.3e-25, 4.1e-24, 4.1e-24 / 1.3e-25,
                     ElementKind::inductor},
        series, 0.21, 12);
    for (int i = 0; i < h.dimension(); ++i) {
        for (int j = 0; j < h.dimension(); ++j) {
            CHECK(h.matrix(i, j) == h.matrix(j, i));
            if (std::abs(i - j) > h.bandwidth) CHECK(h.matrix(i, j) == 0.0);
        }
    }
}

TEST_CASE("dimension error when n_max < k_max") {
    const auto series = potential_fourier(
        PhasePotential::custom_fourier({0.0, 1.0, 0.0, 0.0, 0.1}), 4, 1e-10);
    CHECK_THROWS_AS(build_charge_hamiltonian(ratio_scales(1.0), series, 0.0, 3),
                    std::domain_error);
    CHECK_THROWS_AS(
        build_charge_hamiltonian(ratio_scales(1.0), cosine_series(), 0.0, 0),
        std::domain_error);
}

TEST_CASE("trivial eigenpair") {
    ChargeHamiltonian toy;
    toy.n_max = 0;
    toy.matrix = Eigen::MatrixXd{{0.0, 1.0}, {1.0, 0.0}};
    const auto spectrum = eigendecompose(toy);
    CHECK(spectrum.eigenvalues(0) == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(spectrum.eigenvalues(1) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("meander and transmon transition energies") {
    const auto meander = solve(meander_scales(), 0.0, 100);
    CHECK(meander.e01 / kH == doctest::Approx(3.259836580e9).epsilon(1e-9));
    CHECK(std::abs(meander.e01 / kH - 3.26e9) < 10e6);
    CHECK(anharmonicity(meander) / kH ==
          doctest::Approx(-186.9912066e6).epsilon(1e-8));
    CHECK(std::abs(std::abs(meander.alpha) / kH - 187e6) < 2e6);

    const auto transmon =
        solve(scales_from_junction(123.8e-15, 31.3e-9), 0.0, 100);
    CHECK(transmon.e01 / kH == doctest::Approx(4.248665464e9).epsilon(1e-9));
    CHECK(std::abs(transmon.e01 / kH - 4.25e9) < 10e6);
    CHECK(std::abs(std::abs(transmon.alpha) / kH - 171.5e6) < 2e6);

    // eigenvalues ascending
    for (int i = 0; i + 1 < meander.level_count(); ++i) {
        CHECK(meander.eigenvalues(i) <= meander.eigenvalues(i + 1));
    }
}

TEST_CASE("pure charging spectrum and the distinct-level ladder") {
    const auto spectrum = solve(
        EnergyScales{1.0, 0.0, 0.0, ElementKind::inductor}, 0.0, 8);
    // levels 4 E_c n^2: {0, 4, 4, 16, 16, ...}
    CHECK(spectrum.eigenvalues(0) == doctest::Approx(0.0).scale(1.0));
    CHECK(spectrum.eigenvalues(1) == doctest::Approx(4.0));
    CHECK(spectrum.eigenvalues(2) == doctest::Approx(4.0));
    CHECK(spectrum.eigenvalues(3) == doctest::Approx(16.0));
    // distinct ladder: E01 = 4, E12 = 12, alpha = +8 E_c
    CHECK(spectrum.e01 == doctest::Approx(4.0).epsilon(1e-10));
    CHECK(spectrum.e12 == doctest::Approx(12.0).epsilon(1e-10));
    CHECK(anharmonicity(spectrum) == doctest::Approx(8.0).epsilon(1e-10));
}

TEST_CASE("anharmonicity needs three distinct levels") {
    ChargeHamiltonian toy;
    toy.n_max = 0;
    toy.matrix = Eigen::MatrixXd{{1.0, 0.0}, {0.0, 1.0}};
    const auto spectrum = eigendecompose(toy);
    CHECK_THROWS_AS(anharmonicity(spectrum), std::domain_error);
}

TEST_CASE("number matrix elements") {
    const auto meander = solve(meander_scales(), 0.0, 100);
    // parity: diagonal element vanishes at n_g = 0 for an even potential
    CHECK(number_matrix_element(meander, 0, 0) < 1e-10);
    // large-ratio asymptotic (E_pot / 32 E_c)^{1/4} as oracle
    const double n01 = number_matrix_element(meander, 0, 1);
    CHECK(n01 == doctest::Approx(1.114304581).epsilon(1e-8));
    CHECK(std::abs(n01 / std::pow(54.75947316 / 32.0, 0.25) - 1.0) < 0.05);

    const auto transmon =
        solve(scales_from_junction(123.8e-15, 31.3e-9), 0.0, 100);
    const double n01t = number_matrix_element(transmon, 0, 1);
    CHECK(n01t == doctest::Approx(1.302609359).epsilon(1e-8));
    CHECK(std::abs(n01t / std::pow(99.35962920 / 32.0, 0.25) - 1.0) < 0.05);

    CHECK_THROWS_AS(number_matrix_element(meander, 0, 500),
                    std::out_of_range);
}

TEST_CASE("eigen residuals and orthonormality") {
    const auto h =
        build_charge_hamiltonian(meander_scales(), cosine_series(), 0.0, 100);
    const auto spectrum = eigendecompose(h);
    const double scale = h.matrix.cwiseAbs().rowwise().sum().maxCoeff();
    for (int i = 0; i < 5; ++i) {
        const double residual =
            (h.matrix * spectrum.eigenvectors.col(i) -
             spectrum.eigenvalues(i) * spectrum.eigenvectors.col(i))
                .norm();
        CHECK(residual <= 1e-9 * scale);
    }
    const Eigen::MatrixXd gram =
        spectrum.eigenvectors.transpose() * spectrum.eigenvectors;
    const double worst =
        (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
            .cwiseAbs()
            .maxCoeff();
    CHECK(worst <= 1e-10);
}

TEST_CASE("offset periodicity n_g -> n_g + 1") {
    const auto a = solve(meander_scales(), 0.3, 60);
    const auto b = solve(meander_scales(), 1.3, 60);
    for (int i = 0; i < 5; ++i) {
        CHECK(std::abs(a.eigenvalues(i) - b.eigenvalues(i)) <=
              1e-9 * std::abs(a.eigenvalues(i)));
    }
}

TEST_CASE("parity n_g -> -n_g for even potentials") {
    const auto a = solve(meander_scales(), 0.37, 60);
    const auto b = solve(meander_scales(), -0.37, 60);
    for (int i = 0; i < 5; ++i) {
        CHECK(std::abs(a.eigenvalues(i) - b.eigenvalues(i)) <=
              1e-9 * std::abs(a.eigenvalues(i)));
    }
}

TEST_CASE("transmon asymptotics for ratio >= 50") {
    for (double ratio : {54.75947316, 99.35962920, 142.3746302, 400.0}) {
        const auto spectrum = solve(ratio_scales(ratio), 0.0, 60);
        const double e01_limit = std::sqrt(8.0 * ratio) - 1.0;
        CHECK(std::abs(spectrum.e01 / e01_limit - 1.0) < 0.03);
        CHECK(std::abs(spectrum.alpha - (-1.0)) < 0.15);
    }
}

TEST_CASE("monotone truncation convergence") {
    std::vector<double> errors;
    for (int nmax : {4, 8, 16}) {
        const auto coarse = solve(meander_scales(), 0.0, nmax);
        const auto fine = solve(meander_scales(), 0.0, 4 * nmax);
        errors.push_back(std::abs(coarse.e01 - fine.e01));
    }
    CHECK(errors[0] > errors[1]);
    CHECK(errors[1] > errors[2]);
}

TEST_CASE("charge dispersion decays with the ratio") {
    std::vector<double> dispersion;
    for (double ratio : {10.0, 30.0, 50.0, 100.0}) {
        double lo = 1e300;
        double hi = -1e300;
        for (int i = 0; i <= 5; ++i) {
            const auto s = solve(ratio_scales(ratio), 0.1 * i, 25);
            lo = std::min(lo, s.e01);
            hi = std::max(hi, s.e01);
        }
        dispersion.push_back(hi - lo);
    }
    CHECK(dispersion[0] > dispersion[1]);
    CHECK(dispersion[1] > dispersion[2]);
    CHECK(dispersion[2] > dispersion[3]);
}

TEST_CASE("truncation search") {
    const double tol = 1e3 * kH;  // 1 kHz
    const auto result =
        converge_truncation(meander_scales(), cosine_series(), 0.0, tol);
    CHECK(result.n_max <= 100);
    const auto reference = solve(meander_scales(), 0.0, 100);
    CHECK(std::abs(result.e01 - reference.e01) <= tol);
    CHECK(std::abs(result.alpha - reference.alpha) <= tol);

    // free particle: exact at the smallest candidate
    const auto free_result = converge_truncation(
        EnergyScales{1e-24, 0.0, 0.0, ElementKind::inductor}, cosine_series(),
        0.0, 1e-30);
    CHECK(free_result.n_max == 8);

    // heuristic meander inductance
    const auto heuristic = converge_truncation(
        scales_from_inductor(118.1e-15, 7.0e-9), cosine_series(), 0.0, tol);
    CHECK(heuristic.n_max <= 100);
    CHECK(std::abs(heuristic.e01 / kH - 5.37e9) < 10e6);
    CHECK(heuristic.e01 / kH == doctest::Approx(5.366063648e9).epsilon(1e-9));

    // an impossible tolerance must fail loudly, not silently
    CHECK_THROWS_AS(converge_truncation(meander_scales(), cosine_series(),
                                        0.0, 1e-30 * kH, 32),
                    NumericalError);
}

TEST_CASE("non-finite matrix is rejected") {
    ChargeHamiltonian bad;
    bad.n_max = 1;
    bad.matrix = Eigen::MatrixXd::Zero(3, 3);
    bad.matrix(1, 1) = std::nan("");
    CHECK_THROWS_AS(eigendecompose(bad), NumericalError);
}

}  // TEST_SUITE
