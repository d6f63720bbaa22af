#include "polycirc/hamiltonian.hpp"

#include <stdexcept>
#include <string>

namespace polycirc {

ChargeHamiltonian build_charge_hamiltonian(const EnergyScales& scales,
                                           const FourierSeries& series,
                                           double n_g, int n_max) {
    scales.validate();
    if (n_max < 1) {
        throw std::domain_error("n_max must be >= 1");
    }
    if (n_max > 2048) {
        throw std::domain_error(
            "n_max above 2048 exceeds the dense-solver contract");
    }
    if (n_max < series.k_max()) {
        throw std::domain_error(
            "n_max (" + std::to_string(n_max) + ") smaller than the series "
            "bandwidth k_max (" + std::to_string(series.k_max()) + ")");
    }

    ChargeHamiltonian h;
    h.n_max = n_max;
    h.charge_offset = n_g;
    h.charging_energy = scales.charging_energy;
    h.potential_scale = scales.potential_energy;
    h.bandwidth = series.k_max();

    const int dim = h.dimension();
    h.matrix = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
        const double n = double(h.charge_number(i)) + n_g;
        h.matrix(i, i) = 4.0 * scales.charging_energy * n * n +
                         scales.potential_energy * series.a(0);
    }
    // cos(k phi) -> 1/2 on the k-th off-diagonals
    for (int k = 1; k <= series.k_max(); ++k) {
        const double v = 0.5 * scales.potential_energy * series.a(k);
        for (int i = 0; i + k < dim; ++i) {
            h.matrix(i, i + k) = v;
            h.matrix(i + k, i) = v;
        }
    }
    return h;
}

}  // namespace polycirc
