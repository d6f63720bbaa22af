#pragma once

#include <Eigen/Dense>

#include "polycirc/circuit.hpp"
#include "polycirc/potential.hpp"

namespace polycirc {

// H = 4 E_c (n + n_g)^2 + E_pot V(phi) truncated to |n| <= n_max in the
// Cooper-pair number basis. cos(k phi) couples |n> to |n±k> with weight 1/2,
// so the matrix is real symmetric and banded with bandwidth k_max.
struct ChargeHamiltonian {
    int n_max = 0;
    double charge_offset = 0.0;    // n_g
    double charging_energy = 0.0;  // E_c [J]
    double potential_scale = 0.0;  // E_pot [J]
    int bandwidth = 0;             // k_max of the series
    Eigen::MatrixXd matrix;        // (2 n_max + 1)^2, joule entries

    int dimension() const { return 2 * n_max + 1; }
    // Basis index n for matrix row/column i.
    int charge_number(int i) const { return i - n_max; }
};

ChargeHamiltonian build_charge_hamiltonian(const EnergyScales& scales,
                                           const FourierSeries& series,
                                           double n_g, int n_max);

}  // namespace polycirc
