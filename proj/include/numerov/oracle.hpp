#pragma once

#include <cstddef>

#include "numerov/assembly.hpp"
#include "numerov/model.hpp"

namespace numerov::oracle {

/// Bohr level -Z^2 / (2 n^2).
double analytic_energy(double Z, int n);

/// k-th eigenvalue of the zero-potential pencil in closed form,
/// 6 (1 - cos t) / (h^2 (5 + cos t)),  t = k pi / (N + 1).
/// A and B share the eigenvectors sin(k pi i / (N+1)), hence the formula.
double box_pencil_eigenvalue(std::size_t N, double h, std::size_t k);

struct ShootResult {
    double energy = 0.0;
    double boundary_mismatch = 0.0;  ///< psi_{N+1} / ||psi||_inf at the returned energy
    int nodes = 0;
};

/// Outward Numerov integration psi_0 = 0, psi_1 = h, bisected on E until the
/// bracket is below 1e-12 max(1, |E|). The number of sign changes of
/// psi_1..psi_{N+1} counts the discrete levels below E, which steers the
/// bisection to the level with target_nodes interior nodes.
ShootResult shoot_numerov(const RadialGrid& grid, const PotentialSpec& pot, double e_lo, double e_hi,
                          int target_nodes);

} // namespace numerov::oracle
