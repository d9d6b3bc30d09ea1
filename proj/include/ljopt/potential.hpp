#pragma once

#include <vector>

#include "ljopt/geometry.hpp"

namespace ljopt {

// Reduced LJ pair energy v(r) = 4 (r^-12 - r^-6).
// Minimum value -1 at r = kEquilibriumDistance; throws std::domain_error for r <= 0.
double pair_energy(double r);

// dv/dr = 4 (-12 r^-13 + 6 r^-7); zero at the equilibrium distance.
double pair_energy_derivative(double r);

// Sum of pair_energy over all unordered pairs. Requires n >= 2 and no
// coincident particles.
double total_energy(const Configuration& config);

// Analytic gradient of total_energy, 3n components in particle order.
std::vector<double> gradient(const Configuration& config);
void gradient(const Configuration& config, std::vector<double>& out);

}  // namespace ljopt
