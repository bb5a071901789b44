#pragma once

#include <vector>

#include "dyncharge/poisson.hpp"

namespace dyncharge {

// Radially oscillating proton: r_p(t) = R_p + d sin(omega_H t). The relative
// amplitude x = 3d/R_p must stay below 3 for the first-order density
// expansion to make sense; construction enforces 0 <= d < R_p.
class ProtonOscillation {
public:
  ProtonOscillation(double R_p, double d, double omega_H, double M_p,
                    double beta = 1.0);

  double R_p() const { return R_p_; }
  double amplitude() const { return d_; }
  double omega() const { return omega_H_; }
  double M_p() const { return M_p_; }
  double beta() const { return beta_; }

  double x() const { return 3.0 * d_ / R_p_; }
  double rho0() const;    // 3 M_p / (4 pi R_p^3)
  double period() const;  // 2 pi / omega_H

private:
  double R_p_, d_, omega_H_, M_p_, beta_;
};

// r_p(t) = R_p + d sin(omega_H t)
double radius_at(const ProtonOscillation& p, double t);

// 3 M_p / (4 pi r_p(t)^3); mass is conserved exactly by construction.
double density_exact(const ProtonOscillation& p, double t);

// rho0 (1 - x sin(omega_H t)), the first-order expansion of density_exact.
double density_first_order(const ProtonOscillation& p, double t);

// q_D(t) = beta x M_p omega_H^2 sin(omega_H t), the volume integral of the
// dynamic source term over the proton.
double dynamic_charge_q(const ProtonOscillation& p, double t);

// Source bundle sigma(r,t) + beta d^2rho/dt^2 on the grid nodes: the
// quantity whose negative is the Laplacian of the scalar potential. The
// dynamic term is uniform inside radius_at(p,t) and zero outside.
// static_sigma must have one entry per grid node.
std::vector<double> poisson_source(const ProtonOscillation& p, double t,
                                   const RadialGrid& grid,
                                   const std::vector<double>& static_sigma);

}  // namespace dyncharge
