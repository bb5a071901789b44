#include "dyncharge/dynamic_charge.hpp"

#include <cmath>
#include <numbers>

#include "dyncharge/errors.hpp"
#include "dyncharge/format.hpp"

namespace dyncharge {

ProtonOscillation::ProtonOscillation(double R_p, double d, double omega_H,
                                     double M_p, double beta)
    : R_p_(R_p), d_(d), omega_H_(omega_H), M_p_(M_p), beta_(beta) {
  if (!(R_p > 0.0))
    throw DomainError("proton radius must be positive, got " +
                      format_double(R_p));
  if (!(d >= 0.0 && d < R_p))
    throw DomainError("oscillation amplitude must satisfy 0 <= d < R_p, got "
                      "d=" + format_double(d) + " with R_p=" +
                      format_double(R_p));
  if (!(omega_H > 0.0))
    throw DomainError("oscillation frequency must be positive");
  if (!(M_p > 0.0)) throw DomainError("proton mass must be positive");
}

double ProtonOscillation::rho0() const {
  return 3.0 * M_p_ / (4.0 * std::numbers::pi * R_p_ * R_p_ * R_p_);
}

double ProtonOscillation::period() const {
  return 2.0 * std::numbers::pi / omega_H_;
}

double radius_at(const ProtonOscillation& p, double t) {
  return p.R_p() + p.amplitude() * std::sin(p.omega() * t);
}

double density_exact(const ProtonOscillation& p, double t) {
  const double r = radius_at(p, t);
  if (!(r > 0.0))
    throw DomainError("proton radius collapsed to " + format_double(r));
  return 3.0 * p.M_p() / (4.0 * std::numbers::pi * r * r * r);
}

double density_first_order(const ProtonOscillation& p, double t) {
  return p.rho0() * (1.0 - p.x() * std::sin(p.omega() * t));
}

double dynamic_charge_q(const ProtonOscillation& p, double t) {
  return p.beta() * p.x() * p.M_p() * p.omega() * p.omega() *
         std::sin(p.omega() * t);
}

std::vector<double> poisson_source(const ProtonOscillation& p, double t,
                                   const RadialGrid& grid,
                                   const std::vector<double>& static_sigma) {
  if (static_sigma.size() != static_cast<std::size_t>(grid.n_points))
    throw GridError("static sigma has " + std::to_string(static_sigma.size()) +
                    " entries for a grid of " + std::to_string(grid.n_points) +
                    " nodes");
  // d^2 rho/dt^2 of the first-order density is rho0 x omega^2 sin(omega t),
  // uniform over the momentary proton volume.
  const double dynamic_term = p.beta() * p.x() * p.rho0() * p.omega() *
                              p.omega() * std::sin(p.omega() * t);
  const double r_p = radius_at(p, t);
  std::vector<double> source(static_sigma);
  const std::vector<double> r = grid.nodes();
  for (int i = 0; i < grid.n_points; ++i) {
    if (r[i] <= r_p) source[i] += dynamic_term;
  }
  return source;
}

}  // namespace dyncharge
