#pragma once

#include <functional>
#include <span>
#include <vector>

#include "dyncharge/quantity.hpp"

namespace dyncharge {

enum class GridSpacing { uniform, logarithmic };

// Radial grid on [r_min, r_max] with r_min > 0: the inner boundary sits off
// the coordinate singularity and carries a flux condition when the origin
// region matters.
struct RadialGrid {
  double r_min = 0.0;
  double r_max = 0.0;
  int n_points = 0;
  GridSpacing spacing = GridSpacing::uniform;

  // Throws GridError unless r_min > 0, r_min < r_max, n_points >= 16.
  static RadialGrid make(double r_min, double r_max, int n_points,
                         GridSpacing spacing = GridSpacing::uniform);

  // Node radii, strictly increasing.
  std::vector<double> nodes() const;
};

struct BoundaryCondition {
  enum class Kind { dirichlet, flux };
  Kind kind = Kind::dirichlet;
  // dirichlet: phi(r_b); flux: r_b^2 dphi/dr at the boundary.
  double value = 0.0;

  static BoundaryCondition dirichlet(double phi) {
    return {Kind::dirichlet, phi};
  }
  static BoundaryCondition flux(double r2_dphi_dr) {
    return {Kind::flux, r2_dphi_dr};
  }
};

// Scalar potential samples at one time; phi carries J m^-3 in the natural
// system.
struct FieldSnapshot {
  RadialGrid grid;
  std::vector<double> phi;
  double t = 0.0;
};

// Solves (1/r^2) d/dr(r^2 dphi/dr) = rhs(r) by second-order central
// differences on the substituted variable psi = r*phi (tridiagonal, direct
// Thomas solve). At least one boundary must be Dirichlet. The discrete
// residual is verified to 1e-10 relative to the system scale.
//
// Throws WellPosednessError (two flux conditions), DomainError (non-finite
// rhs at a node), NumericalError (residual check failed).
FieldSnapshot solve_radial_poisson(const RadialGrid& grid,
                                   const std::function<double(double)>& rhs,
                                   BoundaryCondition inner,
                                   BoundaryCondition outer, double t = 0.0);

// E = -dphi/dr at the nodes, from the same psi = r*phi representation the
// solver uses (exact on discretely harmonic regions).
std::vector<double> electric_field(const FieldSnapshot& snapshot);

// phi = q/r, the monopole potential in the convention E = q/r^2.
double analytic_monopole_phi(double q, double r);

// Source sampled as `value` strictly inside `radius`, 0 outside, and
// value/2 on a node that falls on the interface (keeps the second-order
// stencil second-order accurate across the jump).
std::function<double(double)> uniform_sphere_profile(double value,
                                                     double radius);

// Exact solution / right-hand-side pair for convergence measurement.
struct ManufacturedProblem {
  std::function<double(double)> phi;
  std::function<double(double)> rhs;
};

// phi = a + b r + c r^2  (rhs = 2b/r + 6c); the second-order stencil solves
// this to rounding.
ManufacturedProblem quadratic_solution(double a, double b, double c);

// phi = sin(k r)/r (rhs = -k^2 phi); genuinely second order.
ManufacturedProblem sinc_solution(double k);

struct ConvergenceRow {
  int n_points = 0;
  double l2_error = 0.0;
  // log2-slope against the previous row; 0 for the first row.
  double observed_order = 0.0;
};

// Solves the problem with Dirichlet data from the exact solution at each
// size and reports relative L2 errors. Requires at least 3 strictly
// increasing sizes.
std::vector<ConvergenceRow> convergence_study(double r_min, double r_max,
                                              GridSpacing spacing,
                                              const ManufacturedProblem& problem,
                                              std::span<const int> sizes);

}  // namespace dyncharge
