#include "dyncharge/poisson.hpp"

#include <cmath>
#include <numeric>

#include "dyncharge/errors.hpp"
#include "dyncharge/format.hpp"

namespace dyncharge {

RadialGrid RadialGrid::make(double r_min, double r_max, int n_points,
                            GridSpacing spacing) {
  if (!(r_min > 0.0))
    throw GridError("r_min must be positive, got " + format_double(r_min));
  if (!(r_min < r_max))
    throw GridError("r_min must be smaller than r_max, got [" +
                    format_double(r_min) + ", " + format_double(r_max) + "]");
  if (n_points < 16)
    throw GridError("n_points must be at least 16, got " +
                    std::to_string(n_points));
  return {r_min, r_max, n_points, spacing};
}

std::vector<double> RadialGrid::nodes() const {
  std::vector<double> r(n_points);
  if (spacing == GridSpacing::uniform) {
    const double h = (r_max - r_min) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) r[i] = r_min + i * h;
  } else {
    const double ratio = std::log(r_max / r_min) / (n_points - 1);
    for (int i = 0; i < n_points; ++i) r[i] = r_min * std::exp(i * ratio);
  }
  r.front() = r_min;
  r.back() = r_max;
  return r;
}

namespace {

// Tridiagonal system rows around psi = r*phi. The interior stencil is the
// non-uniform three-point second derivative:
//   psi''(r_i) ~ a_i psi_{i-1} + b_i psi_i + c_i psi_{i+1}
struct Tridiagonal {
  std::vector<double> lower, diag, upper, rhs;

  explicit Tridiagonal(std::size_t n)
      : lower(n, 0.0), diag(n, 0.0), upper(n, 0.0), rhs(n, 0.0) {}

  std::vector<double> solve() const {
    const std::size_t n = diag.size();
    std::vector<double> cp(n), dp(n), x(n);
    double denom = diag[0];
    if (denom == 0.0) throw WellPosednessError("singular tridiagonal system");
    cp[0] = upper[0] / denom;
    dp[0] = rhs[0] / denom;
    for (std::size_t i = 1; i < n; ++i) {
      denom = diag[i] - lower[i] * cp[i - 1];
      if (denom == 0.0)
        throw WellPosednessError("singular tridiagonal system");
      cp[i] = upper[i] / denom;
      dp[i] = (rhs[i] - lower[i] * dp[i - 1]) / denom;
    }
    x[n - 1] = dp[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) x[i] = dp[i] - cp[i] * x[i + 1];
    return x;
  }
};

struct StencilCoeffs {
  double a, b, c;  // weights of psi_{i-1}, psi_i, psi_{i+1}
};

StencilCoeffs second_derivative(double h_minus, double h_plus) {
  return {2.0 / (h_minus * (h_minus + h_plus)),
          -2.0 / (h_minus * h_plus),
          2.0 / (h_plus * (h_minus + h_plus))};
}

// One-sided second-order first derivative at x0 over x0, x0+h0, x0+h0+h1.
struct OneSided {
  double w0, w1, w2;
};

OneSided forward_derivative(double h0, double h1) {
  const double s = h0 + h1;
  return {-(2.0 * h0 + h1) / (h0 * s), s / (h0 * h1), -h0 / (h1 * s)};
}

}  // namespace

FieldSnapshot solve_radial_poisson(const RadialGrid& grid,
                                   const std::function<double(double)>& rhs,
                                   BoundaryCondition inner,
                                   BoundaryCondition outer, double t) {
  using Kind = BoundaryCondition::Kind;
  if (inner.kind == Kind::flux && outer.kind == Kind::flux)
    throw WellPosednessError(
        "two flux conditions leave the potential undetermined; at least one "
        "boundary must be Dirichlet");

  const std::vector<double> r = grid.nodes();
  const int n = grid.n_points;
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) {
    g[i] = rhs(r[i]);
    if (!std::isfinite(g[i]))
      throw DomainError("source is not finite at r=" + format_double(r[i]));
  }

  // Interior: psi'' = r * g.
  Tridiagonal sys(static_cast<std::size_t>(n));
  for (int i = 1; i + 1 < n; ++i) {
    const auto [a, b, c] = second_derivative(r[i] - r[i - 1], r[i + 1] - r[i]);
    sys.lower[i] = a;
    sys.diag[i] = b;
    sys.upper[i] = c;
    sys.rhs[i] = r[i] * g[i];
  }

  // Inner boundary row. The flux variable is r^2 phi' = r psi' - psi.
  if (inner.kind == Kind::dirichlet) {
    sys.diag[0] = 1.0;
    sys.rhs[0] = r[0] * inner.value;
  } else {
    const auto d = forward_derivative(r[1] - r[0], r[2] - r[1]);
    // r0 (w0 psi0 + w1 psi1 + w2 psi2) - psi0 = F, with psi2 eliminated
    // through the interior equation at node 1 to keep the system tridiagonal.
    const double a1 = sys.lower[1], b1 = sys.diag[1], c1 = sys.upper[1];
    const double rhs1 = sys.rhs[1];
    sys.diag[0] = r[0] * d.w0 - 1.0 - r[0] * d.w2 * a1 / c1;
    sys.upper[0] = r[0] * d.w1 - r[0] * d.w2 * b1 / c1;
    sys.rhs[0] = inner.value - r[0] * d.w2 * rhs1 / c1;
  }

  // Outer boundary row (mirrored elimination for a flux condition).
  const int m = n - 1;
  if (outer.kind == Kind::dirichlet) {
    sys.diag[m] = 1.0;
    sys.rhs[m] = r[m] * outer.value;
  } else {
    const auto d = forward_derivative(r[m] - r[m - 1], r[m - 1] - r[m - 2]);
    // Backward derivative: psi'(r_m) ~ -(w0 psi_m + w1 psi_{m-1} + w2 psi_{m-2})
    const double am = sys.lower[m - 1], bm = sys.diag[m - 1],
                 cm = sys.upper[m - 1];
    const double rhsm = sys.rhs[m - 1];
    sys.diag[m] = -r[m] * d.w0 - 1.0 + r[m] * d.w2 * cm / am;
    sys.lower[m] = -r[m] * d.w1 + r[m] * d.w2 * bm / am;
    sys.rhs[m] = outer.value - (-r[m] * d.w2) * rhsm / am;
  }

  const std::vector<double> psi = sys.solve();

  // Residual of the assembled system, relative to its scale.
  double residual = 0.0, scale = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = sys.diag[i] * psi[i];
    if (i > 0) row += sys.lower[i] * psi[i - 1];
    if (i + 1 < n) row += sys.upper[i] * psi[i + 1];
    residual = std::max(residual, std::abs(row - sys.rhs[i]));
    scale = std::max({scale, std::abs(row), std::abs(sys.rhs[i])});
  }
  if (scale > 0.0 && residual > 1e-10 * scale)
    throw NumericalError("discrete residual " + format_double(residual) +
                         " exceeds 1e-10 of system scale " +
                         format_double(scale));

  FieldSnapshot snapshot{grid, std::vector<double>(n), t};
  for (int i = 0; i < n; ++i) {
    snapshot.phi[i] = psi[i] / r[i];
    if (!std::isfinite(snapshot.phi[i]))
      throw NumericalError("non-finite potential at r=" + format_double(r[i]));
  }
  return snapshot;
}

std::vector<double> electric_field(const FieldSnapshot& snapshot) {
  const std::vector<double> r = snapshot.grid.nodes();
  const int n = snapshot.grid.n_points;
  std::vector<double> psi(n), dpsi(n), e(n);
  for (int i = 0; i < n; ++i) psi[i] = snapshot.phi[i] * r[i];

  for (int i = 1; i + 1 < n; ++i) {
    const double hm = r[i] - r[i - 1];
    const double hp = r[i + 1] - r[i];
    // Non-uniform central first derivative.
    dpsi[i] = (psi[i + 1] * hm * hm - psi[i - 1] * hp * hp +
               psi[i] * (hp * hp - hm * hm)) /
              (hm * hp * (hm + hp));
  }
  {
    const auto d = forward_derivative(r[1] - r[0], r[2] - r[1]);
    dpsi[0] = d.w0 * psi[0] + d.w1 * psi[1] + d.w2 * psi[2];
    const auto e2 = forward_derivative(r[n - 1] - r[n - 2], r[n - 2] - r[n - 3]);
    dpsi[n - 1] =
        -(e2.w0 * psi[n - 1] + e2.w1 * psi[n - 2] + e2.w2 * psi[n - 3]);
  }
  for (int i = 0; i < n; ++i) {
    const double dphi = (r[i] * dpsi[i] - psi[i]) / (r[i] * r[i]);
    e[i] = -dphi;
  }
  return e;
}

double analytic_monopole_phi(double q, double r) {
  if (!(r > 0.0))
    throw DomainError("monopole potential needs r > 0, got " +
                      format_double(r));
  return q / r;
}

std::function<double(double)> uniform_sphere_profile(double value,
                                                     double radius) {
  return [value, radius](double r) {
    const double tol = 1e-12 * radius;
    if (std::abs(r - radius) <= tol) return 0.5 * value;
    return r < radius ? value : 0.0;
  };
}

ManufacturedProblem quadratic_solution(double a, double b, double c) {
  return {[a, b, c](double r) { return a + b * r + c * r * r; },
          [b, c](double r) { return 2.0 * b / r + 6.0 * c; }};
}

ManufacturedProblem sinc_solution(double k) {
  return {[k](double r) { return std::sin(k * r) / r; },
          [k](double r) { return -k * k * std::sin(k * r) / r; }};
}

std::vector<ConvergenceRow> convergence_study(double r_min, double r_max,
                                              GridSpacing spacing,
                                              const ManufacturedProblem& problem,
                                              std::span<const int> sizes) {
  if (sizes.size() < 3)
    throw DomainError("convergence study needs at least 3 grid sizes, got " +
                      std::to_string(sizes.size()));
  for (std::size_t i = 1; i < sizes.size(); ++i)
    if (sizes[i] <= sizes[i - 1])
      throw DomainError("grid sizes must be strictly increasing refinements");

  std::vector<ConvergenceRow> rows;
  for (const int n : sizes) {
    const RadialGrid grid = RadialGrid::make(r_min, r_max, n, spacing);
    const FieldSnapshot snap = solve_radial_poisson(
        grid, problem.rhs, BoundaryCondition::dirichlet(problem.phi(r_min)),
        BoundaryCondition::dirichlet(problem.phi(r_max)));
    const std::vector<double> r = grid.nodes();
    double err2 = 0.0, ref2 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double exact = problem.phi(r[i]);
      err2 += (snap.phi[i] - exact) * (snap.phi[i] - exact);
      ref2 += exact * exact;
    }
    ConvergenceRow row;
    row.n_points = n;
    row.l2_error = std::sqrt(err2 / ref2);
    if (!rows.empty()) {
      const double h_ratio = static_cast<double>(n - 1) /
                             static_cast<double>(rows.back().n_points - 1);
      row.observed_order =
          std::log(rows.back().l2_error / row.l2_error) / std::log(h_ratio);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace dyncharge
