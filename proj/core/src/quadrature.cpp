#include "dyncharge/quadrature.hpp"

#include <cmath>

#include "dyncharge/errors.hpp"
#include "dyncharge/format.hpp"

namespace dyncharge {

namespace {

struct Worker {
  const std::function<double(double)>& f;
  const IntegrationOptions& opt;
  long evaluations = 0;
  double worst_local_error = 0.0;
  bool converged = true;

  double eval(double x) {
    ++evaluations;
    const double v = f(x);
    if (!std::isfinite(v))
      throw NumericalError("integrand is not finite at x=" + format_double(x));
    return v;
  }

  static double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
  }

  // `whole` is the Simpson estimate over [a,b] with midpoint value fm;
  // `tol` the error budget for this interval.
  double refine(double a, double b, double fa, double fm, double fb,
                double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || depth >= opt.max_depth) {
      if (std::abs(delta) > 15.0 * tol) {
        converged = false;
        worst_local_error = std::max(worst_local_error, std::abs(delta) / 15.0);
      }
      return left + right + delta / 15.0;
    }
    return refine(a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           refine(m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
  }
};

}  // namespace

IntegrationResult integrate(const std::function<double(double)>& f, double a,
                            double b, IntegrationOptions options) {
  if (a == b) return {0.0, 0.0, 0};
  Worker w{f, options};
  const double fa = w.eval(a);
  const double m = 0.5 * (a + b);
  const double fm = w.eval(m);
  const double fb = w.eval(b);
  const double whole = Worker::simpson(fa, fm, fb, b - a);
  const double tol =
      std::max(options.abs_tol, options.rel_tol * std::abs(whole));
  const double value = w.refine(a, b, fa, fm, fb, whole, tol, 0);
  if (!w.converged)
    throw NumericalError(
        "quadrature did not converge: achieved local error " +
        format_double(w.worst_local_error) + " against tolerance " +
        format_double(tol));
  return {value, tol, w.evaluations};
}

}  // namespace dyncharge
