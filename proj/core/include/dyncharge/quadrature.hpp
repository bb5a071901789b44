#pragma once

#include <functional>

namespace dyncharge {

struct IntegrationOptions {
  double abs_tol = 1e-10;
  double rel_tol = 1e-8;
  int max_depth = 48;
};

struct IntegrationResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

// Adaptive composite Simpson with Richardson correction. Throws a
// NumericalError carrying the achieved tolerance when max_depth is exhausted
// before the local error criterion is met. Callers integrate in normalized
// coordinates so that the default tolerances are meaningful.
IntegrationResult integrate(const std::function<double(double)>& f, double a,
                            double b, IntegrationOptions options = {});

}  // namespace dyncharge
