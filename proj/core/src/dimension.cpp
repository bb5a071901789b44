#include "dyncharge/dimension.hpp"

#include <sstream>

namespace dyncharge {

Dimension dim_mul(const Dimension& a, const Dimension& b) {
  return Dimension(a.length() + b.length(), a.mass() + b.mass(),
                   a.time() + b.time(), a.current() + b.current());
}

Dimension dim_div(const Dimension& a, const Dimension& b) {
  return Dimension(a.length() - b.length(), a.mass() - b.mass(),
                   a.time() - b.time(), a.current() - b.current());
}

Dimension dim_pow(const Dimension& a, const Rational& p) {
  return Dimension(a.length() * p, a.mass() * p, a.time() * p,
                   a.current() * p);
}

Dimension natural_reduce(const Dimension& d) {
  // A = J m^-2 s^-1 = kg s^-3, so a current exponent i folds into
  // mass += i, time -= 3i.
  const Rational i = d.current();
  return Dimension(d.length(), d.mass() + i, d.time() - 3 * i, Rational(0));
}

namespace {

void append_exponent(std::ostream& os, const Rational& e) {
  if (e == 1) return;
  os << '^' << e.numerator();
  if (e.denominator() != 1) os << '/' << e.denominator();
}

}  // namespace

std::string to_string(const Dimension& d) {
  if (d.is_dimensionless()) return "1";
  static const char* const kNames[4] = {"kg", "m", "s", "A"};
  const Rational exps[4] = {d.mass(), d.length(), d.time(), d.current()};
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k < 4; ++k) {
    if (exps[k] == 0) continue;
    if (!first) os << ' ';
    os << kNames[k];
    append_exponent(os, exps[k]);
    first = false;
  }
  return os.str();
}

namespace dims {

Dimension dimensionless() { return {}; }
Dimension length() { return {1, 0, 0, 0}; }
Dimension mass() { return {0, 1, 0, 0}; }
Dimension time() { return {0, 0, 1, 0}; }
Dimension current() { return {0, 0, 0, 1}; }
Dimension velocity() { return {1, 0, -1, 0}; }
Dimension frequency() { return {0, 0, -1, 0}; }
Dimension force() { return {1, 1, -2, 0}; }
Dimension energy() { return {2, 1, -2, 0}; }
Dimension power() { return {2, 1, -3, 0}; }
Dimension action() { return {2, 1, -1, 0}; }

Dimension charge_natural() { return {0, 1, -2, 0}; }
Dimension electric_field_natural() { return {-2, 1, -2, 0}; }
Dimension magnetic_field_natural() { return {-3, 1, -1, 0}; }
Dimension scalar_potential_natural() { return {-1, 1, -2, 0}; }
Dimension eta_natural() { return {-3, 1, -2, 0}; }
Dimension energy_density() { return {-1, 1, -2, 0}; }
Dimension momentum_density() { return {-2, 1, -1, 0}; }
Dimension action_natural() { return {3, -1, 2, 0}; }

}  // namespace dims

}  // namespace dyncharge
