#pragma once

#include <array>
#include <string>

#include <boost/rational.hpp>

namespace dyncharge {

// Exponents are exact rationals: fractional powers show up in the cgs-style
// systems (statcoulomb = g^1/2 cm^3/2 s^-1) and exact arithmetic keeps
// dimension equality decidable. boost::rational stores lowest terms with a
// positive denominator.
using Rational = boost::rational<long long>;

// Dimension of a physical quantity over the base (length, mass, time,
// current). The natural three-unit system is reached by natural_reduce(),
// which eliminates the current component.
class Dimension {
public:
  Dimension() = default;
  Dimension(Rational length, Rational mass, Rational time, Rational current)
      : exp_{std::move(length), std::move(mass), std::move(time),
             std::move(current)} {}

  const Rational& length() const { return exp_[0]; }
  const Rational& mass() const { return exp_[1]; }
  const Rational& time() const { return exp_[2]; }
  const Rational& current() const { return exp_[3]; }

  bool is_dimensionless() const {
    return exp_[0] == 0 && exp_[1] == 0 && exp_[2] == 0 && exp_[3] == 0;
  }

  friend bool operator==(const Dimension&, const Dimension&) = default;

  const std::array<Rational, 4>& exponents() const { return exp_; }

private:
  std::array<Rational, 4> exp_{};
};

Dimension dim_mul(const Dimension& a, const Dimension& b);
Dimension dim_div(const Dimension& a, const Dimension& b);
Dimension dim_pow(const Dimension& a, const Rational& p);

// Eliminates the current exponent via A -> kg s^-3 (the ampere carries
// J m^-2 s^-1 in the natural system). Idempotent.
Dimension natural_reduce(const Dimension& d);

// Canonical form over the base tokens, e.g. "kg m s^-2", "kg^1/2 m^3/2",
// "1" for dimensionless. Output parses back to the same Dimension.
std::string to_string(const Dimension& d);

// Frequently used dimensions, composed from the base.
namespace dims {

Dimension dimensionless();
Dimension length();
Dimension mass();
Dimension time();
Dimension current();
Dimension velocity();
Dimension frequency();
Dimension force();
Dimension energy();
Dimension power();
Dimension action();

// Natural-system rows (current-free).
Dimension charge_natural();          // J m^-2
Dimension electric_field_natural();  // N m^-3
Dimension magnetic_field_natural();  // N s m^-4
Dimension scalar_potential_natural();// J m^-3
Dimension eta_natural();             // N m^-4 = C m^-3
Dimension energy_density();          // J m^-3
Dimension momentum_density();        // kg m^-2 s^-1
Dimension action_natural();          // N^-1 m^4 (the rescaled hbar)

}  // namespace dims

}  // namespace dyncharge
