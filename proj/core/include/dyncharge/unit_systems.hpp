#pragma once

#include <string>
#include <vector>

#include "dyncharge/quantity.hpp"

namespace dyncharge {

enum class UnitSystem { esu, emu, gaussian, heaviside_lorentz, si, natural };

std::string to_string(UnitSystem name);

// Symbolic value of a Maxwell constant: an exact rational coefficient times
// integer powers of the atoms c, epsilon, mu, pi. Stored symbolically so the
// consistency relation between the constants is decidable exactly.
struct SymbolicConstant {
  Rational coeff{1};
  int c = 0;
  int eps = 0;
  int mu = 0;
  int pi = 0;

  friend bool operator==(const SymbolicConstant&,
                         const SymbolicConstant&) = default;

  SymbolicConstant operator*(const SymbolicConstant& o) const;
  SymbolicConstant operator/(const SymbolicConstant& o) const;

  // Rewrites matching eps*mu pairs as c^-2.
  SymbolicConstant rewrite_eps_mu() const;

  bool is_one() const;
  std::string str() const;
};

// One row of the electromagnetic-constants catalogue: the coefficients the
// Maxwell equations carry in the given system of units.
struct UnitSystemSpec {
  UnitSystem name;
  SymbolicConstant k1, k2, k3, alpha;
};

UnitSystemSpec maxwell_constants(UnitSystem name);
const std::vector<UnitSystemSpec>& all_unit_systems();

// Every catalogued system satisfies k1 = c^2 k2 k3 alpha once eps*mu is
// rewritten as c^-2; checked exactly at the symbolic level.
bool maxwell_consistency_holds(const UnitSystemSpec& spec);

// The coupling between electromagnetic and mechanic variables in the natural
// system. Dimension N m^-4 (equivalently C m^-3), strictly positive.
class EtaCoupling {
public:
  explicit EtaCoupling(Quantity eta);

  // eta = 4 pi / hbar, with hbar in the rescaled N^-1 m^4 unit.
  static EtaCoupling from_hbar(double hbar_value);

  const Quantity& eta() const { return eta_; }
  double magnitude() const { return eta_.magnitude; }

private:
  Quantity eta_;
};

// F = (q/eta) (E + u x B); returned dimension is newton, verified through
// check_equation_dims before returning. Inputs must carry the natural-system
// dimensions (charge J m^-2, field N m^-3, velocity m/s, field N s m^-4);
// mismatches raise a DimensionError naming the argument.
VectorQuantity lorentz_force(const Quantity& q, const VectorQuantity& E,
                             const VectorQuantity& u, const VectorQuantity& B,
                             const EtaCoupling& eta);

// L = r x F with F the Lorentz force above; dimension N m.
VectorQuantity angular_momentum(const VectorQuantity& r, const Quantity& q,
                                const VectorQuantity& E,
                                const VectorQuantity& u,
                                const VectorQuantity& B,
                                const EtaCoupling& eta);

// phi_rad = (E^2 + c^2 B^2) / (8 pi eta); dimension J m^-3.
Quantity radiation_energy_density(const VectorQuantity& E,
                                  const VectorQuantity& B,
                                  const EtaCoupling& eta, const Quantity& c);

// alpha = e^2/(hbar c) from Gaussian-system magnitudes (e in esu, hbar in
// erg s, c in cm/s). Flagged when off the accepted 7.297e-3 by more than
// 1e-3 relative.
struct FineStructureResult {
  double alpha = 0.0;
  bool flagged = false;
};

FineStructureResult fine_structure_check(double e_esu, double hbar_erg_s,
                                         double c_cm_per_s);

}  // namespace dyncharge
