#include "dyncharge/unit_systems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "dyncharge/errors.hpp"
#include "dyncharge/format.hpp"
#include "dyncharge/unit_parser.hpp"

namespace dyncharge {

std::string to_string(UnitSystem name) {
  switch (name) {
    case UnitSystem::esu: return "esu";
    case UnitSystem::emu: return "emu";
    case UnitSystem::gaussian: return "gaussian";
    case UnitSystem::heaviside_lorentz: return "heaviside_lorentz";
    case UnitSystem::si: return "si";
    case UnitSystem::natural: return "natural";
  }
  throw DomainError("unknown unit system");
}

SymbolicConstant SymbolicConstant::operator*(const SymbolicConstant& o) const {
  return {coeff * o.coeff, c + o.c, eps + o.eps, mu + o.mu, pi + o.pi};
}

SymbolicConstant SymbolicConstant::operator/(const SymbolicConstant& o) const {
  return {coeff / o.coeff, c - o.c, eps - o.eps, mu - o.mu, pi - o.pi};
}

SymbolicConstant SymbolicConstant::rewrite_eps_mu() const {
  SymbolicConstant r = *this;
  int t = 0;
  if (r.eps > 0 && r.mu > 0) t = std::min(r.eps, r.mu);
  if (r.eps < 0 && r.mu < 0) t = std::max(r.eps, r.mu);
  r.eps -= t;
  r.mu -= t;
  r.c -= 2 * t;
  return r;
}

bool SymbolicConstant::is_one() const {
  return coeff == 1 && c == 0 && eps == 0 && mu == 0 && pi == 0;
}

std::string SymbolicConstant::str() const {
  // Renders as numerator / "(denominator)", e.g. "1/(4 pi eps)", "c^-2" as
  // "1/c^2", "mu/(4 pi)".
  std::vector<std::string> num, den;
  if (coeff.numerator() != 1) num.push_back(std::to_string(coeff.numerator()));
  if (coeff.denominator() != 1)
    den.push_back(std::to_string(coeff.denominator()));
  const auto add = [&](const char* sym, int p) {
    if (p == 0) return;
    auto& side = p > 0 ? num : den;
    const int a = std::abs(p);
    side.push_back(a == 1 ? std::string(sym)
                          : std::string(sym) + "^" + std::to_string(a));
  };
  add("c", c);
  add("eps", eps);
  add("mu", mu);
  add("pi", pi);

  const auto join = [](const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
      if (!out.empty()) out += ' ';
      out += p;
    }
    return out;
  };
  std::string out = num.empty() ? "1" : join(num);
  if (!den.empty()) {
    if (den.size() == 1 && den[0].find(' ') == std::string::npos)
      out += "/" + den[0];
    else
      out += "/(" + join(den) + ")";
  }
  return out;
}

namespace {

SymbolicConstant one() { return {}; }
SymbolicConstant c_pow(int p) { return {Rational(1), p, 0, 0, 0}; }
SymbolicConstant over_4pi() { return {Rational(1, 4), 0, 0, 0, -1}; }

}  // namespace

const std::vector<UnitSystemSpec>& all_unit_systems() {
  static const std::vector<UnitSystemSpec> systems = {
      {UnitSystem::esu, one(), c_pow(-2), one(), one()},
      {UnitSystem::emu, c_pow(2), one(), one(), one()},
      {UnitSystem::gaussian, one(), c_pow(-2), c_pow(1), c_pow(-1)},
      {UnitSystem::heaviside_lorentz,
       over_4pi(),
       {Rational(1, 4), -2, 0, 0, -1},
       c_pow(1),
       c_pow(-1)},
      {UnitSystem::si,
       {Rational(1, 4), 0, -1, 0, -1},
       {Rational(1, 4), 0, 0, 1, -1},
       one(),
       one()},
      {UnitSystem::natural, over_4pi(), c_pow(-2), one(), over_4pi()},
  };
  return systems;
}

UnitSystemSpec maxwell_constants(UnitSystem name) {
  for (const auto& spec : all_unit_systems())
    if (spec.name == name) return spec;
  throw DomainError("unknown unit system");
}

bool maxwell_consistency_holds(const UnitSystemSpec& spec) {
  const SymbolicConstant q =
      (spec.k1 / (spec.k2 * spec.k3 * spec.alpha * c_pow(2))).rewrite_eps_mu();
  return q.is_one();
}

EtaCoupling::EtaCoupling(Quantity eta) : eta_(std::move(eta)) {
  if (!(natural_reduce(eta_.dim) == dims::eta_natural()))
    throw DimensionError("eta must carry N m^-4 (C m^-3), got [" +
                         to_string(eta_.dim) + "]");
  if (!(eta_.magnitude > 0.0))
    throw DomainError("eta must be strictly positive, got " +
                      format_double(eta_.magnitude));
}

EtaCoupling EtaCoupling::from_hbar(double hbar_value) {
  if (!(hbar_value > 0.0))
    throw DomainError("hbar must be strictly positive, got " +
                      format_double(hbar_value));
  return EtaCoupling(
      Quantity{4.0 * M_PI / hbar_value, dims::eta_natural()});
}

namespace {

void require_dimension(const char* arg, const Dimension& actual,
                       const Dimension& expected) {
  if (!(natural_reduce(actual) == expected))
    throw DimensionError(std::string("argument '") + arg +
                         "' has dimension [" + to_string(actual) +
                         "], expected [" + to_string(expected) + "]");
}

}  // namespace

VectorQuantity lorentz_force(const Quantity& q, const VectorQuantity& E,
                             const VectorQuantity& u, const VectorQuantity& B,
                             const EtaCoupling& eta) {
  require_dimension("q", q.dim, dims::charge_natural());
  require_dimension("E", E.dim, dims::electric_field_natural());
  require_dimension("u", u.dim, dims::velocity());
  require_dimension("B", B.dim, dims::magnetic_field_natural());

  const Quantity scale{q.magnitude / eta.magnitude(),
                       dim_div(natural_reduce(q.dim), dims::eta_natural())};
  const VectorQuantity field{
      E.value + cross(u.value, B.value),
      natural_reduce(E.dim)};
  VectorQuantity force = scale * field;
  const auto report = check_equation_dims(dims::force(), {force.dim});
  if (!report.consistent)
    throw DimensionError("force assembled to [" + to_string(force.dim) +
                         "] instead of newton");
  return force;
}

VectorQuantity angular_momentum(const VectorQuantity& r, const Quantity& q,
                                const VectorQuantity& E,
                                const VectorQuantity& u,
                                const VectorQuantity& B,
                                const EtaCoupling& eta) {
  require_dimension("r", r.dim, dims::length());
  if (!std::isfinite(norm(r.value)))
    throw DomainError("position must be finite");
  return cross(r, lorentz_force(q, E, u, B, eta));
}

Quantity radiation_energy_density(const VectorQuantity& E,
                                  const VectorQuantity& B,
                                  const EtaCoupling& eta, const Quantity& c) {
  require_dimension("E", E.dim, dims::electric_field_natural());
  require_dimension("B", B.dim, dims::magnetic_field_natural());
  require_dimension("c", c.dim, dims::velocity());

  const double e2 = E.value.x * E.value.x + E.value.y * E.value.y +
                    E.value.z * E.value.z;
  const double b2 = B.value.x * B.value.x + B.value.y * B.value.y +
                    B.value.z * B.value.z;
  const double value =
      (e2 + c.magnitude * c.magnitude * b2) / (8.0 * M_PI * eta.magnitude());
  const Dimension dim = dim_div(
      dim_mul(natural_reduce(E.dim), natural_reduce(E.dim)),
      dims::eta_natural());
  if (!(dim == dims::energy_density()))
    throw DimensionError("radiation density assembled to [" + to_string(dim) +
                         "] instead of J m^-3");
  return {value, dim};
}

FineStructureResult fine_structure_check(double e_esu, double hbar_erg_s,
                                         double c_cm_per_s) {
  FineStructureResult result;
  result.alpha = e_esu * e_esu / (hbar_erg_s * c_cm_per_s);
  constexpr double kAccepted = 7.297e-3;
  result.flagged = std::abs(result.alpha / kAccepted - 1.0) > 1e-3;
  return result;
}

}  // namespace dyncharge
