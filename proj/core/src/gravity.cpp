#include "dyncharge/gravity.hpp"

#include <cmath>
#include <numbers>

#include "dyncharge/errors.hpp"
#include "dyncharge/format.hpp"

namespace dyncharge {

namespace {
constexpr double kPi = std::numbers::pi;
}

OrbitalBody OrbitalBody::make(double mass, double body_radius,
                              double orbit_radius, double period) {
  if (!(mass >= 0.0))
    throw DomainError("mass must be non-negative, got " + format_double(mass));
  if (!(body_radius > 0.0) || !(orbit_radius > 0.0) || !(period > 0.0))
    throw DomainError("body radius, orbit radius and period must be positive");
  if (!(body_radius < orbit_radius))
    throw DomainError("body radius " + format_double(body_radius) +
                      " must be smaller than the orbit radius " +
                      format_double(orbit_radius));
  return {mass, body_radius, orbit_radius, period};
}

OrbitalBody earth(const ConstantsTable& constants) {
  return OrbitalBody::make(constants.M_E, constants.R_E, constants.R_O,
                           constants.tau_E);
}

FrequencyBand gravity_frequency_band(double nu_E, double ratio) {
  if (!(nu_E > 0.0))
    throw DomainError("electromagnetic frequency must be positive, got " +
                      format_double(nu_E));
  FrequencyBand band;
  band.nu_G = ratio * nu_E;
  band.in_band = band.nu_G >= band.band_low && band.nu_G <= band.band_high;
  return band;
}

double gravity_field_amplitude(const OrbitalBody& body) {
  const double rho =
      3.0 * body.mass /
      (4.0 * kPi * body.body_radius * body.body_radius * body.body_radius);
  const double omega = 2.0 * kPi / body.period;
  const double a_c = omega * omega * body.orbit_radius;
  return rho * a_c;
}

double gravity_energy_density(const OrbitalBody& body, double hbar) {
  if (!(hbar > 0.0))
    throw DomainError("hbar must be positive, got " + format_double(hbar));
  const double g_over_4pi = gravity_field_amplitude(body) / (4.0 * kPi);
  return 0.5 * hbar * g_over_4pi * g_over_4pi;
}

double gravity_flux(double phi_G, double N_A, double c) {
  return phi_G * N_A * c;
}

GravityFluxReport solar_gravity_report(const OrbitalBody& body,
                                       const ConstantsTable& constants,
                                       std::optional<double> hbar_override) {
  GravityFluxReport report;
  report.hbar_used = hbar_override.value_or(constants.hbar);
  report.band = gravity_frequency_band(constants.nu_H);
  report.G_S = gravity_field_amplitude(body);
  report.G_S_over_4pi = report.G_S / (4.0 * kPi);
  report.phi_G = gravity_energy_density(body, report.hbar_used);
  report.J_G = gravity_flux(report.phi_G, constants.N_A, constants.c);
  return report;
}

}  // namespace dyncharge
