#pragma once

#include <optional>

#include "dyncharge/constants.hpp"

namespace dyncharge {

// A body on a circular orbit; the source of the hypothesized low-frequency
// gravity radiation.
struct OrbitalBody {
  double mass = 0.0;          // kg
  double body_radius = 0.0;   // m
  double orbit_radius = 0.0;  // m
  double period = 0.0;        // s, orbital

  // Throws DomainError unless all fields are positive and
  // body_radius < orbit_radius.
  static OrbitalBody make(double mass, double body_radius, double orbit_radius,
                          double period);
};

OrbitalBody earth(const ConstantsTable& constants);

struct FrequencyBand {
  double nu_G = 0.0;  // Hz
  double band_low = 1e3;
  double band_high = 1e5;
  bool in_band = false;
};

// nu_G = ratio * nu_E: the gravitational counterpart of an electromagnetic
// frequency, reported against the expected 1-100 kHz band.
FrequencyBand gravity_frequency_band(double nu_E, double ratio = 1e-11);

// G_S = rho a_C with rho = 3M/(4 pi R_body^3) and a_C = (2 pi/tau)^2 R_orbit
// (orbital angular frequency; the rotational reading does not reproduce the
// printed flux).
double gravity_field_amplitude(const OrbitalBody& body);

// phi_G = (hbar/2) (G_S/4 pi)^2 = (hbar/2) (3 M R_orbit / (4 R_body^3 tau^2))^2
double gravity_energy_density(const OrbitalBody& body, double hbar);

// J_G = phi_G N_A c in W/m^2; N_A enters as a pure number (the atomic-to-
// macroscopic scale factor).
double gravity_flux(double phi_G, double N_A, double c);

struct GravityFluxReport {
  FrequencyBand band;
  double G_S = 0.0;
  double G_S_over_4pi = 0.0;
  double phi_G = 0.0;
  double J_G = 0.0;
  double hbar_used = 0.0;
};

GravityFluxReport solar_gravity_report(
    const OrbitalBody& body, const ConstantsTable& constants,
    std::optional<double> hbar_override = std::nullopt);

}  // namespace dyncharge
