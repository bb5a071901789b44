#include "dyncharge/hydrogen.hpp"

#include <cmath>
#include <numbers>

#include "dyncharge/errors.hpp"
#include "dyncharge/format.hpp"
#include "dyncharge/quadrature.hpp"

namespace dyncharge {

namespace {

constexpr double kPi = std::numbers::pi;

double time_average_sin2(const QuadratureOptions& opts) {
  if (!opts.numeric_time_average) return 0.5;
  const auto result = integrate(
      [](double theta) {
        const double s = std::sin(2.0 * kPi * theta);
        return s * s;
      },
      0.0, 1.0, {opts.abs_tol, opts.rel_tol});
  return result.value;
}

double time_average_cos2(const QuadratureOptions& opts) {
  if (!opts.numeric_time_average) return 0.5;
  const auto result = integrate(
      [](double theta) {
        const double c = std::cos(2.0 * kPi * theta);
        return c * c;
      },
      0.0, 1.0, {opts.abs_tol, opts.rel_tol});
  return result.value;
}

}  // namespace

double HydrogenModel::omega() const { return 2.0 * kPi * nu_H; }
double HydrogenModel::period() const { return 1.0 / nu_H; }

double default_hydrogen_radius(const ConstantsTable& constants) {
  const double omega = 2.0 * kPi * constants.nu_H;
  const double u1 = std::sqrt(constants.hbar * omega / constants.M_e);
  return u1 / constants.nu_H;
}

HydrogenModel make_hydrogen_model(const ConstantsTable& constants, int n,
                                  std::optional<double> R_p_m,
                                  std::optional<double> R_H_m) {
  if (n < 1)
    throw DomainError("principal quantum number must be >= 1, got " +
                      std::to_string(n));
  HydrogenModel model;
  model.n = n;
  model.nu_H = constants.nu_H;
  model.R_H = R_H_m.value_or(default_hydrogen_radius(constants));
  model.R_p = R_p_m.value_or(proton_radius_from_density_profile());
  model.constants = constants;
  if (!(model.R_p > 0.0))
    throw DomainError("proton radius must be positive");
  if (!(model.R_p < model.R_H / 100.0))
    throw DomainError(
        "the model requires R_p << R_H (enforced as R_p < R_H/100); got "
        "R_p=" + format_double(model.R_p) + ", R_H=" +
        format_double(model.R_H));
  return model;
}

double orbital_speed(const HydrogenModel& model, int n) {
  if (n < 1)
    throw DomainError("principal quantum number must be >= 1, got " +
                      std::to_string(n));
  return model.nu_H * model.R_H / n;
}

double density_amplitude(const HydrogenModel& model) {
  return model.constants.M_e / (2.0 * kPi * model.R_H);
}

double momentum_density(const HydrogenModel& model, double r, double t) {
  if (!(r > 0.0))
    throw DomainError("momentum density needs r > 0, got " + format_double(r));
  return density_amplitude(model) * orbital_speed(model, model.n) /
         (r * r) * std::cos(model.omega() * t);
}

double electron_field(const HydrogenModel& model, double r, double t) {
  if (!(r > 0.0))
    throw DomainError("electron field needs r > 0, got " + format_double(r));
  return -density_amplitude(model) * orbital_speed(model, model.n) /
         (r * r) * model.omega() * std::sin(model.omega() * t);
}

double proton_field(const HydrogenModel& model, double r, double t) {
  if (!(r > 0.0))
    throw DomainError("proton field needs r > 0, got " + format_double(r));
  const double x = oscillation_amplitude(model, model.n);
  return model.constants.M_p * model.omega() * model.omega() * x / (r * r) *
         std::sin(model.omega() * t);
}

double oscillation_amplitude(const HydrogenModel& model, int n) {
  if (n < 1)
    throw DomainError("principal quantum number must be >= 1, got " +
                      std::to_string(n));
  return model.constants.M_e /
         ((2.0 * kPi) * (2.0 * kPi) * model.constants.M_p * n);
}

EnergyDensities energy_densities(const HydrogenModel& model, double r,
                                 double t) {
  if (!(r > 0.0))
    throw DomainError("energy density needs r > 0, got " + format_double(r));
  // k_n = 2 pi n / R_H: n wave periods across the atomic radius. The sum of
  // the two components is independent of this choice.
  const double k = 2.0 * kPi * model.n / model.R_H;
  const double u = orbital_speed(model, model.n);
  const double shell = density_amplitude(model) * u * u / (r * r);
  const double ct = std::cos(model.omega() * t);
  const double sk = std::sin(k * r);
  const double ck = std::cos(k * r);
  return {shell * sk * sk * ct * ct, shell * ck * ck * ct * ct};
}

ElectronEnergyResult electron_energy(const HydrogenModel& model,
                                     const QuadratureOptions& opts) {
  ElectronEnergyResult result;
  const double u = orbital_speed(model, model.n);
  const double rho0 = density_amplitude(model);
  const double M_e = model.constants.M_e;

  // The shell integral of the two densities is
  //   <cos^2> * 4 pi rho0 u^2 R_H = (1/2) * 2 M_e u^2 = M_e u^2,
  // and kappa halves it to the contracted (1/2) M_e u^2.
  result.kappa = 0.5;
  result.W_el = result.kappa * M_e * u * u;

  // Quadrature route in xi = r/R_H: the r^-2 of the densities cancels the
  // shell area, leaving sin^2/cos^2 of (2 pi n xi).
  const double k_xi = 2.0 * kPi * model.n;
  const IntegrationOptions iopts{opts.abs_tol, opts.rel_tol};
  const double kinetic_integral =
      integrate([k_xi](double xi) {
        const double s = std::sin(k_xi * xi);
        return s * s;
      }, 0.0, 1.0, iopts).value;
  const double field_integral =
      integrate([k_xi](double xi) {
        const double c = std::cos(k_xi * xi);
        return c * c;
      }, 0.0, 1.0, iopts).value;
  const double time_avg = time_average_cos2(opts);
  result.W_el_quadrature = result.kappa * time_avg * 4.0 * kPi * rho0 * u * u *
                           model.R_H * (kinetic_integral + field_integral);

  if (std::abs(result.W_el_quadrature / result.W_el - 1.0) > 1e-6)
    throw NumericalError(
        "electron energy quadrature disagrees with the closed form: " +
        format_double(result.W_el_quadrature) + " vs " +
        format_double(result.W_el));

  result.W_free = model.constants.hbar * model.omega();
  result.delta_W = result.W_free - result.W_el;
  return result;
}

RadiationEnergyResult radiation_energy_for_amplitude(
    const HydrogenModel& model, double x, const QuadratureOptions& opts) {
  if (!(model.R_p < model.R_H / 100.0))
    throw DomainError("radiation integral requires R_p < R_H/100");
  const double eta = eta_coupling(model).magnitude();
  const double omega = model.omega();
  const double M_p = model.constants.M_p;
  const double prefactor = M_p * M_p * omega * omega * omega * omega * x * x;

  RadiationEnergyResult result;
  result.W_rad_closed_form =
      prefactor / (4.0 * eta) * (1.0 / model.R_p - 1.0 / model.R_H);

  // (1/tau) int dt int 4 pi r^2 dr (E^2 / (8 pi eta)); the radial part is
  // int_{R_p}^{R_H} dr/r^2, integrated in xi = log(r/R_p) where the
  // integrand exp(-xi)/R_p spans five decades at O(1) scale.
  const double xi_max = std::log(model.R_H / model.R_p);
  const double radial_integral =
      integrate([](double xi) { return std::exp(-xi); }, 0.0, xi_max,
                {opts.abs_tol, opts.rel_tol})
          .value / model.R_p;
  const double time_avg = time_average_sin2(opts);
  result.W_rad = prefactor / (2.0 * eta) * time_avg * radial_integral;
  return result;
}

RadiationEnergyResult radiation_energy(const HydrogenModel& model,
                                       const QuadratureOptions& opts) {
  return radiation_energy_for_amplitude(
      model, oscillation_amplitude(model, model.n), opts);
}

EnergyBudget energy_budget(const HydrogenModel& model,
                           const QuadratureOptions& opts) {
  const ElectronEnergyResult el = electron_energy(model, opts);
  const RadiationEnergyResult rad = radiation_energy(model, opts);
  return {el.W_el, el.W_free, el.delta_W, rad.W_rad};
}

EtaCoupling eta_coupling(const HydrogenModel& model) {
  if (!(model.R_p > 0.0))
    throw DomainError("eta needs a positive proton radius, got " +
                      format_double(model.R_p));
  const double M_e = model.constants.M_e;
  const double nu = model.nu_H;
  const double value =
      M_e * M_e * nu * nu * nu / (2.0 * model.constants.h * model.R_p);
  return EtaCoupling(Quantity{value, dims::eta_natural()});
}

HbarCandidate hbar_candidate(const HydrogenModel& model, double R_p_m) {
  if (!(R_p_m > 0.0))
    throw DomainError("proton radius must be positive, got " +
                      format_double(R_p_m));
  HydrogenModel probe = model;
  probe.R_p = R_p_m;
  HbarCandidate candidate;
  candidate.value = 4.0 * kPi / eta_coupling(probe).magnitude();
  candidate.in_sanity_window = R_p_m >= 0.5e-15 && R_p_m <= 3.0e-15;
  return candidate;
}

double proton_radius_from_density_profile(double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0))
    throw DomainError("density threshold must lie in (0, 1), got " +
                      format_double(threshold));
  const auto profile = [](double r_fm) {
    return 1.0 / (1.0 + std::exp((r_fm - 1.07) / 0.55));
  };
  double lo = 0.0, hi = 5.0;  // profile(0) ~ 0.875 > any threshold < 1 > profile(5)
  if (profile(lo) < threshold)
    throw DomainError("threshold " + format_double(threshold) +
                      " is above the profile value at r=0");
  while (hi - lo > 1e-6) {
    const double mid = 0.5 * (lo + hi);
    (profile(mid) > threshold ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi) * 1e-15;
}

ProtonOscillation proton_oscillation(const HydrogenModel& model) {
  const double x = oscillation_amplitude(model, model.n);
  return ProtonOscillation(model.R_p, x * model.R_p / 3.0, model.omega(),
                           model.constants.M_p);
}

}  // namespace dyncharge
