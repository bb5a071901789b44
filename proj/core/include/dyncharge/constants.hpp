#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dyncharge {

// Single authoritative table of physical constants. SI magnitudes; every
// entry carries a provenance string. Immutable after load and safe to share
// across concurrent readers.
struct ConstantsTable {
  double M_e;    // electron mass, kg
  double M_p;    // proton mass, kg
  double h;      // Planck constant, J s
  double hbar;   // h / (2 pi), J s
  double c;      // speed of light, m/s
  double N_A;    // Avogadro number, 1/mol
  double eV;     // electron volt, J
  double nu_H;   // hydrogen oscillation frequency, Hz
  double M_E;    // earth mass, kg
  double R_E;    // earth radius, m
  double R_O;    // earth orbital radius, m
  double tau_E;  // earth orbital period, s

  std::map<std::string, std::string> provenance;

  // "key = value  # provenance" lines; reloading reproduces every value
  // bit-exactly.
  std::string serialize() const;

  // FNV-1a hash of the key/value content, hex-encoded. Reports embed it so
  // two runs are comparable.
  std::string fingerprint() const;
};

// Keys accepted in override files, in canonical order.
const std::vector<std::string>& constants_keys();

// Built-in defaults (CODATA 2018 atomic constants, IAU nominal earth data).
ConstantsTable default_constants();

// Defaults merged with an optional override file of "key = value" lines
// ('#' starts a comment). Overridden entries get the file path as
// provenance. If h is overridden without hbar, hbar is re-derived as
// h/(2 pi); an explicit hbar override must stay consistent with h to 1e-12.
//
// Throws ParseError (malformed line, named by number), DomainError (unknown
// key, listing valid keys; non-positive value; inconsistent h/hbar pair).
ConstantsTable load_constants(
    const std::optional<std::string>& override_path = std::nullopt);

// Same merge/validation rules applied to in-memory text; `source_name`
// becomes the provenance of overridden entries.
ConstantsTable load_constants_from_text(const std::string& text,
                                        const std::string& source_name);

}  // namespace dyncharge
