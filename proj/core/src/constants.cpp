#include "dyncharge/constants.hpp"

#include <cmath>
#include <cstdint>
#include <fstream>
#include <numbers>
#include <sstream>

#include "dyncharge/errors.hpp"
#include "dyncharge/format.hpp"

namespace dyncharge {

namespace {

struct KeyInfo {
  const char* name;
  double ConstantsTable::* member;
};

constexpr KeyInfo kKeys[] = {
    {"M_e", &ConstantsTable::M_e},     {"M_p", &ConstantsTable::M_p},
    {"h", &ConstantsTable::h},         {"hbar", &ConstantsTable::hbar},
    {"c", &ConstantsTable::c},         {"N_A", &ConstantsTable::N_A},
    {"eV", &ConstantsTable::eV},       {"nu_H", &ConstantsTable::nu_H},
    {"M_E", &ConstantsTable::M_E},     {"R_E", &ConstantsTable::R_E},
    {"R_O", &ConstantsTable::R_O},     {"tau_E", &ConstantsTable::tau_E},
};

std::string valid_keys_message() {
  std::string msg;
  for (const auto& k : kKeys) {
    if (!msg.empty()) msg += ", ";
    msg += k.name;
  }
  return msg;
}

void validate_positive(const ConstantsTable& t) {
  for (const auto& k : kKeys) {
    const double v = t.*(k.member);
    if (!(v > 0.0) || !std::isfinite(v))
      throw DomainError(std::string("constant '") + k.name +
                        "' must be strictly positive, got " +
                        format_double(v));
  }
}

void validate_hbar(const ConstantsTable& t) {
  const double expected = t.h / (2.0 * std::numbers::pi);
  if (std::abs(t.hbar / expected - 1.0) > 1e-12)
    throw DomainError("hbar must equal h/(2 pi) to 1e-12 relative; got hbar=" +
                      format_double(t.hbar) + " with h=" + format_double(t.h));
}

}  // namespace

const std::vector<std::string>& constants_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> v;
    for (const auto& k : kKeys) v.emplace_back(k.name);
    return v;
  }();
  return keys;
}

ConstantsTable default_constants() {
  ConstantsTable t{};
  t.M_e = 9.1093837015e-31;
  t.M_p = 1.67262192369e-27;
  t.h = 6.62607015e-34;
  t.hbar = t.h / (2.0 * std::numbers::pi);
  t.c = 2.99792458e8;
  t.N_A = 6.02214076e23;
  t.eV = 1.602176634e-19;
  t.nu_H = 6.57e15;
  t.M_E = 5.9722e24;
  t.R_E = 6.371e6;
  t.R_O = 1.495978707e11;
  t.tau_E = 3.1557e7;

  t.provenance = {
      {"M_e", "CODATA 2018"},   {"M_p", "CODATA 2018"},
      {"h", "CODATA 2018"},     {"hbar", "derived: h/(2 pi)"},
      {"c", "CODATA 2018"},     {"N_A", "CODATA 2018"},
      {"eV", "CODATA 2018"},    {"nu_H", "model default"},
      {"M_E", "IAU nominal"},   {"R_E", "IAU nominal"},
      {"R_O", "IAU 2012"},      {"tau_E", "IAU nominal"},
  };
  return t;
}

std::string ConstantsTable::serialize() const {
  std::ostringstream os;
  for (const auto& k : kKeys) {
    os << k.name << " = " << format_double(this->*(k.member));
    const auto it = provenance.find(k.name);
    if (it != provenance.end()) os << "  # " << it->second;
    os << '\n';
  }
  return os.str();
}

std::string ConstantsTable::fingerprint() const {
  // FNV-1a, 64 bit, over "key=value" pairs.
  std::uint64_t hash = 1469598103934665603ull;
  const auto mix = [&hash](std::string_view s) {
    for (const char ch : s) {
      hash ^= static_cast<unsigned char>(ch);
      hash *= 1099511628211ull;
    }
  };
  for (const auto& k : kKeys) {
    mix(k.name);
    mix("=");
    mix(format_double(this->*(k.member)));
    mix("\n");
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(hash));
  return std::string(buf);
}

ConstantsTable load_constants_from_text(const std::string& text,
                                        const std::string& source_name) {
  ConstantsTable table = default_constants();
  bool h_overridden = false, hbar_overridden = false;

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash_pos = line.find('#');
    if (hash_pos != std::string::npos) line.erase(hash_pos);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string body = line.substr(first, last - first + 1);

    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ParseError("constants file: line " + std::to_string(line_no) +
                           ": expected 'key = value'",
                       line_no);
    std::string key = body.substr(0, eq);
    std::string value_text = body.substr(eq + 1);
    const auto trim = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t");
      const auto e = s.find_last_not_of(" \t");
      s = (b == std::string::npos) ? std::string() : s.substr(b, e - b + 1);
    };
    trim(key);
    trim(value_text);
    if (key.empty() || value_text.empty())
      throw ParseError("constants file: line " + std::to_string(line_no) +
                           ": expected 'key = value'",
                       line_no);

    const KeyInfo* info = nullptr;
    for (const auto& k : kKeys) {
      if (key == k.name) {
        info = &k;
        break;
      }
    }
    if (info == nullptr)
      throw DomainError("constants file: line " + std::to_string(line_no) +
                        ": unknown key '" + key +
                        "'; valid keys are: " + valid_keys_message());

    std::size_t consumed = 0;
    double value = 0.0;
    try {
      value = std::stod(value_text, &consumed);
    } catch (const std::exception&) {
      throw ParseError("constants file: line " + std::to_string(line_no) +
                           ": cannot parse value '" + value_text + "'",
                       line_no);
    }
    if (consumed != value_text.size())
      throw ParseError("constants file: line " + std::to_string(line_no) +
                           ": trailing characters after value '" + value_text +
                           "'",
                       line_no);
    if (!(value > 0.0) || !std::isfinite(value))
      throw DomainError("constants file: line " + std::to_string(line_no) +
                        ": key '" + key + "' must be strictly positive, got " +
                        format_double(value));

    table.*(info->member) = value;
    table.provenance[key] = source_name;
    if (key == "h") h_overridden = true;
    if (key == "hbar") hbar_overridden = true;
  }

  if (h_overridden && !hbar_overridden) {
    table.hbar = table.h / (2.0 * std::numbers::pi);
    table.provenance["hbar"] = "derived: h/(2 pi)";
  }
  validate_positive(table);
  validate_hbar(table);
  return table;
}

ConstantsTable load_constants(const std::optional<std::string>& override_path) {
  if (!override_path) {
    ConstantsTable table = default_constants();
    validate_positive(table);
    validate_hbar(table);
    return table;
  }
  std::ifstream in(*override_path);
  if (!in)
    throw Error("cannot open constants file '" + *override_path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_constants_from_text(buffer.str(), *override_path);
}

}  // namespace dyncharge
