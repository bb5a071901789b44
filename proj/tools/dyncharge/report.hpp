#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dyncharge/constants.hpp"

namespace dyncharge::cli {

struct GlobalOptions {
  std::optional<std::string> constants_path;
  std::string format;  // "text", "json" or "csv"; empty = command default
  std::optional<std::string> out_path;
};

// Machine-readable record of one command run. Two runs with identical inputs
// and constants render byte-identically: all values go through the shortest
// round-trip double formatter and key order is fixed by insertion.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;

  struct Output {
    std::string key;
    std::string value;       // pre-formatted
    std::string units;       // parseable unit expression ("1" if pure)
    std::string provenance;  // "derived", "input", or a constants source
  };
  std::vector<Output> outputs;
  std::string constants_fingerprint;

  void add_input(const std::string& key, const std::string& value);
  void add_input(const std::string& key, double value);
  void add(const std::string& key, double value, const std::string& units,
           const std::string& provenance);
  void add_text(const std::string& key, const std::string& value,
                const std::string& provenance);
};

// Sampled series, rendered as CSV with '#' metadata lines.
struct Series {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

std::string render_text(const RunReport& report);
std::string render_json(const RunReport& report);
std::string render_csv(const Series& series);

// Renders in the selected format and writes to stdout or --out. `series`
// enables the csv format; commands without one reject --format csv.
// `default_format` is used when the user did not pass --format.
int emit(const GlobalOptions& options, const RunReport& report,
         const Series* series = nullptr,
         const std::string& default_format = "text");

ConstantsTable load_for(const GlobalOptions& options);

}  // namespace dyncharge::cli
