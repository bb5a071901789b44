#include "report.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "dyncharge/errors.hpp"
#include "dyncharge/format.hpp"

namespace dyncharge::cli {

void RunReport::add_input(const std::string& key, const std::string& value) {
  inputs.emplace_back(key, value);
}

void RunReport::add_input(const std::string& key, double value) {
  inputs.emplace_back(key, format_double(value));
}

void RunReport::add(const std::string& key, double value,
                    const std::string& units, const std::string& provenance) {
  outputs.push_back({key, format_double(value), units, provenance});
}

void RunReport::add_text(const std::string& key, const std::string& value,
                         const std::string& provenance) {
  outputs.push_back({key, value, "1", provenance});
}

std::string render_text(const RunReport& report) {
  std::size_t width = 0;
  for (const auto& out : report.outputs)
    width = std::max(width, out.key.size());

  std::ostringstream os;
  os << "# " << report.command << "\n";
  for (const auto& [key, value] : report.inputs)
    os << "# input " << key << " = " << value << "\n";
  os << "# constants " << report.constants_fingerprint << "\n";
  for (const auto& out : report.outputs) {
    os << out.key << std::string(width - out.key.size(), ' ') << " = "
       << out.value;
    if (out.units != "1") os << " [" << out.units << "]";
    os << "  (" << out.provenance << ")\n";
  }
  return os.str();
}

std::string render_json(const RunReport& report) {
  nlohmann::ordered_json j;
  j["command"] = report.command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.inputs) inputs[key] = value;
  j["inputs"] = inputs;
  nlohmann::ordered_json outputs = nlohmann::ordered_json::object();
  for (const auto& out : report.outputs) {
    nlohmann::ordered_json entry;
    // Numeric strings go back to numbers so consumers get real JSON values.
    try {
      std::size_t used = 0;
      const double v = std::stod(out.value, &used);
      if (used == out.value.size())
        entry["value"] = v;
      else
        entry["value"] = out.value;
    } catch (const std::exception&) {
      entry["value"] = out.value;
    }
    entry["units"] = out.units;
    entry["provenance"] = out.provenance;
    outputs[out.key] = entry;
  }
  j["outputs"] = outputs;
  j["constants_fingerprint"] = report.constants_fingerprint;
  return j.dump(2) + "\n";
}

std::string render_csv(const Series& series) {
  std::ostringstream os;
  for (const auto& [key, value] : series.metadata)
    os << "# " << key << " = " << value << "\n";
  for (std::size_t c = 0; c < series.columns.size(); ++c) {
    if (c) os << ",";
    os << series.columns[c];
  }
  os << "\n";
  for (const auto& row : series.rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) os << ",";
      os << format_double(row[c]);
    }
    os << "\n";
  }
  return os.str();
}

int emit(const GlobalOptions& options, const RunReport& report,
         const Series* series, const std::string& default_format) {
  const std::string format =
      options.format.empty() ? default_format : options.format;
  std::string rendered;
  if (format == "text") {
    rendered = render_text(report);
  } else if (format == "json") {
    rendered = render_json(report);
  } else if (format == "csv") {
    if (series == nullptr)
      throw DomainError("--format csv is not available for this command");
    rendered = render_csv(*series);
  } else {
    throw DomainError("--format must be text, json or csv, got '" + format +
                      "'");
  }

  if (options.out_path) {
    std::ofstream out(*options.out_path, std::ios::binary);
    if (!out)
      throw Error("cannot open output file '" + *options.out_path + "'");
    out << rendered;
  } else {
    std::cout << rendered;
  }
  return 0;
}

ConstantsTable load_for(const GlobalOptions& options) {
  return load_constants(options.constants_path);
}

}  // namespace dyncharge::cli
