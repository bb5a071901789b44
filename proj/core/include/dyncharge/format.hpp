#pragma once

#include <charconv>
#include <string>

namespace dyncharge {

// Shortest decimal representation that round-trips to the same double.
// Used everywhere a value is serialized so that reports are byte-stable
// and constants files reload bit-exactly.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace dyncharge
