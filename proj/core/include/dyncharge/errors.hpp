#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dyncharge {

// Base class of every error the toolkit throws.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input. `position` is a character offset for unit
// expressions and a 1-based line number for constants files.
class ParseError : public Error {
public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

// Operands whose dimensions do not fit the operation.
class DimensionError : public Error {
public:
  using Error::Error;
};

// Argument value outside the operation's domain.
class DomainError : public Error {
public:
  using Error::Error;
};

// A numerical procedure failed to reach its tolerance or produced a
// non-finite result.
class NumericalError : public Error {
public:
  using Error::Error;
};

// Invalid discretization parameters.
class GridError : public Error {
public:
  using Error::Error;
};

// Boundary conditions that do not determine a unique solution.
class WellPosednessError : public Error {
public:
  using Error::Error;
};

}  // namespace dyncharge
