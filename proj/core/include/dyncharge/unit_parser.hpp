#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dyncharge/quantity.hpp"

namespace dyncharge {

// Parses a unit expression into a Quantity: the dimension of the expression
// plus the product of the scale factors of scaled tokens (fm, nm, eV).
//
// Grammar:
//   EXPR := TERM (("·" | "*" | whitespace) TERM)* ("/" TERM)*
//   TERM := UNIT ["^" SIGNED_RATIONAL]
//   UNIT ∈ { m, kg, s, A, N, J, W, C, Hz, eV, fm, nm, 1 }
//
// Derived units expand to base exponents (N = kg m s^-2, J = N m, W = J/s,
// Hz = s^-1); C parses as A s and A stays a base unit until natural_reduce.
// Parenthesized groups are not part of the grammar and raise a ParseError.
Quantity parse_unit_expr(std::string_view text);

// Names of all accepted unit tokens, for error messages and docs.
const std::vector<std::string>& unit_vocabulary();

// Per-term outcome of a dimensional consistency check. Terms are compared
// after natural reduction of both sides.
struct TermCheck {
  Dimension reduced;
  bool matches_lhs = false;
};

struct ConsistencyReport {
  Dimension lhs_reduced;
  std::vector<TermCheck> terms;
  bool consistent = false;
};

// Marks each right-hand-side term equal/unequal to the left-hand side;
// consistent iff all are equal. Inconsistency is a report outcome, not an
// error. Requires at least one term.
ConsistencyReport check_equation_dims(const Dimension& lhs,
                                      const std::vector<Dimension>& rhs_terms);

// The electromagnetic quantities of the natural system with their unit
// expressions (each parseable by parse_unit_expr). The permeability row is
// stored pre-expanded because the grammar has no parenthesized groups.
struct NaturalUnitRow {
  std::string quantity;
  std::string symbol;
  std::string units_expr;
};

const std::vector<NaturalUnitRow>& natural_unit_table();

}  // namespace dyncharge
