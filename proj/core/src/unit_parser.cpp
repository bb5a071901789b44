#include "dyncharge/unit_parser.hpp"

#include <cctype>
#include <map>

#include "dyncharge/errors.hpp"

namespace dyncharge {

namespace {

struct UnitDef {
  Dimension dim;
  double scale = 1.0;
};

const std::map<std::string, UnitDef, std::less<>>& unit_defs() {
  static const std::map<std::string, UnitDef, std::less<>> defs = {
      {"m", {dims::length()}},
      {"kg", {dims::mass()}},
      {"s", {dims::time()}},
      {"A", {dims::current()}},
      {"N", {dims::force()}},
      {"J", {dims::energy()}},
      {"W", {dims::power()}},
      {"C", {dim_mul(dims::current(), dims::time())}},
      {"Hz", {dims::frequency()}},
      {"eV", {dims::energy(), 1.602176634e-19}},
      {"fm", {dims::length(), 1e-15}},
      {"nm", {dims::length(), 1e-9}},
      {"1", {dims::dimensionless()}},
  };
  return defs;
}

class Lexer {
public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::size_t pos() const { return pos_; }
  bool at_end() const { return pos_ >= text_.size(); }

  // Consumes whitespace and returns true if any was skipped.
  bool skip_space() {
    bool any = false;
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      any = true;
    }
    return any;
  }

  char peek() const { return text_[pos_]; }

  bool consume(char c) {
    if (!at_end() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  // The interpunct '·' is the two-byte UTF-8 sequence 0xC2 0xB7.
  bool consume_interpunct() {
    if (pos_ + 1 < text_.size() &&
        static_cast<unsigned char>(text_[pos_]) == 0xC2 &&
        static_cast<unsigned char>(text_[pos_ + 1]) == 0xB7) {
      pos_ += 2;
      return true;
    }
    return false;
  }

  std::string_view take_unit_token() {
    const std::size_t start = pos_;
    if (!at_end() && text_[pos_] == '1') {
      ++pos_;
      return text_.substr(start, 1);
    }
    while (!at_end() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  long long take_integer(const char* what) {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start)
      throw ParseError(std::string("malformed exponent: expected ") + what +
                           " at position " + std::to_string(start),
                       start);
    long long v = 0;
    for (std::size_t i = start; i < pos_; ++i) v = v * 10 + (text_[i] - '0');
    return v;
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Rational parse_signed_rational(Lexer& lex) {
  const bool negative = lex.consume('-');
  const long long num = lex.take_integer("an integer numerator");
  long long den = 1;
  if (lex.consume('/')) den = lex.take_integer("a denominator");
  if (den == 0)
    throw ParseError("malformed exponent: zero denominator at position " +
                         std::to_string(lex.pos()),
                     lex.pos());
  return Rational(negative ? -num : num, den);
}

Quantity parse_term(Lexer& lex) {
  const std::size_t start = lex.pos();
  if (!lex.at_end() && (lex.peek() == '(' || lex.peek() == ')'))
    throw ParseError(
        "unsupported grammar: parenthesized groups are not part of the unit "
        "expression grammar (position " +
            std::to_string(start) + ")",
        start);
  const std::string_view token = lex.take_unit_token();
  if (token.empty())
    throw ParseError("expected a unit token at position " +
                         std::to_string(start),
                     start);
  const auto it = unit_defs().find(token);
  if (it == unit_defs().end())
    throw ParseError("unknown unit token '" + std::string(token) +
                         "' at position " + std::to_string(start),
                     start);
  Quantity q{it->second.scale, it->second.dim};
  if (lex.consume('^')) {
    const Rational p = parse_signed_rational(lex);
    q = pow(q, p);
  }
  return q;
}

}  // namespace

Quantity parse_unit_expr(std::string_view text) {
  Lexer lex(text);
  lex.skip_space();
  if (lex.at_end())
    throw ParseError("empty unit expression", 0);

  Quantity result = parse_term(lex);

  // Multiplicative section: terms separated by '·', '*' or whitespace.
  for (;;) {
    const bool had_space = lex.skip_space();
    if (lex.at_end()) return result;
    if (lex.consume_interpunct() || lex.consume('*')) {
      lex.skip_space();
      result = result * parse_term(lex);
      continue;
    }
    if (!lex.at_end() && lex.peek() == '/') break;
    if (had_space) {
      result = result * parse_term(lex);
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, lex.peek()) +
                         "' at position " + std::to_string(lex.pos()),
                     lex.pos());
  }

  // Division section: only further "/ TERM" groups may follow.
  while (lex.consume('/')) {
    lex.skip_space();
    result = result / parse_term(lex);
    lex.skip_space();
    if (lex.at_end()) return result;
    if (lex.peek() != '/')
      throw ParseError(
          "expected '/' or end of expression after a division term "
          "(position " +
              std::to_string(lex.pos()) + ")",
          lex.pos());
  }
  return result;
}

const std::vector<std::string>& unit_vocabulary() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, def] : unit_defs()) v.push_back(name);
    return v;
  }();
  return names;
}

ConsistencyReport check_equation_dims(
    const Dimension& lhs, const std::vector<Dimension>& rhs_terms) {
  if (rhs_terms.empty())
    throw DomainError("consistency check requires at least one rhs term");
  ConsistencyReport report;
  report.lhs_reduced = natural_reduce(lhs);
  report.consistent = true;
  for (const Dimension& term : rhs_terms) {
    TermCheck check;
    check.reduced = natural_reduce(term);
    check.matches_lhs = check.reduced == report.lhs_reduced;
    report.consistent = report.consistent && check.matches_lhs;
    report.terms.push_back(check);
  }
  return report;
}

const std::vector<NaturalUnitRow>& natural_unit_table() {
  static const std::vector<NaturalUnitRow> rows = {
      {"Charge", "C", "J m^-2"},
      {"Ampere", "A", "J m^-2 s^-1"},
      {"Current density", "j", "J m^-2 s^-1 m^-2"},
      {"Electric field", "E", "N m^-3"},
      {"Magnetic field", "B", "N s m^-1 m^-3"},
      {"Scalar potential", "phi", "J m^-3"},
      {"Dielectric constant", "epsilon", "N m^-4"},
      // (C m^-3)^-1 m^2 s^-2, expanded since the grammar has no groups.
      {"Magnetic permeability", "mu", "C^-1 m^5 s^-2"},
  };
  return rows;
}

}  // namespace dyncharge
