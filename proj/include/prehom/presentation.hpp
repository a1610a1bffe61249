#pragma once

#include "prehom/polynomial.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace prehom {

/// K[x1,...,xk]/(g1,...,gs). An empty generator list is the polynomial ring itself.
struct Presentation {
  Variables variables;
  std::vector<Polynomial> generators;

  friend bool operator==(const Presentation& a, const Presentation& b);
};

/// Parses the presentation grammar. Multiplication may be written with '*' or by
/// juxtaposition ("x1x2"); identifiers are one letter followed by digits. The bare
/// field "K" is accepted as the zero-variable ring. Throws ParseError.
Presentation parse_presentation(std::string_view text);

/// Parses a polynomial over the given variables with the same term grammar.
Polynomial parse_polynomial(std::string_view text, const Variables& vars);

/// Canonical text: starred multiplication, generators in the given order.
std::string format_presentation(const Presentation& p);

struct TableEntry {
  int index;
  int declared_dim;
  std::string source;  // row as printed, index shorthand expanded
  Presentation presentation;
};

/// The 42 local algebras of dimension at most 6, indexed 1..42.
const std::vector<TableEntry>& load_table();

/// Throws std::out_of_range unless 1 <= index <= 42.
const TableEntry& table_entry(int index);

}  // namespace prehom
