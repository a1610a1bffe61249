#include "prehom/presentation.hpp"

#include <stdexcept>

namespace prehom {

namespace {

struct Row {
  int index;
  int dim;
  const char* text;
};

// Rows 8, 17, 38, 40, 41 and 42 are printed with index shorthand ("x_i^2",
// "x_ix_j", "x_ix_j, i!=j"); they are spelled out here.
constexpr Row kRows[] = {
    {1, 1, "K"},
    {2, 2, "K[x1]/(x1^2)"},
    {3, 3, "K[x1]/(x1^3)"},
    {4, 3, "K[x1,x2]/(x1^2, x2^2, x1x2)"},
    {5, 4, "K[x1]/(x1^4)"},
    {6, 4, "K[x1,x2]/(x1^2, x2^2)"},
    {7, 4, "K[x1,x2]/(x1^3, x1x2, x2^2)"},
    {8, 4, "K[x1,x2,x3]/(x1^2, x2^2, x3^2, x1x2, x1x3, x2x3)"},
    {9, 5, "K[x1]/(x1^5)"},
    {10, 5, "K[x1,x2]/(x1x2, x1^3-x2^2)"},
    {11, 5, "K[x1,x2]/(x1^3, x2^3, x1x2)"},
    {12, 5, "K[x1,x2]/(x1^4, x2^2, x1x2)"},
    {13, 5, "K[x1,x2]/(x1^3, x2^2, x1^2x2)"},
    {14, 5, "K[x1,x2,x3]/(x1x2, x1x3, x2x3, x1^2-x2^2, x1^2-x3^2)"},
    {15, 5, "K[x1,x2,x3]/(x1^2, x1x2, x1x3, x2x3, x2^2-x3^2)"},
    {16, 5, "K[x1,x2,x3]/(x1^3, x2^2, x3^2, x1x2, x1x3, x2x3)"},
    {17, 5,
     "K[x1,x2,x3,x4]/(x1^2, x2^2, x3^2, x4^2, x1x2, x1x3, x1x4, x2x3, x2x4, x3x4)"},
    {18, 6, "K[x1]/(x1^6)"},
    {19, 6, "K[x1,x2]/(x1x2, x1^4-x2^2)"},
    {20, 6, "K[x1,x2]/(x1x2, x1^3-x2^3)"},
    {21, 6, "K[x1,x2]/(x1^3, x2^2)"},
    {22, 6, "K[x1,x2]/(x1^5, x1x2, x2^2)"},
    {23, 6, "K[x1,x2]/(x1^4, x1x2, x2^3)"},
    {24, 6, "K[x1,x2]/(x1^3, x1^2x2, x1x2^2, x2^3)"},
    {25, 6, "K[x1,x2]/(x1^4, x1^2x2, x1^3-x2^2)"},
    {26, 6, "K[x1,x2]/(x1^4, x1^2x2, x2^2)"},
    {27, 6, "K[x1,x2,x3]/(x1^2, x2^2, x3^2, x1x2-x1x3)"},
    {28, 6, "K[x1,x2,x3]/(x2^2, x3^2, x1x2, x1^2-x2x3)"},
    {29, 6, "K[x1,x2,x3]/(x1^2, x2^2, x3^2, x2x3)"},
    {30, 6, "K[x1,x2,x3]/(x1^2, x2^2, x1x3, x2x3, x1x2-x3^3)"},
    {31, 6, "K[x1,x2,x3]/(x1^2-x3^3, x2^2, x1x2, x1x3, x2x3)"},
    {32, 6, "K[x1,x2,x3]/(x1^3, x2^2, x3^2, x1x2, x1x3)"},
    {33, 6, "K[x1,x2,x3]/(x1^2, x2^2, x3^2, x1x2-x1x3-x2x3)"},
    {34, 6, "K[x1,x2,x3]/(x1^3, x2^2, x1x3, x2x3, x1x2-x3^2)"},
    {35, 6, "K[x1,x2,x3]/(x1^4, x2^2, x3^2, x1x2, x1x3, x2x3)"},
    {36, 6, "K[x1,x2,x3]/(x1^3, x2^3, x3^2, x1x2, x1x3, x2x3)"},
    {37, 6, "K[x1,x2,x3]/(x1^3, x2^2, x3^2, x1^2x2, x1x3, x2x3)"},
    {38, 6,
     "K[x1,x2,x3,x4]/(x1^2, x2^2, x3^2, x4^2, x1x2, x1x3, x2x4, x3x4, x1x4-x2x3)"},
    {39, 6,
     "K[x1,x2,x3,x4]/(x1^2, x2^2, x4^2, x1x3, x1x4, x2x3, x2x4, x1x2-x3^2)"},
    {40, 6,
     "K[x1,x2,x3,x4]/(x1^2, x2^2, x3^2, x4^2, x1x3, x1x4, x2x3, x2x4, x3x4)"},
    {41, 6,
     "K[x1,x2,x3,x4]/(x1^3, x2^2, x3^2, x4^2, x1x2, x1x3, x1x4, x2x3, x2x4, x3x4)"},
    {42, 6,
     "K[x1,x2,x3,x4,x5]/(x1^2, x2^2, x3^2, x4^2, x5^2, x1x2, x1x3, x1x4, x1x5, x2x3, "
     "x2x4, x2x5, x3x4, x3x5, x4x5)"},
};

std::vector<TableEntry> build() {
  std::vector<TableEntry> out;
  out.reserve(std::size(kRows));
  for (const auto& row : kRows)
    out.push_back(TableEntry{row.index, row.dim, row.text, parse_presentation(row.text)});
  return out;
}

}  // namespace

const std::vector<TableEntry>& load_table() {
  static const std::vector<TableEntry> table = build();
  return table;
}

const TableEntry& table_entry(int index) {
  if (index < 1 || index > 42)
    throw std::out_of_range("table index " + std::to_string(index) + " outside 1..42");
  return load_table()[static_cast<std::size_t>(index - 1)];
}

}  // namespace prehom
