#pragma once

#include "prehom/rational.hpp"

#include <vector>

namespace prehom::univariate {

/// Dense univariate polynomial, coefficients from degree 0 upwards, no trailing zeros.
using UPoly = std::vector<Rational>;

UPoly trim(UPoly p);
int degree(const UPoly& p);  // -1 for zero
Rational evaluate(const UPoly& p, const Rational& x);
UPoly derivative(const UPoly& p);
/// Quotient and remainder; divisor must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both are zero).
UPoly gcd(UPoly a, UPoly b);
UPoly squarefree_part(const UPoly& p);

struct RationalRoots {
  std::vector<Rational> roots;  // ascending
  bool splits;                  // every root of p is rational
};

/// Rational roots of a squarefree polynomial of positive degree. Real roots are
/// isolated with a Sturm sequence to width below 1/(2L), L the leading coefficient
/// of the primitive integer multiple, and the unique candidate k/L checked exactly.
RationalRoots rational_roots(const UPoly& squarefree);

}  // namespace prehom::univariate
