#pragma once

#include "prehom/polynomial.hpp"

#include <span>
#include <vector>

namespace prehom {

/// Reduced Groebner basis: monic elements sorted ascending by leading monomial.
struct GroebnerBasis {
  Variables variables;
  TermOrder order;
  std::vector<Polynomial> elements;

  std::vector<Monomial> leading_monomials() const;
};

/// Buchberger's algorithm with the coprime-leading-monomial criterion and the
/// normal selection strategy (smallest lcm first, ties by pair index). Zero
/// inputs are ignored.
GroebnerBasis buchberger(const Variables& vars, std::span<const Polynomial> generators,
                         const TermOrder& order);

/// Full reduction: no term of the result is divisible by a leading monomial.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

struct QuotientBasis {
  std::vector<Monomial> monomials;
};

/// Monomials outside the leading-term ideal, graded by degree and, inside a degree,
/// listed from largest to smallest in the basis order (so x1 comes before x2).
/// Throws InfiniteDimensional when some variable has no pure power among the
/// leading monomials.
QuotientBasis standard_monomials(const GroebnerBasis& gb);

}  // namespace prehom
