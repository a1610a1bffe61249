#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace prehom {

// GMP rationals are kept canonical by every arithmetic operator; values built
// from a numerator/denominator pair go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q" with q > 0. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

}  // namespace prehom
