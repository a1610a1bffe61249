#pragma once

#include "prehom/rational.hpp"

#include <compare>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace prehom {

/// Ordered, immutable list of variable names shared by the polynomials of one ring.
using Variables = std::shared_ptr<const std::vector<std::string>>;

Variables make_variables(std::vector<std::string> names);
bool same_variables(const Variables& a, const Variables& b);

/// Dense exponent vector, one slot per ring variable.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) {}

  std::size_t size() const { return exps_.size(); }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  unsigned& operator[](std::size_t i) { return exps_[i]; }
  const std::vector<unsigned>& exponents() const { return exps_; }

  unsigned degree() const;
  bool is_one() const;
  bool divides(const Monomial& other) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  /// Exact quotient; requires b.divides(a).
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool coprime(const Monomial& a, const Monomial& b);

  // Storage order only (plain lexicographic on exponents); term orders live in TermOrder.
  auto operator<=>(const Monomial&) const = default;

 private:
  std::vector<unsigned> exps_;
};

/// "1", "x1", "x1^2*x2".
std::string format_monomial(const Monomial& m, const std::vector<std::string>& names);

enum class OrderKind { degrevlex, lex };

/// Monomial order given by a kind and a variable precedence; precedence[0] is the
/// most significant variable.
class TermOrder {
 public:
  TermOrder(OrderKind kind, std::vector<std::size_t> precedence);
  static TermOrder degrevlex(std::size_t nvars);
  static TermOrder lex(std::size_t nvars);

  OrderKind kind() const { return kind_; }
  const std::vector<std::size_t>& precedence() const { return precedence_; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  bool operator==(const TermOrder&) const = default;

 private:
  OrderKind kind_;
  std::vector<std::size_t> precedence_;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Polynomial(Variables vars);
  Polynomial(Variables vars, const Rational& constant);

  static Polynomial variable(Variables vars, std::size_t index);
  static Polynomial variable(Variables vars, std::string_view name);
  static Polynomial term(Variables vars, Monomial m, const Rational& c = 1);

  const Variables& variables() const { return vars_; }
  std::size_t nvars() const { return vars_->size(); }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  unsigned total_degree() const;
  unsigned degree_in(std::size_t var) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  /// Equal iff same variable names and same terms.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t var) const;

  /// Re-express in a ring whose variable list contains every variable used here.
  Polynomial embed(const Variables& target) const;

  Rational evaluate(const Vector& point) const;

  /// Adds c*m in place; zero results are dropped.
  void add_term(const Monomial& m, const Rational& c);

  /// Terms in descending degrevlex order over the written variable order.
  std::string to_string() const;
  std::string to_string(const TermOrder& order) const;

  /// Terms sorted descending under the order.
  std::vector<std::pair<Monomial, Rational>> sorted_terms(const TermOrder& order) const;

 private:
  void require_same_ring(const Polynomial& other) const;

  Variables vars_;
  Terms terms_;
};

/// Maximal term under the order. Throws std::invalid_argument for the zero polynomial.
std::pair<Monomial, Rational> leading_term(const Polynomial& p, const TermOrder& order);

/// Ring homomorphism sending each variable named in the assignment to its image.
/// Every variable occurring in p must be assigned; all images share one ring,
/// which becomes the ring of the result.
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment);

/// Same, with an explicit target ring (needed when p is constant or the assignment is empty).
Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment,
                      const Variables& target);

}  // namespace prehom
