#include "prehom/polynomial.hpp"

#include "prehom/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace prehom {

Variables make_variables(std::vector<std::string> names) {
  std::set<std::string> seen;
  for (const auto& n : names)
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable '" + n + "'");
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_variables(const Variables& a, const Variables& b) {
  return a == b || *a == *b;
}

unsigned Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](unsigned e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] += b.exps_[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] -= b.exps_[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.exps_.size(); ++i)
    if (a.exps_[i] != 0 && b.exps_[i] != 0) return false;
  return true;
}

std::string format_monomial(const Monomial& m, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

TermOrder::TermOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
  std::vector<std::size_t> check = precedence_;
  std::sort(check.begin(), check.end());
  for (std::size_t i = 0; i < check.size(); ++i)
    if (check[i] != i) throw std::invalid_argument("term order precedence is not a permutation");
}

TermOrder TermOrder::degrevlex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return TermOrder(OrderKind::degrevlex, std::move(p));
}

TermOrder TermOrder::lex(std::size_t nvars) {
  std::vector<std::size_t> p(nvars);
  std::iota(p.begin(), p.end(), 0);
  return TermOrder(OrderKind::lex, std::move(p));
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (kind_ == OrderKind::degrevlex) {
    unsigned da = a.degree(), db = b.degree();
    if (da != db) return da < db ? -1 : 1;
    for (auto it = precedence_.rbegin(); it != precedence_.rend(); ++it) {
      if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
    }
    return 0;
  }
  for (std::size_t v : precedence_) {
    if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  }
  return 0;
}

Polynomial::Polynomial(Variables vars) : vars_(std::move(vars)) {
  if (!vars_) throw std::invalid_argument("polynomial without a variable set");
}

Polynomial::Polynomial(Variables vars, const Rational& constant) : Polynomial(std::move(vars)) {
  add_term(Monomial(nvars()), constant);
}

Polynomial Polynomial::variable(Variables vars, std::size_t index) {
  if (index >= vars->size()) throw std::out_of_range("variable index out of range");
  Monomial m(vars->size());
  m[index] = 1;
  return term(std::move(vars), std::move(m));
}

Polynomial Polynomial::variable(Variables vars, std::string_view name) {
  auto it = std::find(vars->begin(), vars->end(), name);
  if (it == vars->end()) throw VariableMismatch("unknown variable '" + std::string(name) + "'");
  std::size_t index = static_cast<std::size_t>(it - vars->begin());
  return variable(std::move(vars), index);
}

Polynomial Polynomial::term(Variables vars, Monomial m, const Rational& c) {
  Polynomial p(std::move(vars));
  if (m.size() != p.nvars()) throw std::invalid_argument("monomial length does not match ring");
  p.add_term(m, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::constant_term() const { return coefficient(Monomial(nvars())); }

unsigned Polynomial::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
  return d;
}

void Polynomial::require_same_ring(const Polynomial& other) const {
  if (!same_variables(vars_, other.vars_))
    throw VariableMismatch("polynomials over different variable sets");
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(other);
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_ring(b);
  Polynomial r(a.vars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_variables(a.vars_, b.vars_) && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(vars_, Rational(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(vars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial d = m;
    d[var] -= 1;
    r.add_term(d, c * m[var]);
  }
  return r;
}

Polynomial Polynomial::embed(const Variables& target) const {
  if (same_variables(vars_, target)) {
    Polynomial r = *this;
    r.vars_ = target;
    return r;
  }
  std::vector<std::size_t> slot(nvars(), target->size());
  for (std::size_t i = 0; i < nvars(); ++i) {
    auto it = std::find(target->begin(), target->end(), (*vars_)[i]);
    if (it != target->end()) slot[i] = static_cast<std::size_t>(it - target->begin());
  }
  Polynomial r(target);
  for (const auto& [m, c] : terms_) {
    Monomial t(target->size());
    for (std::size_t i = 0; i < nvars(); ++i) {
      if (m[i] == 0) continue;
      if (slot[i] == target->size())
        throw VariableMismatch("variable '" + (*vars_)[i] + "' missing from target ring");
      t[slot[i]] += m[i];
    }
    r.add_term(t, c);
  }
  return r;
}

Rational Polynomial::evaluate(const Vector& point) const {
  if (point.size() != nvars()) throw std::invalid_argument("evaluation point has wrong length");
  Rational sum = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned e = 0; e < m[i]; ++e) t *= point[i];
    sum += t;
  }
  return sum;
}

std::vector<std::pair<Monomial, Rational>> Polynomial::sorted_terms(const TermOrder& order) const {
  std::vector<std::pair<Monomial, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return order.compare(a.first, b.first) > 0; });
  return out;
}

std::string Polynomial::to_string(const TermOrder& order) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : sorted_terms(order)) {
    Rational mag = abs(c);
    if (c < 0)
      out += "-";
    else if (!first)
      out += "+";
    first = false;
    if (m.is_one()) {
      out += prehom::to_string(mag);
      continue;
    }
    if (mag != 1) out += prehom::to_string(mag) + "*";
    out += format_monomial(m, *vars_);
  }
  return out;
}

std::string Polynomial::to_string() const { return to_string(TermOrder::degrevlex(nvars())); }

std::pair<Monomial, Rational> leading_term(const Polynomial& p, const TermOrder& order) {
  if (p.is_zero()) throw std::invalid_argument("leading term of the zero polynomial");
  auto best = p.terms().begin();
  for (auto it = std::next(best); it != p.terms().end(); ++it)
    if (order.compare(it->first, best->first) > 0) best = it;
  return *best;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment,
                      const Variables& target) {
  for (const auto& [name, image] : assignment)
    if (!same_variables(image.variables(), target))
      throw VariableMismatch("substitution images live in different rings");

  const auto& names = *p.variables();
  std::vector<const Polynomial*> images(names.size(), nullptr);
  for (std::size_t i = 0; i < names.size(); ++i) {
    auto it = assignment.find(names[i]);
    if (it != assignment.end()) images[i] = &it->second;
  }
  // powers[i][e] = images[i]^e, filled lazily
  std::vector<std::vector<Polynomial>> powers(names.size());
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& cache = powers[i];
    if (cache.empty()) cache.emplace_back(target, Rational(1));
    while (cache.size() <= e) cache.push_back(cache.back() * *images[i]);
    return cache[e];
  };

  Polynomial result(target);
  for (const auto& [m, c] : p.terms()) {
    Polynomial t(target, c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!images[i]) throw VariableMismatch("no assignment for variable '" + names[i] + "'");
      t *= power(i, m[i]);
    }
    result += t;
  }
  return result;
}

Polynomial substitute(const Polynomial& p, const std::map<std::string, Polynomial>& assignment) {
  if (assignment.empty()) {
    if (!p.is_constant()) throw VariableMismatch("empty assignment for a non-constant polynomial");
    return p;
  }
  return substitute(p, assignment, assignment.begin()->second.variables());
}

}  // namespace prehom
