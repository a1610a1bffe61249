#include "prehom/groebner.hpp"

#include "prehom/errors.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace prehom {

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements.size());
  for (const auto& g : elements) out.push_back(leading_term(g, order).first);
  return out;
}

namespace {

Polynomial monic(const Polynomial& p, const TermOrder& order) {
  Rational lc = leading_term(p, order).second;
  return p * Rational(1 / lc);
}

// Reduces p against the list until no term is divisible by a leading monomial.
Polynomial reduce(Polynomial p, const std::vector<Polynomial>& basis,
                  const std::vector<Monomial>& leads, const TermOrder& order) {
  Polynomial remainder(p.variables());
  while (!p.is_zero()) {
    auto [m, c] = leading_term(p, order);
    bool divided = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      if (!leads[i].divides(m)) continue;
      // basis elements are monic
      p -= Polynomial::term(p.variables(), m / leads[i], c) * basis[i];
      divided = true;
      break;
    }
    if (!divided) {
      remainder.add_term(m, c);
      Polynomial lt = Polynomial::term(p.variables(), m, c);
      p -= lt;
    }
  }
  return remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Monomial& lf, const Polynomial& g,
                        const Monomial& lg) {
  Monomial l = lcm(lf, lg);
  const auto& vars = f.variables();
  return Polynomial::term(vars, l / lf) * f - Polynomial::term(vars, l / lg) * g;
}

}  // namespace

GroebnerBasis buchberger(const Variables& vars, std::span<const Polynomial> generators,
                         const TermOrder& order) {
  if (order.precedence().size() != vars->size())
    throw VariableMismatch("term order and ring have different variable counts");
  std::vector<Polynomial> basis;
  std::vector<Monomial> leads;
  for (const auto& g : generators) {
    if (!same_variables(g.variables(), vars))
      throw VariableMismatch("generator over a different variable set");
    if (g.is_zero()) continue;
    Polynomial r = reduce(g, basis, leads, order);
    if (r.is_zero()) continue;
    r = monic(r, order);
    leads.push_back(leading_term(r, order).first);
    basis.push_back(std::move(r));
  }

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };
  std::vector<Pair> pairs;
  for (std::size_t j = 0; j < basis.size(); ++j)
    for (std::size_t i = 0; i < j; ++i) pairs.push_back({i, j, lcm(leads[i], leads[j])});

  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      int c = order.compare(a.lcm, b.lcm);
      if (c != 0) return c < 0;
      return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    });
    Pair pair = *best;
    pairs.erase(best);
    if (coprime(leads[pair.i], leads[pair.j])) continue;
    Polynomial s = s_polynomial(basis[pair.i], leads[pair.i], basis[pair.j], leads[pair.j]);
    Polynomial r = reduce(std::move(s), basis, leads, order);
    if (r.is_zero()) continue;
    r = monic(r, order);
    Monomial lr = leading_term(r, order).first;
    std::size_t k = basis.size();
    basis.push_back(std::move(r));
    leads.push_back(lr);
    for (std::size_t i = 0; i < k; ++i) pairs.push_back({i, k, lcm(leads[i], lr)});
  }

  // Minimalize: drop elements whose leading monomial is divisible by another's.
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j || !leads[j].divides(leads[i])) continue;
      // equal leading monomials: keep the earliest
      redundant = leads[i] != leads[j] || j < i;
    }
    if (!redundant) keep.push_back(i);
  }
  std::vector<Polynomial> minimal;
  std::vector<Monomial> minimal_leads;
  for (std::size_t i : keep) {
    minimal.push_back(basis[i]);
    minimal_leads.push_back(leads[i]);
  }

  // Interreduce tails.
  std::vector<Polynomial> reduced;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Polynomial> others;
    std::vector<Monomial> other_leads;
    for (std::size_t j = 0; j < minimal.size(); ++j) {
      if (j == i) continue;
      others.push_back(minimal[j]);
      other_leads.push_back(minimal_leads[j]);
    }
    Polynomial tail = minimal[i] - Polynomial::term(vars, minimal_leads[i]);
    Polynomial r = Polynomial::term(vars, minimal_leads[i]) + reduce(tail, others, other_leads, order);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.less(leading_term(a, order).first, leading_term(b, order).first);
  });
  return GroebnerBasis{vars, order, std::move(reduced)};
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  if (!same_variables(p.variables(), gb.variables))
    throw VariableMismatch("normal form over a different variable set");
  return reduce(p, gb.elements, gb.leading_monomials(), gb.order);
}

QuotientBasis standard_monomials(const GroebnerBasis& gb) {
  const std::size_t n = gb.variables->size();
  auto leads = gb.leading_monomials();
  auto is_standard = [&](const Monomial& m) {
    return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
  };
  if (!is_standard(Monomial(n))) return QuotientBasis{};
  std::vector<unsigned> bound(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    for (const auto& m : leads) {
      if (m[v] > 0 && m.degree() == m[v]) {
        bound[v] = bound[v] == 0 ? m[v] : std::min(bound[v], m[v]);
      }
    }
    if (bound[v] == 0)
      throw InfiniteDimensional("no pure power of '" + (*gb.variables)[v] +
                                "' in the leading ideal; quotient is infinite-dimensional");
  }

  std::vector<Monomial> out;
  // Standard monomials are closed under division, so a breadth-first walk from 1 finds all.
  std::set<Monomial> seen{Monomial(n)};
  std::deque<Monomial> queue{Monomial(n)};
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    out.push_back(m);
    for (std::size_t v = 0; v < n; ++v) {
      Monomial next = m;
      next[v] += 1;
      if (next[v] >= bound[v] || seen.count(next) || !is_standard(next)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return gb.order.compare(a, b) > 0;
  });
  return QuotientBasis{std::move(out)};
}

}  // namespace prehom
