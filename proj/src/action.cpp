#include "prehom/action.hpp"

#include "prehom/presentation.hpp"

#include <algorithm>
#include <stdexcept>

namespace prehom {

Variables action_variables(std::size_t r, std::size_t s, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= r; ++i) names.push_back("l" + std::to_string(i));
  for (std::size_t i = 1; i <= s; ++i) names.push_back("a" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make_variables(std::move(names));
}

PolynomialAction make_action(std::size_t r, std::size_t s, std::size_t n,
                             const std::vector<std::string>& components, std::string name) {
  if (components.size() != n)
    throw std::invalid_argument("expected " + std::to_string(n) + " components, got " +
                                std::to_string(components.size()));
  PolynomialAction act{r, s, n, action_variables(r, s, n), {}, std::move(name)};
  for (const auto& c : components) act.components.push_back(parse_polynomial(c, act.variables));
  return act;
}

namespace {

Polynomial var(const Variables& vars, std::size_t i) { return Polynomial::variable(vars, i); }

}  // namespace

bool verify_action(const PolynomialAction& act) {
  const std::size_t r = act.r, s = act.s, n = act.n;
  const auto& names = *act.variables;

  std::map<std::string, Polynomial> identity;
  for (std::size_t i = 0; i < r; ++i) identity.emplace(names[i], Polynomial(act.variables, Rational(1)));
  for (std::size_t j = 0; j < s; ++j) identity.emplace(names[r + j], Polynomial(act.variables));
  for (std::size_t k = 0; k < n; ++k) identity.emplace(names[r + s + k], var(act.variables, r + s + k));
  for (std::size_t k = 0; k < n; ++k)
    if (substitute(act.components[k], identity, act.variables) != var(act.variables, r + s + k)) return false;

  // Ring with l, a (first element), m, b (second element), x.
  std::vector<std::string> wide(names.begin(), names.begin() + static_cast<long>(r + s));
  for (std::size_t i = 1; i <= r; ++i) wide.push_back("m" + std::to_string(i));
  for (std::size_t j = 1; j <= s; ++j) wide.push_back("b" + std::to_string(j));
  wide.insert(wide.end(), names.begin() + static_cast<long>(r + s), names.end());
  Variables big = make_variables(wide);
  const std::size_t x0 = 2 * (r + s);

  std::map<std::string, Polynomial> inner, product;
  for (std::size_t i = 0; i < r; ++i) {
    inner.emplace(names[i], var(big, r + s + i));
    product.emplace(names[i], var(big, i) * var(big, r + s + i));
  }
  for (std::size_t j = 0; j < s; ++j) {
    inner.emplace(names[r + j], var(big, 2 * r + s + j));
    product.emplace(names[r + j], var(big, r + j) + var(big, 2 * r + s + j));
  }
  for (std::size_t k = 0; k < n; ++k) {
    inner.emplace(names[r + s + k], var(big, x0 + k));
    product.emplace(names[r + s + k], var(big, x0 + k));
  }
  std::map<std::string, Polynomial> outer;
  for (std::size_t i = 0; i < r + s; ++i) outer.emplace(names[i], var(big, i));
  for (std::size_t k = 0; k < n; ++k)
    outer.emplace(names[r + s + k], substitute(act.components[k], inner, big));
  for (std::size_t k = 0; k < n; ++k)
    if (substitute(act.components[k], outer, big) != substitute(act.components[k], product, big)) return false;
  return true;
}

bool is_linear(const PolynomialAction& act) {
  const std::size_t first_x = act.r + act.s;
  for (const auto& c : act.components) {
    if (c.is_zero()) continue;
    for (const auto& [m, coeff] : c.terms()) {
      unsigned xdeg = 0;
      for (std::size_t k = first_x; k < m.size(); ++k) xdeg += m[k];
      if (xdeg != 1) return false;
    }
  }
  return true;
}

std::string to_string(FixedPoint f) {
  switch (f) {
    case FixedPoint::yes: return "yes";
    case FixedPoint::no: return "no";
    default: return "unknown";
  }
}

FixedPoint has_fixed_point(const PolynomialAction& act) {
  const std::size_t first_x = act.r + act.s, n = act.n;
  // Equations in x: one per (component, parameter monomial); row = coefficients of x, then constant.
  std::map<std::pair<std::size_t, Monomial>, Vector> equations;
  for (std::size_t k = 0; k < n; ++k) {
    Polynomial diff = act.components[k] - var(act.variables, first_x + k);
    for (const auto& [m, c] : diff.terms()) {
      Monomial params(std::vector<unsigned>(m.exponents().begin(), m.exponents().begin() + static_cast<long>(first_x)));
      unsigned xdeg = 0;
      std::size_t which = n;
      for (std::size_t i = 0; i < n; ++i)
        if (m[first_x + i]) {
          xdeg += m[first_x + i];
          which = i;
        }
      if (xdeg > 1) return FixedPoint::unknown;
      auto [it, inserted] = equations.try_emplace({k, params}, zero_vector(n + 1));
      it->second[xdeg == 0 ? n : which] += c;
    }
  }
  if (n == 0) return FixedPoint::yes;
  std::vector<Vector> rows;
  Vector rhs;
  for (const auto& [key, row] : equations) {
    rows.emplace_back(row.begin(), row.begin() + static_cast<long>(n));
    rhs.push_back(-row[n]);
  }
  if (rows.empty()) return FixedPoint::yes;
  return solve(Matrix::from_rows(rows), rhs) ? FixedPoint::yes : FixedPoint::no;
}

std::size_t orbit_rank(const PolynomialAction& act, const Vector& v) {
  if (v.size() != act.n) throw std::invalid_argument("point has the wrong length");
  Vector point = zero_vector(act.variables->size());
  for (std::size_t i = 0; i < act.r; ++i) point[i] = 1;
  std::copy(v.begin(), v.end(), point.begin() + static_cast<long>(act.r + act.s));
  std::vector<Vector> columns;
  for (std::size_t p = 0; p < act.param_count(); ++p) {
    Vector col;
    for (const auto& c : act.components) col.push_back(c.derivative(p).evaluate(point));
    columns.push_back(std::move(col));
  }
  return span_basis(columns, act.n).vectors.size();
}

Vector apply_action(const PolynomialAction& act, const Vector& params, const Vector& v) {
  if (params.size() != act.param_count() || v.size() != act.n)
    throw std::invalid_argument("parameter or point has the wrong length");
  Vector point = params;
  point.insert(point.end(), v.begin(), v.end());
  Vector out;
  for (const auto& c : act.components) out.push_back(c.evaluate(point));
  return out;
}

PolynomialAction translations(std::size_t n) {
  std::vector<std::string> comps;
  for (std::size_t i = 1; i <= n; ++i) comps.push_back("x" + std::to_string(i) + "+a" + std::to_string(i));
  return make_action(0, n, n, comps, "translations");
}

PolynomialAction hirzebruch(unsigned d) {
  const std::string ld = d == 0 ? "" : "l1^" + std::to_string(d) + "*";
  const std::string xd = d == 0 ? "" : "x1^" + std::to_string(d) + "*";
  return make_action(2, 2, 4,
                     {"l1*x1", "l2*x2", "l1*x3+l1*a1*x1", ld + "l2*x4+" + ld + "l2*a2*" + xd + "x2"},
                     "hirzebruch");
}

PolynomialAction polex(std::size_t n) {
  if (n == 0) throw std::invalid_argument("polex needs n >= 1");
  std::vector<std::string> comps;
  for (std::size_t i = 0; i < n; ++i) {
    std::string c = "l1*x" + std::to_string(i + 1);
    for (std::size_t j = 0; j < n; ++j)
      c += "+l1*a" + std::to_string(i * n + j + 1) + "*x" + std::to_string(n + j + 1);
    comps.push_back(c);
  }
  for (std::size_t i = 0; i < n; ++i) comps.push_back("l1*x" + std::to_string(n + i + 1));
  return make_action(1, n * n, 2 * n, comps, "polex");
}

PolynomialAction scalar(std::size_t n) {
  std::vector<std::string> comps;
  for (std::size_t i = 1; i <= n; ++i) comps.push_back("l1*x" + std::to_string(i));
  return make_action(1, 0, n, comps, "scalar");
}

PolynomialAction from_rep(const ParamMatrixRep& rep, std::string name) {
  const std::size_t r = rep.torus_params.size(), s = rep.additive_params.size(), n = rep.n;
  PolynomialAction act{r, s, n, action_variables(r, s, n), {}, std::move(name)};
  std::map<std::string, Polynomial> embed;
  for (std::size_t i = 0; i < r + s; ++i) embed.emplace((*rep.variables)[i], var(act.variables, i));
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial c(act.variables);
    for (std::size_t j = 0; j < n; ++j)
      if (!rep.entries(i, j).is_zero())
        c += substitute(rep.entries(i, j), embed, act.variables) * var(act.variables, r + s + j);
    act.components.push_back(std::move(c));
  }
  return act;
}

PolynomialAction table_rep(int k) {
  return from_rep(matrix_rep(from_quotient(table_entry(k).presentation)), "table_rep");
}

PolynomialAction builtin(const std::string& name, const std::map<std::string, long>& params) {
  auto get = [&](const std::string& key, long fallback, long lo, long hi) {
    auto it = params.find(key);
    long v = it == params.end() ? fallback : it->second;
    if (v < lo || v > hi)
      throw std::invalid_argument("parameter " + key + "=" + std::to_string(v) + " out of range [" +
                                  std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return v;
  };
  for (const auto& [key, value] : params)
    if (key != "n" && key != "d" && key != "k") throw std::invalid_argument("unknown parameter '" + key + "'");
  if (name == "translations") return translations(static_cast<std::size_t>(get("n", 2, 0, 64)));
  if (name == "hirzebruch") return hirzebruch(static_cast<unsigned>(get("d", 1, 0, 64)));
  if (name == "polex") return polex(static_cast<std::size_t>(get("n", 2, 1, 8)));
  if (name == "scalar") return scalar(static_cast<std::size_t>(get("n", 2, 0, 64)));
  if (name == "table_rep") return table_rep(static_cast<int>(get("k", 1, 1, 42)));
  throw std::invalid_argument("unknown action '" + name + "'");
}

MatrixGroupInput linear_lie_algebra(const PolynomialAction& act) {
  if (!is_linear(act)) throw std::invalid_argument("action is not linear");
  Vector identity = zero_vector(act.variables->size());
  for (std::size_t i = 0; i < act.r; ++i) identity[i] = 1;
  MatrixGroupInput g;
  g.n = act.n;
  const std::size_t first_x = act.r + act.s;
  for (std::size_t p = 0; p < act.param_count(); ++p) {
    Matrix m(act.n, act.n);
    for (std::size_t i = 0; i < act.n; ++i) {
      Polynomial d = act.components[i].derivative(p);
      for (std::size_t j = 0; j < act.n; ++j) m(i, j) = d.derivative(first_x + j).evaluate(identity);
    }
    g.lie_basis.push_back(std::move(m));
  }
  return g;
}

ActionReport analyze(const PolynomialAction& act, std::uint64_t seed) {
  ActionReport report;
  report.axioms_ok = verify_action(act);
  report.linear = is_linear(act);
  report.fixed_point = has_fixed_point(act);
  const std::size_t full = std::min(act.n, act.param_count());
  for (std::size_t attempt = 0; attempt < 5; ++attempt) {
    Vector v = generic_point(act.n, seed, attempt);
    std::size_t rank = orbit_rank(act, v);
    if (attempt == 0 || rank > report.orbit_rank_at_witness) {
      report.orbit_rank_at_witness = rank;
      report.witness = v;
    }
    if (rank == full) break;
  }
  return report;
}

}  // namespace prehom
