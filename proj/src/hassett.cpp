#include "prehom/hassett.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace prehom {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const Variables& vars)
    : rows_(rows), cols_(cols), vars_(vars), data_(rows * cols, Polynomial(vars)) {}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  PolyMatrix c(a.rows_, b.cols_, a.vars_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Polynomial& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
    }
  return c;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<Polynomial> multiply_symbolic(const FiniteAlgebra& alg, const std::vector<Polynomial>& a,
                                          const std::vector<Polynomial>& b) {
  const std::size_t n = alg.dim();
  const Variables& vars = a.front().variables();
  std::vector<Polynomial> r(n, Polynomial(vars));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j].is_zero()) continue;
      Polynomial ab = a[i] * b[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = alg.constant(i, j, k);
        if (c != 0) r[k] += ab * c;
      }
    }
  }
  return r;
}

namespace {

bool all_zero(const std::vector<Polynomial>& v) {
  return std::all_of(v.begin(), v.end(), [](const Polynomial& p) { return p.is_zero(); });
}

}  // namespace

Vector exp_element(const FiniteAlgebra& alg, const Vector& a) {
  Vector sum = alg.unit();
  Vector term = alg.unit();
  for (std::size_t k = 1; k <= alg.dim(); ++k) {
    term = scale(Rational(1) / static_cast<unsigned long>(k), alg.multiply(term, a));
    if (is_zero(term)) return sum;
    sum = add(sum, term);
  }
  throw NotNilpotent("exponential of a non-nilpotent element");
}

std::vector<Polynomial> exp_element(const FiniteAlgebra& alg, const std::vector<Polynomial>& a) {
  if (a.size() != alg.dim()) throw std::invalid_argument("element has wrong length");
  const Variables& vars = a.front().variables();
  std::vector<Polynomial> sum;
  for (const auto& u : alg.unit()) sum.emplace_back(vars, u);
  std::vector<Polynomial> term = sum;
  for (std::size_t k = 1; k <= alg.dim(); ++k) {
    term = multiply_symbolic(alg, term, a);
    for (auto& t : term) t *= Rational(1) / static_cast<unsigned long>(k);
    if (all_zero(term)) return sum;
    for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += term[i];
  }
  throw NotNilpotent("exponential of a non-nilpotent element");
}

Vector log_element(const FiniteAlgebra& alg, const Vector& u) {
  Vector m = sub(u, alg.unit());
  Vector sum = zero_vector(alg.dim());
  Vector power = alg.unit();
  for (std::size_t k = 1; k <= alg.dim(); ++k) {
    power = alg.multiply(power, m);
    if (is_zero(power)) return sum;
    Rational c = Rational(k % 2 == 1 ? 1 : -1) / static_cast<unsigned long>(k);
    sum = add(sum, scale(c, power));
  }
  throw NotNilpotent("logarithm of a non-unipotent element");
}

FiniteAlgebra rebase(const QuotientAlgebra& q, std::span<const std::string> monomials) {
  const std::size_t n = q.algebra.dim();
  if (monomials.size() != n)
    throw InvalidBasis("basis has " + std::to_string(monomials.size()) + " elements, quotient has dimension " +
                       std::to_string(n));
  std::vector<Vector> cols;
  std::vector<std::string> labels;
  for (const auto& text : monomials) {
    Polynomial p = parse_polynomial(text, q.presentation.variables);
    cols.push_back(q.coordinates(p));
    labels.push_back(p.to_string());
  }
  return q.algebra.change_basis(Matrix::from_columns(cols, n), std::move(labels));
}

namespace {

// Radical basis of a local summand: projections b - f(b)*1 of the basis vectors,
// f the residue form, kept greedily when independent.
std::vector<Vector> radical_basis(const FiniteAlgebra& s) {
  const std::size_t m = s.dim();
  std::vector<Vector> chosen;
  for (std::size_t a = 0; a < m; ++a) {
    Vector b = s.basis_vector(a);
    Matrix l = mult_operator(s, b);
    Rational tr = 0;
    for (std::size_t d = 0; d < m; ++d) tr += l(d, d);
    Vector p = sub(b, scale(tr / static_cast<unsigned long>(m), s.unit()));
    if (is_zero(p)) continue;
    std::vector<Vector> trial = chosen;
    trial.push_back(p);
    if (span_basis(trial, m).vectors.size() == trial.size()) chosen.push_back(std::move(p));
  }
  if (chosen.size() + 1 != m) throw NotLocal("summand is not local");
  return chosen;
}

}  // namespace

ParamMatrixRep matrix_rep(const FiniteAlgebra& alg, std::uint64_t seed) {
  auto dec = local_decomposition(alg, seed);
  const std::size_t n = alg.dim();
  const std::size_t r = dec.summands.size();

  std::vector<std::vector<Vector>> radicals;
  std::size_t s = 0;
  for (const auto& summand : dec.summands) {
    radicals.push_back(radical_basis(summand));
    s += radicals.back().size();
  }

  ParamMatrixRep rep;
  rep.n = n;
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= r; ++i) rep.torus_params.push_back("l" + std::to_string(i));
  for (std::size_t j = 1; j <= s; ++j) rep.additive_params.push_back("a" + std::to_string(j));
  names = rep.torus_params;
  names.insert(names.end(), rep.additive_params.begin(), rep.additive_params.end());
  rep.variables = make_variables(names);
  rep.entries = PolyMatrix(n, n, rep.variables);

  std::size_t offset = 0, alpha = 0;
  for (std::size_t i = 0; i < r; ++i) {
    const FiniteAlgebra& summand = dec.summands[i];
    const std::size_t m = summand.dim();
    std::vector<Polynomial> x(m, Polynomial(rep.variables));
    for (const auto& dir : radicals[i]) {
      Polynomial a = Polynomial::variable(rep.variables, r + alpha);
      for (std::size_t k = 0; k < m; ++k)
        if (dir[k] != 0) x[k] += a * dir[k];
      Vector global = zero_vector(n);
      std::copy(dir.begin(), dir.end(), global.begin() + static_cast<long>(offset));
      rep.additive_directions.push_back(std::move(global));
      ++alpha;
    }
    std::vector<Polynomial> e = exp_element(summand, x);
    Polynomial lambda = Polynomial::variable(rep.variables, i);
    std::vector<std::size_t> rows;
    for (std::size_t b = 0; b < m; ++b) {
      // column b: lambda * e * w_b
      for (std::size_t a = 0; a < m; ++a) {
        if (e[a].is_zero()) continue;
        for (std::size_t k = 0; k < m; ++k) {
          const Rational& c = summand.constant(a, b, k);
          if (c != 0) rep.entries(offset + k, offset + b) += e[a] * c;
        }
      }
      for (std::size_t k = 0; k < m; ++k) {
        auto& entry = rep.entries(offset + k, offset + b);
        if (!entry.is_zero()) entry *= lambda;
      }
      rows.push_back(offset + b);
    }
    rep.layout.push_back(std::move(rows));
    for (std::size_t a = 0; a < m; ++a) {
      rep.basis_labels.push_back(summand.labels()[a]);
      rep.basis.push_back(dec.summand_bases[i][a]);
    }
    offset += m;
  }
  return rep;
}

ParamMatrixRep matrix_rep(const QuotientAlgebra& q, std::span<const std::string> basis_override,
                          std::uint64_t seed) {
  return matrix_rep(rebase(q, basis_override), seed);
}

Matrix evaluate_rep(const ParamMatrixRep& rep, const std::map<std::string, Rational>& values) {
  const auto& names = *rep.variables;
  Vector point;
  for (const auto& name : names) {
    auto it = values.find(name);
    if (it == values.end()) throw EvaluationError("no value for parameter '" + name + "'");
    point.push_back(it->second);
  }
  for (const auto& t : rep.torus_params)
    if (values.at(t) == 0) throw EvaluationError("torus parameter '" + t + "' must be nonzero");
  for (const auto& [name, v] : values)
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw EvaluationError("unknown parameter '" + name + "'");
  Matrix m(rep.n, rep.n);
  for (std::size_t i = 0; i < rep.n; ++i)
    for (std::size_t j = 0; j < rep.n; ++j) m(i, j) = rep.entries(i, j).evaluate(point);
  return m;
}

bool verify_homomorphism(const ParamMatrixRep& rep) {
  const std::size_t r = rep.torus_params.size(), s = rep.additive_params.size();
  std::vector<std::string> names = *rep.variables;
  for (std::size_t i = 1; i <= r; ++i) names.push_back("m" + std::to_string(i));
  for (std::size_t j = 1; j <= s; ++j) names.push_back("b" + std::to_string(j));
  Variables doubled = make_variables(names);

  std::map<std::string, Polynomial> first, second, product, identity;
  for (std::size_t i = 0; i < r; ++i) {
    Polynomial l = Polynomial::variable(doubled, i);
    Polynomial m = Polynomial::variable(doubled, r + s + i);
    first.emplace(rep.torus_params[i], l);
    second.emplace(rep.torus_params[i], m);
    product.emplace(rep.torus_params[i], l * m);
    identity.emplace(rep.torus_params[i], Polynomial(rep.variables, Rational(1)));
  }
  for (std::size_t j = 0; j < s; ++j) {
    Polynomial a = Polynomial::variable(doubled, r + j);
    Polynomial b = Polynomial::variable(doubled, 2 * r + s + j);
    first.emplace(rep.additive_params[j], a);
    second.emplace(rep.additive_params[j], b);
    product.emplace(rep.additive_params[j], a + b);
    identity.emplace(rep.additive_params[j], Polynomial(rep.variables));
  }

  const std::size_t n = rep.n;
  PolyMatrix g(n, n, doubled), h(n, n, doubled), gh(n, n, doubled);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Polynomial& e = rep.entries(i, j);
      if (substitute(e, identity, rep.variables) != Polynomial(rep.variables, Rational(i == j ? 1 : 0)))
        return false;
      g(i, j) = substitute(e, first, doubled);
      h(i, j) = substitute(e, second, doubled);
      gh(i, j) = substitute(e, product, doubled);
    }
  return g * h == gh;
}

namespace {

// Division-free Laplace expansion along rows, memoized on the remaining column set.
Polynomial expansion_determinant(const PolyMatrix& m, const std::vector<std::size_t>& idx) {
  const std::size_t k = idx.size();
  std::unordered_map<std::uint64_t, Polynomial> memo;
  std::function<Polynomial(std::size_t, std::uint64_t)> det = [&](std::size_t row,
                                                                   std::uint64_t cols) -> Polynomial {
    if (row == k) return Polynomial(m.variables(), Rational(1));
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    Polynomial sum(m.variables());
    int sign = 1;
    for (std::size_t c = 0; c < k; ++c) {
      if (!(cols & (std::uint64_t{1} << c))) continue;
      const Polynomial& entry = m(idx[row], idx[c]);
      if (!entry.is_zero()) {
        Polynomial minor = det(row + 1, cols & ~(std::uint64_t{1} << c));
        if (!minor.is_zero()) {
          Polynomial t = entry * minor;
          if (sign > 0)
            sum += t;
          else
            sum -= t;
        }
      }
      sign = -sign;
    }
    memo.emplace(cols, sum);
    return sum;
  };
  if (k > 63) throw std::invalid_argument("block too large for determinant expansion");
  return det(0, (std::uint64_t{1} << k) - 1);
}

}  // namespace

Polynomial det_rep(const ParamMatrixRep& rep) {
  Polynomial result(rep.variables, Rational(1));
  for (const auto& block : rep.layout) result *= expansion_determinant(rep.entries, block);
  return result;
}

std::vector<Matrix> lie_basis(const ParamMatrixRep& rep) {
  const std::size_t r = rep.torus_params.size();
  Vector identity = zero_vector(rep.variables->size());
  for (std::size_t i = 0; i < r; ++i) identity[i] = 1;
  std::vector<Matrix> out;
  for (std::size_t p = 0; p < rep.variables->size(); ++p) {
    Matrix m(rep.n, rep.n);
    for (std::size_t i = 0; i < rep.n; ++i)
      for (std::size_t j = 0; j < rep.n; ++j) m(i, j) = rep.entries(i, j).derivative(p).evaluate(identity);
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

std::string latex_symbol(const std::string& name, bool single_torus) {
  std::string digits = name.substr(1);
  auto sub = [&](const std::string& base) {
    return base + (digits.size() == 1 ? "_" + digits : "_{" + digits + "}");
  };
  if (name[0] == 'l') return single_torus ? "\\lambda" : sub("\\lambda");
  if (name[0] == 'a') return sub("\\alpha");
  return name;
}

std::string latex_monomial(const Monomial& m, const std::vector<std::string>& names, bool single_torus) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    out += latex_symbol(names[i], single_torus);
    if (m[i] > 1) out += m[i] < 10 ? "^" + std::to_string(m[i]) : "^{" + std::to_string(m[i]) + "}";
  }
  return out;
}

// c * m with integer c.
std::string latex_term(const Integer& c, const Monomial& m, const std::vector<std::string>& names,
                       bool single_torus) {
  if (m.is_one()) return c.get_str();
  std::string mono = latex_monomial(m, names, single_torus);
  if (c == 1) return mono;
  if (c == -1) return "-" + mono;
  return c.get_str() + mono;
}

void append_signed(std::string& out, const std::string& piece) {
  if (!out.empty() && piece.front() != '-') out += "+";
  out += piece;
}

std::string latex_sum(const Polynomial& p, bool single_torus) {
  auto terms = p.sorted_terms(TermOrder::degrevlex(p.nvars()));
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first.degree() < b.first.degree(); });
  const auto& names = *p.variables();
  std::string out;
  std::map<Integer, std::vector<std::pair<Monomial, Integer>>> fractions;
  for (const auto& [m, c] : terms) {
    if (c.get_den() == 1)
      append_signed(out, latex_term(c.get_num(), m, names, single_torus));
    else
      fractions[c.get_den()].emplace_back(m, c.get_num());
  }
  for (const auto& [den, group] : fractions) {
    std::string numerator;
    for (const auto& [m, num] : group) append_signed(numerator, latex_term(num, m, names, single_torus));
    append_signed(out, "\\frac{" + numerator + "}{" + den.get_str() + "}");
  }
  return out;
}

std::string latex_entry(const Polynomial& p, std::size_t torus_count) {
  if (p.is_zero()) return "0";
  const bool single = torus_count == 1;
  Monomial common(p.nvars());
  for (std::size_t t = 0; t < torus_count; ++t) {
    unsigned lowest = ~0u;
    for (const auto& [m, c] : p.terms()) lowest = std::min(lowest, m[t]);
    common[t] = lowest;
  }
  if (common.is_one()) return latex_sum(p, single);
  Polynomial rest(p.variables());
  for (const auto& [m, c] : p.terms()) rest.add_term(m / common, c);
  std::string prefix = latex_monomial(common, *p.variables(), single);
  if (rest == Polynomial(p.variables(), Rational(1))) return prefix;
  if (rest == Polynomial(p.variables(), Rational(-1))) return "-" + prefix;
  if (rest.size() == 1 && rest.terms().begin()->second == 1)
    return prefix + latex_monomial(rest.terms().begin()->first, *p.variables(), single);
  return prefix + "(" + latex_sum(rest, single) + ")";
}

}  // namespace

std::string to_latex(const ParamMatrixRep& rep) {
  std::string out = "\\begin{pmatrix}\n";
  for (std::size_t i = 0; i < rep.n; ++i) {
    for (std::size_t j = 0; j < rep.n; ++j) {
      if (j) out += " & ";
      out += latex_entry(rep.entries(i, j), rep.torus_params.size());
    }
    out += i + 1 < rep.n ? " \\\\\n" : "\n";
  }
  out += "\\end{pmatrix}";
  return out;
}

}  // namespace prehom
