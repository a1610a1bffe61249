#include "prehom/algebra.hpp"

#include "prehom/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace prehom {

FiniteAlgebra::FiniteAlgebra(std::vector<std::string> labels, std::vector<Rational> constants,
                             Vector unit)
    : n_(labels.size()), labels_(std::move(labels)), c_(std::move(constants)), unit_(std::move(unit)) {
  if (n_ == 0) throw std::invalid_argument("algebra of dimension zero");
  if (c_.size() != n_ * n_ * n_) throw std::invalid_argument("structure tensor has wrong size");
  if (unit_.size() != n_) throw std::invalid_argument("unit vector has wrong length");
}

Vector FiniteAlgebra::multiply(const Vector& a, const Vector& b) const {
  Vector r = zero_vector(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n_; ++j) {
      if (b[j] == 0) continue;
      Rational ab = a[i] * b[j];
      for (std::size_t k = 0; k < n_; ++k) {
        const Rational& c = constant(i, j, k);
        if (c != 0) r[k] += ab * c;
      }
    }
  }
  return r;
}

Vector FiniteAlgebra::power(const Vector& a, unsigned k) const {
  Vector r = unit_;
  for (unsigned i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

FiniteAlgebra FiniteAlgebra::change_basis(const Matrix& change, std::vector<std::string> labels) const {
  if (change.rows() != n_ || change.cols() != n_ || labels.size() != n_)
    throw InvalidBasis("change of basis has wrong shape");
  auto inv = inverse(change);
  if (!inv) throw InvalidBasis("proposed basis vectors are linearly dependent");
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < n_; ++a) cols.push_back(change.column(a));
  std::vector<Rational> c(n_ * n_ * n_);
  for (std::size_t a = 0; a < n_; ++a)
    for (std::size_t b = 0; b < n_; ++b) {
      Vector coords = *inv * multiply(cols[a], cols[b]);
      for (std::size_t k = 0; k < n_; ++k) c[(a * n_ + b) * n_ + k] = coords[k];
    }
  return FiniteAlgebra(std::move(labels), std::move(c), *inv * unit_);
}

Vector QuotientAlgebra::coordinates(const Polynomial& p) const {
  Polynomial nf = normal_form(p.embed(presentation.variables), groebner);
  Vector v = zero_vector(basis.monomials.size());
  for (const auto& [m, c] : nf.terms()) {
    auto it = std::find(basis.monomials.begin(), basis.monomials.end(), m);
    if (it == basis.monomials.end())
      throw std::logic_error("normal form produced a non-standard monomial");
    v[static_cast<std::size_t>(it - basis.monomials.begin())] = c;
  }
  return v;
}

QuotientAlgebra quotient_algebra(const Presentation& p) {
  TermOrder order = TermOrder::degrevlex(p.variables->size());
  GroebnerBasis gb = buchberger(p.variables, p.generators, order);
  QuotientBasis qb = standard_monomials(gb);
  const std::size_t n = qb.monomials.size();
  if (n == 0) throw InvalidBasis("the ideal is the whole ring; the quotient is zero");

  std::map<Monomial, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) {
    index.emplace(qb.monomials[i], i);
    labels.push_back(format_monomial(qb.monomials[i], *p.variables));
  }
  std::vector<Rational> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Polynomial prod = Polynomial::term(p.variables, qb.monomials[i] * qb.monomials[j]);
      Polynomial nf = normal_form(prod, gb);
      for (const auto& [m, coef] : nf.terms()) {
        std::size_t k = index.at(m);
        c[(i * n + j) * n + k] = coef;
        c[(j * n + i) * n + k] = coef;
      }
    }
  Vector unit = zero_vector(n);
  unit[index.at(Monomial(p.variables->size()))] = 1;
  FiniteAlgebra alg(std::move(labels), std::move(c), std::move(unit));
  return QuotientAlgebra{p, std::move(gb), std::move(qb), std::move(alg)};
}

FiniteAlgebra from_quotient(const Presentation& p) { return quotient_algebra(p).algebra; }

bool AxiomReport::ok() const {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

AxiomReport verify_axioms(const FiniteAlgebra& alg) {
  const std::size_t n = alg.dim();
  AxiomReport report;

  AxiomReport::Check comm{"commutativity", true, ""};
  for (std::size_t i = 0; i < n && comm.ok; ++i)
    for (std::size_t j = i + 1; j < n && comm.ok; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (alg.constant(i, j, k) != alg.constant(j, i, k)) {
          comm.ok = false;
          comm.detail = alg.labels()[i] + "*" + alg.labels()[j] + " != " + alg.labels()[j] + "*" +
                        alg.labels()[i];
          break;
        }
  report.checks.push_back(comm);

  AxiomReport::Check assoc{"associativity", true, ""};
  std::vector<Vector> products(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      products[i * n + j] = alg.multiply(alg.basis_vector(i), alg.basis_vector(j));
  for (std::size_t i = 0; i < n && assoc.ok; ++i)
    for (std::size_t j = 0; j < n && assoc.ok; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector left = alg.multiply(products[i * n + j], alg.basis_vector(k));
        Vector right = alg.multiply(alg.basis_vector(i), products[j * n + k]);
        if (left != right) {
          assoc.ok = false;
          assoc.detail = "(" + alg.labels()[i] + "*" + alg.labels()[j] + ")*" + alg.labels()[k];
          break;
        }
      }
  report.checks.push_back(assoc);

  AxiomReport::Check unit{"unit", true, ""};
  for (std::size_t i = 0; i < n; ++i) {
    Vector b = alg.basis_vector(i);
    if (alg.multiply(alg.unit(), b) != b || alg.multiply(b, alg.unit()) != b) {
      unit.ok = false;
      unit.detail = "1*" + alg.labels()[i];
      break;
    }
  }
  report.checks.push_back(unit);
  return report;
}

Matrix mult_operator(const FiniteAlgebra& alg, const Vector& a) {
  const std::size_t n = alg.dim();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& c = alg.constant(i, j, k);
        if (c != 0) m(k, j) += a[i] * c;
      }
  }
  return m;
}

std::optional<Vector> try_inverse(const FiniteAlgebra& alg, const Vector& a) {
  Matrix l = mult_operator(alg, a);
  if (determinant(l) == 0) return std::nullopt;
  return solve(l, alg.unit());
}

bool is_nilpotent(const FiniteAlgebra& alg, const Vector& a) {
  Matrix l = mult_operator(alg, a);
  Matrix p = l;
  for (std::size_t k = 1; k < alg.dim(); ++k) p = p * l;
  return p.is_zero();
}

std::vector<Vector> nilradical(const FiniteAlgebra& alg) {
  AxiomReport report = verify_axioms(alg);
  if (!report.ok()) {
    for (const auto& c : report.checks)
      if (!c.ok) throw AxiomViolation(c.law + " fails: " + c.detail);
  }
  const std::size_t n = alg.dim();
  Vector traces = zero_vector(n);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t m = 0; m < n; ++m) traces[k] += alg.constant(k, m, m);
  Matrix form(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (alg.constant(i, j, k) != 0) form(i, j) += alg.constant(i, j, k) * traces[k];
  return span_basis(nullspace(form), n).vectors;
}

bool is_geometrically_local(const FiniteAlgebra& alg) {
  return nilradical(alg).size() + 1 == alg.dim();
}

FiniteAlgebra direct_sum(std::span<const FiniteAlgebra> parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum of no algebras");
  if (parts.size() == 1) return parts.front();
  std::size_t n = 0;
  for (const auto& p : parts) n += p.dim();
  std::vector<std::string> labels;
  std::vector<Rational> c(n * n * n);
  Vector unit;
  std::size_t offset = 0;
  for (std::size_t part = 0; part < parts.size(); ++part) {
    const auto& a = parts[part];
    for (const auto& l : a.labels()) labels.push_back("p" + std::to_string(part + 1) + ":" + l);
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t j = 0; j < a.dim(); ++j)
        for (std::size_t k = 0; k < a.dim(); ++k)
          c[((offset + i) * n + offset + j) * n + offset + k] = a.constant(i, j, k);
    unit.insert(unit.end(), a.unit().begin(), a.unit().end());
    offset += a.dim();
  }
  return FiniteAlgebra(std::move(labels), std::move(c), std::move(unit));
}

namespace {

std::vector<Vector> local_radical(const FiniteAlgebra& alg) {
  auto rad = nilradical(alg);
  if (rad.size() + 1 != alg.dim())
    throw NotLocal("algebra is not local: nilradical has codimension " +
                   std::to_string(alg.dim() - rad.size()));
  return rad;
}

// Basis of the span of all products u*w, u in left, w in right.
std::vector<Vector> product_space(const FiniteAlgebra& alg, const std::vector<Vector>& left,
                                  const std::vector<Vector>& right) {
  std::vector<Vector> prods;
  for (const auto& u : left)
    for (const auto& w : right) prods.push_back(alg.multiply(u, w));
  return span_basis(prods, alg.dim()).vectors;
}

std::size_t annihilator_dim(const FiniteAlgebra& alg, const std::vector<Vector>& s) {
  const std::size_t n = alg.dim();
  if (s.empty()) return n;
  Matrix stacked(s.size() * n, n);
  for (std::size_t t = 0; t < s.size(); ++t) {
    Matrix l = mult_operator(alg, s[t]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) stacked(t * n + i, j) = l(i, j);
  }
  return n - rank(stacked);
}

// Powers m^0 = A, m^1, ..., ending with the first zero power.
std::vector<std::vector<Vector>> radical_powers(const FiniteAlgebra& alg,
                                                const std::vector<Vector>& rad) {
  std::vector<std::vector<Vector>> powers;
  std::vector<Vector> whole;
  for (std::size_t i = 0; i < alg.dim(); ++i) whole.push_back(alg.basis_vector(i));
  powers.push_back(whole);
  powers.push_back(rad);
  while (!powers.back().empty()) powers.push_back(product_space(alg, powers.back(), rad));
  return powers;
}

}  // namespace

std::vector<std::size_t> hilbert_function(const FiniteAlgebra& alg) {
  auto powers = radical_powers(alg, local_radical(alg));
  std::vector<std::size_t> h;
  for (std::size_t i = 0; i + 1 < powers.size(); ++i)
    h.push_back(powers[i].size() - powers[i + 1].size());
  return h;
}

Fingerprint fingerprint(const FiniteAlgebra& alg) {
  auto powers = radical_powers(alg, local_radical(alg));
  Fingerprint f;
  f.dim = alg.dim();
  for (std::size_t i = 0; i + 1 < powers.size(); ++i)
    f.hilbert.push_back(powers[i].size() - powers[i + 1].size());
  for (std::size_t i = 1; i <= f.hilbert.size(); ++i)
    f.ann_filtration.push_back(annihilator_dim(alg, powers[i]));
  f.socle_dim = f.ann_filtration.front();
  f.embedding_dim = f.hilbert.size() > 1 ? f.hilbert[1] : 0;
  return f;
}

std::string format_sequence(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << ")";
  return out.str();
}

std::optional<Separation> certify_nonisomorphic(const Fingerprint& a, const Fingerprint& b) {
  if (a.dim != b.dim) return Separation{"dim", std::to_string(a.dim), std::to_string(b.dim)};
  if (a.hilbert != b.hilbert)
    return Separation{"hilbert", format_sequence(a.hilbert), format_sequence(b.hilbert)};
  if (a.socle_dim != b.socle_dim)
    return Separation{"socle_dim", std::to_string(a.socle_dim), std::to_string(b.socle_dim)};
  if (a.ann_filtration != b.ann_filtration)
    return Separation{"ann_filtration", format_sequence(a.ann_filtration),
                      format_sequence(b.ann_filtration)};
  if (a.embedding_dim != b.embedding_dim)
    return Separation{"embedding_dim", std::to_string(a.embedding_dim),
                      std::to_string(b.embedding_dim)};
  return std::nullopt;
}

std::optional<Separation> certify_nonisomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return certify_nonisomorphic(fingerprint(a), fingerprint(b));
}

bool is_chain(const FiniteAlgebra& alg) {
  auto h = hilbert_function(alg);
  return h.size() < 2 || h[1] <= 1;
}

}  // namespace prehom
