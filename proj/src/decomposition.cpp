#include "prehom/algebra.hpp"
#include "prehom/errors.hpp"
#include "prehom/univariate.hpp"

#include <algorithm>
#include <random>

namespace prehom {

namespace {

namespace uv = univariate;

// Minimal polynomial of a, found from the first linear dependency among 1, a, a^2, ...
uv::UPoly minimal_polynomial(const FiniteAlgebra& alg, const Vector& a) {
  std::vector<Vector> powers{alg.unit()};
  for (;;) {
    Vector next = alg.multiply(powers.back(), a);
    Matrix m = Matrix::from_columns(powers, alg.dim());
    if (auto coeffs = solve(m, next)) {
      uv::UPoly p;
      for (const auto& c : *coeffs) p.push_back(-c);
      p.push_back(1);
      return p;
    }
    powers.push_back(std::move(next));
  }
}

std::string format_upoly(const uv::UPoly& p) {
  std::string out;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (p[i] == 0) continue;
    std::string c = to_string(p[i]);
    if (!out.empty() && p[i] > 0) out += "+";
    out += c;
    if (i > 0) out += i == 1 ? "*t" : "*t^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

Vector weighted_element(std::size_t n, std::size_t attempt, std::mt19937_64& rng) {
  Vector a(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (attempt == 0) {
      Integer w;
      mpz_ui_pow_ui(w.get_mpz_t(), 2, k);
      a[k] = Rational(w);
    } else {
      a[k] = static_cast<long>(rng() % 19) - 9;
    }
  }
  return a;
}

Vector lift_idempotent(const FiniteAlgebra& alg, Vector e) {
  std::size_t limit = 2;
  for (std::size_t n = 1; n < alg.dim(); n *= 2) ++limit;
  for (std::size_t iter = 0; iter <= limit; ++iter) {
    Vector e2 = alg.multiply(e, e);
    if (e2 == e) return e;
    Vector e3 = alg.multiply(e2, e);
    e = sub(scale(3, e2), scale(2, e3));
  }
  throw std::logic_error("idempotent lifting did not converge");
}

std::vector<Vector> primitive_idempotents(const FiniteAlgebra& alg, std::size_t residue_dim,
                                          std::uint64_t seed) {
  const std::size_t n = alg.dim();
  if (residue_dim == 1) return {alg.unit()};
  std::mt19937_64 rng(seed);
  constexpr std::size_t kAttempts = 64;
  for (std::size_t attempt = 0; attempt < kAttempts; ++attempt) {
    Vector a = weighted_element(n, attempt, rng);
    uv::UPoly minpoly = minimal_polynomial(alg, a);
    uv::UPoly sqfree = uv::squarefree_part(minpoly);
    auto roots = uv::rational_roots(sqfree);
    if (!roots.splits)
      throw NonSplitResidue("minimal polynomial " + format_upoly(minpoly) +
                            " of a residue element does not split over the rationals");
    if (roots.roots.size() < residue_dim) continue;
    if (roots.roots.size() > residue_dim)
      throw std::logic_error("more residue eigenvalues than the residue dimension");

    std::vector<Vector> idempotents;
    for (std::size_t i = 0; i < roots.roots.size(); ++i) {
      Vector e = alg.unit();
      for (std::size_t j = 0; j < roots.roots.size(); ++j) {
        if (j == i) continue;
        Vector factor = sub(a, scale(roots.roots[j], alg.unit()));
        e = scale(1 / (roots.roots[i] - roots.roots[j]), alg.multiply(e, factor));
      }
      idempotents.push_back(lift_idempotent(alg, std::move(e)));
    }
    return idempotents;
  }
  throw std::runtime_error("no generic residue element found after " + std::to_string(kAttempts) +
                           " attempts");
}

}  // namespace

LocalDecomposition local_decomposition(const FiniteAlgebra& alg, std::uint64_t seed) {
  const std::size_t n = alg.dim();
  const std::size_t residue_dim = n - nilradical(alg).size();
  auto idempotents = primitive_idempotents(alg, residue_dim, seed);

  struct Part {
    Vector idempotent;
    SpanBasis basis;
  };
  std::vector<Part> parts;
  for (auto& e : idempotents) {
    Matrix l = mult_operator(alg, e);
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < n; ++j) cols.push_back(l.column(j));
    parts.push_back({std::move(e), span_basis(cols, n)});
  }
  std::sort(parts.begin(), parts.end(),
            [](const Part& a, const Part& b) { return a.basis.pivots.front() < b.basis.pivots.front(); });

  LocalDecomposition out;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& basis = parts[p].basis;
    const std::size_t m = basis.vectors.size();
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < m; ++a) {
      const Vector& w = basis.vectors[a];
      bool coordinate = std::count_if(w.begin(), w.end(), [](const Rational& x) { return x != 0; }) == 1;
      labels.push_back(coordinate ? alg.labels()[basis.pivots[a]]
                                  : "s" + std::to_string(p + 1) + "_" + std::to_string(a + 1));
    }
    std::vector<Rational> c(m * m * m);
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b) {
        Vector prod = alg.multiply(basis.vectors[a], basis.vectors[b]);
        for (std::size_t k = 0; k < m; ++k) c[(a * m + b) * m + k] = prod[basis.pivots[k]];
      }
    Vector unit(m);
    for (std::size_t k = 0; k < m; ++k) unit[k] = parts[p].idempotent[basis.pivots[k]];
    out.idempotents.push_back(parts[p].idempotent);
    out.summand_bases.push_back(basis.vectors);
    out.summands.emplace_back(std::move(labels), std::move(c), std::move(unit));
  }
  return out;
}

std::optional<std::uint64_t> orbit_count(const FiniteAlgebra& alg, std::uint64_t seed) {
  auto dec = local_decomposition(alg, seed);
  std::uint64_t count = 1;
  for (const auto& s : dec.summands) {
    if (!is_chain(s)) return std::nullopt;
    count *= s.dim() + 1;
  }
  return count;
}

bool is_square_zero_radical(const FiniteAlgebra& alg, std::uint64_t seed) {
  auto dec = local_decomposition(alg, seed);
  return std::all_of(dec.summands.begin(), dec.summands.end(),
                     [](const FiniteAlgebra& s) { return hilbert_function(s).size() <= 2; });
}

std::vector<Vector> unit_hyperplanes(const FiniteAlgebra& alg, std::uint64_t seed) {
  auto dec = local_decomposition(alg, seed);
  const std::size_t n = alg.dim();
  std::vector<Vector> forms;
  for (std::size_t i = 0; i < dec.idempotents.size(); ++i) {
    Rational size(static_cast<unsigned long>(dec.summands[i].dim()));
    Vector f(n);
    for (std::size_t k = 0; k < n; ++k) {
      Matrix l = mult_operator(alg, alg.multiply(dec.idempotents[i], alg.basis_vector(k)));
      Rational tr = 0;
      for (std::size_t d = 0; d < n; ++d) tr += l(d, d);
      f[k] = tr / size;
    }
    forms.push_back(std::move(f));
  }
  return forms;
}

}  // namespace prehom
