#include "oracles.hpp"
#include "prehom/univariate.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace prehom;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = oracle::small_rational(rng);
  return m;
}

// Sum over permutations.
Rational leibniz(const Matrix& m) {
  std::vector<std::size_t> perm(m.rows());
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j] ? 1 : 0;
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < perm.size(); ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

univariate::UPoly from_roots(const std::vector<Rational>& roots, const Rational& lead) {
  univariate::UPoly p{lead};
  for (const auto& r : roots) {
    univariate::UPoly next(p.size() + 1, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      next[i + 1] += p[i];
      next[i] -= r * p[i];
    }
    p = next;
  }
  return p;
}

}  // namespace

TEST_SUITE("linalg") {
  TEST_CASE("determinant matches the permutation expansion") {
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) {
      Matrix m = random_matrix(4, 4, rng);
      CHECK(determinant(m) == leibniz(m));
    }
  }

  TEST_CASE("inverse, solve and nullspace") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 20; ++t) {
      Matrix m = random_matrix(4, 4, rng);
      auto inv = inverse(m);
      if (determinant(m) == 0) {
        CHECK_FALSE(inv.has_value());
        continue;
      }
      REQUIRE(inv.has_value());
      CHECK(m * *inv == Matrix::identity(4));
      Vector b = oracle::random_vector(4, rng);
      auto x = solve(m, b);
      REQUIRE(x.has_value());
      CHECK(m * *x == b);
    }
    Matrix a = Matrix::from_rows({{Rational(1), Rational(2), Rational(3)}, {Rational(2), Rational(4), Rational(6)}});
    CHECK(rank(a) == 1);
    auto ker = nullspace(a);
    CHECK(ker.size() == 2);
    for (const auto& k : ker) CHECK(is_zero(a * k));
    CHECK_FALSE(solve(a, {Rational(1), Rational(0)}).has_value());
  }

  TEST_CASE("span bases") {
    std::vector<Vector> vs{{Rational(1), Rational(1), Rational(0)},
                           {Rational(2), Rational(2), Rational(0)},
                           {Rational(0), Rational(1), Rational(1)}};
    auto basis = span_basis(vs, 3);
    CHECK(basis.vectors.size() == 2);
    CHECK(in_span(basis, {Rational(1), Rational(3), Rational(2)}));
    CHECK_FALSE(in_span(basis, {Rational(0), Rational(0), Rational(1)}));
  }
}

TEST_SUITE("univariate") {
  TEST_CASE("gcd and squarefree part") {
    using univariate::UPoly;
    UPoly a = from_roots({Rational(1), Rational(1), Rational(2)}, Rational(3));
    UPoly b = from_roots({Rational(1), Rational(5)}, Rational(1));
    CHECK(univariate::gcd(a, b) == from_roots({Rational(1)}, Rational(1)));
    CHECK(univariate::squarefree_part(a) == from_roots({Rational(1), Rational(2)}, Rational(1)));
    auto [q, r] = univariate::divmod(a, b);
    CHECK(univariate::degree(q) == 1);
    CHECK(univariate::degree(r) < univariate::degree(b));
    for (int x = -3; x <= 3; ++x)
      CHECK(univariate::evaluate(a, x) ==
            univariate::evaluate(b, x) * univariate::evaluate(q, x) + univariate::evaluate(r, x));
  }

  TEST_CASE("rational roots") {
    using univariate::UPoly;
    // (x - 1/2)(x + 3)(x^2 + 1)
    UPoly p = from_roots({make_rational(1, 2), Rational(-3)}, Rational(1));
    UPoly q(p.size() + 2, Rational(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i] += p[i];
      q[i + 2] += p[i];
    }
    auto res = univariate::rational_roots(q);
    CHECK(res.roots == std::vector<Rational>{Rational(-3), make_rational(1, 2)});
    CHECK_FALSE(res.splits);

    std::mt19937_64 rng(4);
    for (int t = 0; t < 20; ++t) {
      std::vector<Rational> roots;
      for (int k = 0; k < 4; ++k) {
        Rational r = oracle::small_rational(rng);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
      std::sort(roots.begin(), roots.end());
      auto found = univariate::rational_roots(from_roots(roots, make_rational(7, 3)));
      CHECK(found.splits);
      CHECK(found.roots == roots);
    }
    auto irreducible = univariate::rational_roots({Rational(-2), Rational(0), Rational(1)});
    CHECK(irreducible.roots.empty());
    CHECK_FALSE(irreducible.splits);
  }
}
