#include "oracles.hpp"
#include "prehom/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace prehom;

namespace {

FiniteAlgebra entry(int k) { return from_quotient(table_entry(k).presentation); }
FiniteAlgebra algebra(const std::string& text) { return from_quotient(parse_presentation(text)); }
Vector vec(std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.push_back(Rational(x));
  return v;
}

FiniteAlgebra sum(std::initializer_list<FiniteAlgebra> parts) {
  std::vector<FiniteAlgebra> v(parts);
  return direct_sum(v);
}

FiniteAlgebra permuted(const FiniteAlgebra& a, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(a.dim());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Vector> cols;
  std::vector<std::string> labels;
  for (auto p : perm) {
    cols.push_back(a.basis_vector(p));
    labels.push_back(a.labels()[p]);
  }
  return a.change_basis(Matrix::from_columns(cols, a.dim()), labels);
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("quotient algebras") {
    FiniteAlgebra a2 = entry(2);
    CHECK(a2.dim() == 2);
    CHECK(is_zero(a2.multiply(a2.basis_vector(1), a2.basis_vector(1))));
    FiniteAlgebra a20 = entry(20);
    CHECK(a20.dim() == 6);
    CHECK(a20.labels() == std::vector<std::string>{"1", "x1", "x2", "x1^2", "x2^2", "x2^3"});
    CHECK(is_zero(a20.multiply(a20.basis_vector(1), a20.basis_vector(2))));
    CHECK(a20.multiply(a20.basis_vector(3), a20.basis_vector(1)) == a20.basis_vector(5));
    FiniteAlgebra a1 = entry(1);
    CHECK(a1.dim() == 1);
    CHECK(a1.constant(0, 0, 0) == 1);
    CHECK_THROWS_AS(algebra("K[x1]"), InfiniteDimensional);
    CHECK_THROWS_AS(algebra("K[x1]/(x1 - 1, x1)"), InvalidBasis);
  }

  TEST_CASE("axioms") {
    for (const auto& e : load_table()) {
      CAPTURE(e.index);
      FiniteAlgebra a = from_quotient(e.presentation);
      CHECK(verify_axioms(a).ok());
      CHECK(is_geometrically_local(a));
    }
    FiniteAlgebra a = entry(3);
    auto c = a.constants();
    c[(1 * 3 + 2) * 3 + 0] += 1;  // b1 b2 != b2 b1
    auto broken = verify_axioms(FiniteAlgebra(a.labels(), c, a.unit()));
    CHECK_FALSE(broken.checks[0].ok);
    auto no_unit = verify_axioms(FiniteAlgebra(a.labels(), a.constants(), zero_vector(3)));
    CHECK_FALSE(no_unit.checks[2].ok);
    CHECK_FALSE(no_unit.ok());
  }

  TEST_CASE("multiplication operators and inverses") {
    FiniteAlgebra a2 = entry(2);
    CHECK(mult_operator(a2, a2.unit()) == Matrix::identity(2));
    CHECK(mult_operator(a2, vec({0, 1})) == Matrix::from_rows({vec({0, 0}), vec({1, 0})}));
    CHECK(try_inverse(a2, vec({1, 1})) == vec({1, -1}));
    CHECK_FALSE(try_inverse(a2, vec({0, 1})).has_value());
    CHECK(try_inverse(a2, a2.unit()) == a2.unit());

    std::mt19937_64 rng(1);
    FiniteAlgebra a = entry(33);
    for (int t = 0; t < 10; ++t) {
      Vector x = oracle::random_vector(6, rng), y = oracle::random_vector(6, rng);
      CHECK(mult_operator(a, x) * mult_operator(a, y) == mult_operator(a, y) * mult_operator(a, x));
    }
  }

  TEST_CASE("nilradical") {
    auto n2 = nilradical(entry(2));
    REQUIRE(n2.size() == 1);
    CHECK(span_basis(n2, 2).vectors == span_basis({vec({0, 1})}, 2).vectors);
    CHECK(nilradical(sum({entry(1), entry(1)})).empty());
    CHECK(nilradical(entry(20)).size() == 5);
    for (const auto& e : load_table()) {
      FiniteAlgebra a = from_quotient(e.presentation);
      for (const auto& v : nilradical(a)) {
        Matrix l = mult_operator(a, v), p = Matrix::identity(a.dim());
        for (std::size_t k = 0; k < a.dim(); ++k) p = p * l;
        CHECK(p.is_zero());
      }
    }
    CHECK_FALSE(is_geometrically_local(sum({entry(1), entry(1)})));
    CHECK_FALSE(is_geometrically_local(algebra("K[x]/(x^2-1)")));
    CHECK(nilradical(algebra("K[x]/(x^2-1)")).empty());
  }

  TEST_CASE("direct sums and decomposition") {
    CHECK(direct_sum(std::vector<FiniteAlgebra>{entry(1)}) == entry(1));
    FiniteAlgebra s = sum({entry(2), entry(1)});
    CHECK(s.dim() == 3);
    CHECK(nilradical(s).size() == 1);
    CHECK_THROWS_AS(direct_sum(std::vector<FiniteAlgebra>{}), std::invalid_argument);

    auto kkk = local_decomposition(sum({entry(1), entry(1), entry(1)}));
    CHECK(kkk.idempotents.size() == 3);

    auto d = local_decomposition(sum({entry(2), entry(3)}));
    REQUIRE(d.summands.size() == 2);
    CHECK(d.summands[0].dim() == 2);
    CHECK(d.summands[1].dim() == 3);
    CHECK(d.idempotents[0] == vec({1, 0, 0, 0, 0}));
    CHECK(d.idempotents[1] == vec({0, 0, 1, 0, 0}));

    auto local = local_decomposition(entry(20));
    REQUIRE(local.idempotents.size() == 1);
    CHECK(local.idempotents[0] == entry(20).unit());

    CHECK_THROWS_AS(local_decomposition(algebra("K[x]/(x^2+1)")), NonSplitResidue);
    auto split = local_decomposition(algebra("K[x]/(x^2-1)"));
    CHECK(split.summands.size() == 2);
  }

  TEST_CASE("decomposition properties on random sums") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 8; ++t) {
      std::vector<FiniteAlgebra> parts;
      std::size_t total = 0;
      while (total < 5) {
        int k = static_cast<int>(rng() % 17) + 1;
        parts.push_back(entry(k));
        total += parts.back().dim();
      }
      FiniteAlgebra a = permuted(direct_sum(parts), rng);
      auto d = local_decomposition(a, t);
      CHECK(d.summands.size() == parts.size());
      Vector one = zero_vector(a.dim());
      std::size_t dims = 0;
      for (std::size_t i = 0; i < d.idempotents.size(); ++i) {
        one = add(one, d.idempotents[i]);
        dims += d.summands[i].dim();
        CHECK(a.multiply(d.idempotents[i], d.idempotents[i]) == d.idempotents[i]);
        CHECK(is_geometrically_local(d.summands[i]));
        for (std::size_t j = 0; j < i; ++j) CHECK(is_zero(a.multiply(d.idempotents[i], d.idempotents[j])));
      }
      CHECK(one == a.unit());
      CHECK(dims == a.dim());
      // Reassembling the summands gives the same multiset of fingerprints.
      std::vector<std::vector<std::size_t>> got, want;
      for (const auto& s : d.summands) got.push_back(hilbert_function(s));
      for (const auto& p : parts) want.push_back(hilbert_function(p));
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      CHECK(got == want);
    }
  }

  TEST_CASE("hilbert functions and fingerprints") {
    CHECK(hilbert_function(entry(20)) == std::vector<std::size_t>{1, 2, 2, 1});
    CHECK(hilbert_function(entry(18)) == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
    CHECK(hilbert_function(entry(42)) == std::vector<std::size_t>{1, 5});
    Fingerprint f3 = fingerprint(entry(3));
    CHECK(f3.dim == 3);
    CHECK(f3.hilbert == std::vector<std::size_t>{1, 1, 1});
    CHECK(f3.socle_dim == 1);
    Fingerprint f4 = fingerprint(entry(4));
    CHECK(f4.hilbert == std::vector<std::size_t>{1, 2});
    CHECK(f4.socle_dim == 2);
    Fingerprint f1 = fingerprint(entry(1));
    CHECK(f1.hilbert == std::vector<std::size_t>{1});
    CHECK(f1.socle_dim == 1);
    CHECK_THROWS_AS(hilbert_function(sum({entry(1), entry(1)})), NotLocal);
  }

  TEST_CASE("fingerprints agree with the monomial oracle") {
    for (const auto& e : load_table()) {
      CAPTURE(e.index);
      FiniteAlgebra a = from_quotient(e.presentation);
      Fingerprint f = fingerprint(a);
      auto ref = oracle::monomial_local_invariants(a);
      CHECK(f.dim == a.dim());
      CHECK(f.hilbert == ref.hilbert);
      CHECK(f.socle_dim == ref.socle);
      CHECK(f.ann_filtration == ref.ann);
      CHECK(f.embedding_dim == ref.embedding);
      CHECK(std::accumulate(f.hilbert.begin(), f.hilbert.end(), std::size_t{0}) == f.dim);
      if (f.hilbert.size() > 1) CHECK(f.embedding_dim == f.hilbert[1]);
    }
  }

  TEST_CASE("fingerprints are invariant under basis permutation") {
    std::mt19937_64 rng(8);
    for (int k : {5, 13, 20, 27, 33, 39, 41}) {
      FiniteAlgebra a = entry(k);
      for (int t = 0; t < 3; ++t) CHECK(fingerprint(permuted(a, rng)) == fingerprint(a));
    }
  }

  TEST_CASE("separation certificates") {
    auto s = certify_nonisomorphic(entry(3), entry(4));
    REQUIRE(s.has_value());
    CHECK(s->invariant == "hilbert");
    CHECK(s->left == "(1,1,1)");
    CHECK(s->right == "(1,2)");
    CHECK_FALSE(certify_nonisomorphic(entry(20), entry(20)).has_value());
  }

  TEST_CASE("chain algebras and orbit counts") {
    CHECK(is_chain(entry(18)));
    CHECK_FALSE(is_chain(entry(20)));
    CHECK(is_chain(entry(1)));
    CHECK(orbit_count(entry(3)) == std::optional<std::uint64_t>(4));
    CHECK(orbit_count(entry(1)) == std::optional<std::uint64_t>(2));
    CHECK_FALSE(orbit_count(entry(4)).has_value());
    CHECK(orbit_count(sum({entry(2), entry(3), entry(1)})) == std::optional<std::uint64_t>(3 * 4 * 2));
  }

  TEST_CASE("orbit count matches association classes of K[x]/(x^3)") {
    FiniteAlgebra a = algebra("K[x]/(x^3)");
    std::vector<Vector> reps{vec({1, 0, 0}), vec({0, 1, 0}), vec({0, 0, 1}), vec({0, 0, 0})};
    CHECK(oracle::classes_partition_box(a, reps));
    CHECK(orbit_count(a) == std::optional<std::uint64_t>(reps.size()));
  }

  TEST_CASE("square-zero radicals") {
    CHECK(is_square_zero_radical(entry(42)));
    CHECK_FALSE(is_square_zero_radical(entry(3)));
    CHECK(is_square_zero_radical(entry(1)));
    CHECK(is_square_zero_radical(sum({entry(2), entry(4)})));
  }

  TEST_CASE("unit hyperplanes") {
    auto h2 = unit_hyperplanes(entry(2));
    CHECK(h2 == std::vector<Vector>{vec({1, 0})});
    auto hs = unit_hyperplanes(sum({entry(2), entry(1)}));
    CHECK(hs == std::vector<Vector>{vec({1, 0, 0}), vec({0, 0, 1})});
    CHECK(unit_hyperplanes(entry(1)) == std::vector<Vector>{vec({1})});

    std::mt19937_64 rng(31);
    std::vector<FiniteAlgebra> algebras{entry(20), entry(33), sum({entry(3), entry(2), entry(1)})};
    for (const auto& a : algebras) {
      auto forms = unit_hyperplanes(a);
      for (int t = 0; t < 30; ++t) {
        Vector x = oracle::random_vector(a.dim(), rng);
        if (t % 3 == 0) x[0] = 0;  // land on hyperplanes now and then
        bool off = true;
        for (const auto& f : forms) {
          Rational s = 0;
          for (std::size_t i = 0; i < x.size(); ++i) s += f[i] * x[i];
          off = off && s != 0;
        }
        CHECK(try_inverse(a, x).has_value() == off);
      }
    }
  }

  TEST_CASE("non-radical elements of local algebras are invertible") {
    std::mt19937_64 rng(37);
    for (int k : {6, 20, 33, 42}) {
      FiniteAlgebra a = entry(k);
      auto rad = span_basis(nilradical(a), a.dim());
      for (int t = 0; t < 20; ++t) {
        Vector x = oracle::random_vector(a.dim(), rng);
        CHECK(try_inverse(a, x).has_value() == !in_span(rad, x));
      }
    }
  }

  TEST_CASE("change of basis") {
    FiniteAlgebra a = entry(3);
    CHECK_THROWS_AS(a.change_basis(Matrix(3, 3), {"a", "b", "c"}), InvalidBasis);
    Matrix p = Matrix::from_columns({vec({1, 0, 0}), vec({1, 1, 0}), vec({0, 2, 1})}, 3);
    FiniteAlgebra b = a.change_basis(p, {"u", "v", "w"});
    CHECK(verify_axioms(b).ok());
    CHECK(fingerprint(b) == fingerprint(a));
  }
}
