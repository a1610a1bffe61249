#include "oracles.hpp"
#include "prehom/action.hpp"

#include <doctest.h>

using namespace prehom;

namespace {

std::vector<std::string> as_text(const PolynomialAction& act) {
  std::vector<std::string> out;
  for (const auto& c : act.components) out.push_back(c.to_string());
  return out;
}

Vector random_params(const PolynomialAction& act, std::mt19937_64& rng) {
  Vector p;
  for (std::size_t i = 0; i < act.r; ++i) {
    Rational t = 0;
    while (t == 0) t = oracle::small_rational(rng);
    p.push_back(t);
  }
  for (std::size_t i = 0; i < act.s; ++i) p.push_back(oracle::small_rational(rng));
  return p;
}

Vector compose_params(const PolynomialAction& act, const Vector& g, const Vector& h) {
  Vector out(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) out[i] = i < act.r ? Rational(g[i] * h[i]) : Rational(g[i] + h[i]);
  return out;
}

std::vector<PolynomialAction> all_builtins() {
  return {translations(3), hirzebruch(0), hirzebruch(1), hirzebruch(2), polex(2),
          scalar(3),       table_rep(2),  table_rep(20), table_rep(38)};
}

}  // namespace

TEST_SUITE("action") {
  TEST_CASE("builtin components") {
    CHECK(as_text(translations(2)) == std::vector<std::string>{"a1+x1", "a2+x2"});
    auto h = hirzebruch(2);
    CHECK(h.r == 2);
    CHECK(h.s == 2);
    CHECK(h.n == 4);
    CHECK(h.components[3] == parse_polynomial("l1^2*l2*x4 + l1^2*l2*a2*x1^2*x2", h.variables));
    auto p = polex(2);
    CHECK(p.param_count() == 5);
    CHECK(p.components[0] == parse_polynomial("l1*x1 + l1*a1*x3 + l1*a2*x4", p.variables));
    CHECK(p.components[3] == parse_polynomial("l1*x4", p.variables));
    CHECK((*action_variables(1, 2, 1)) == std::vector<std::string>{"l1", "a1", "a2", "x1"});
  }

  TEST_CASE("group laws") {
    for (const auto& act : all_builtins()) {
      CAPTURE(act.name);
      CHECK(verify_action(act));
    }
    for (unsigned d = 0; d <= 4; ++d) CHECK(verify_action(hirzebruch(d)));
    CHECK(verify_action(polex(3)));

    // Dropping one torus factor from the last component breaks composition.
    CHECK_FALSE(verify_action(make_action(2, 2, 4, {"l1*x1", "l2*x2", "l1*x3+l1*a1*x1", "l1*l2*x4+l2*a2*x1*x2"})));
    // a^2 is not additive in a.
    CHECK_FALSE(verify_action(make_action(0, 1, 1, {"x1+a1^2"})));
    // Identity fails.
    CHECK_FALSE(verify_action(make_action(1, 0, 1, {"l1*x1+1"})));
  }

  TEST_CASE("numeric shadow of the group law") {
    std::mt19937_64 rng(31);
    for (const auto& act : all_builtins()) {
      CAPTURE(act.name);
      Vector identity = zero_vector(act.param_count());
      for (std::size_t i = 0; i < act.r; ++i) identity[i] = 1;
      for (int t = 0; t < 10; ++t) {
        Vector g = random_params(act, rng), h = random_params(act, rng);
        Vector v = oracle::random_vector(act.n, rng);
        CHECK(apply_action(act, identity, v) == v);
        CHECK(apply_action(act, g, apply_action(act, h, v)) == apply_action(act, compose_params(act, g, h), v));
      }
    }
  }

  TEST_CASE("linearity") {
    CHECK_FALSE(is_linear(translations(2)));
    CHECK(is_linear(hirzebruch(0)));
    CHECK_FALSE(is_linear(hirzebruch(1)));
    CHECK(is_linear(polex(2)));
    CHECK(is_linear(scalar(4)));
    CHECK(is_linear(table_rep(20)));
  }

  TEST_CASE("fixed points") {
    CHECK(has_fixed_point(translations(3)) == FixedPoint::no);
    CHECK(has_fixed_point(hirzebruch(0)) == FixedPoint::yes);
    for (unsigned d = 1; d <= 3; ++d) CHECK(has_fixed_point(hirzebruch(d)) == FixedPoint::unknown);
    CHECK(has_fixed_point(polex(2)) == FixedPoint::yes);
    CHECK(has_fixed_point(scalar(2)) == FixedPoint::yes);
    CHECK(has_fixed_point(table_rep(5)) == FixedPoint::yes);
    // x -> x + a x^2 + a: fixed points need x^2 + 1 = 0, so the system is not linear.
    CHECK(has_fixed_point(make_action(0, 1, 1, {"x1+a1*x1^2+a1"})) == FixedPoint::unknown);
    // x -> x + a (x - 3): the point 3 is fixed.
    CHECK(has_fixed_point(make_action(0, 1, 1, {"x1+a1*x1-3*a1"})) == FixedPoint::yes);
    CHECK(to_string(FixedPoint::unknown) == "unknown");
  }

  TEST_CASE("orbit ranks") {
    CHECK(orbit_rank(translations(3), zero_vector(3)) == 3);
    auto h = hirzebruch(1);
    Vector ones(4, Rational(1));
    CHECK(orbit_rank(h, ones) == 4);
    CHECK(orbit_rank(h, zero_vector(4)) == 0);
    CHECK(orbit_rank(polex(2), generic_point(4, 0, 0)) == 3);
    for (int k : {2, 20, 38}) {
      FiniteAlgebra a = from_quotient(table_entry(k).presentation);
      CHECK(orbit_rank(table_rep(k), a.unit()) == a.dim());
      CHECK(is_linear(table_rep(k)));
    }
  }

  TEST_CASE("linear Lie algebras") {
    auto g = linear_lie_algebra(polex(2));
    auto p = polex_group(2);
    CHECK(g.n == 4);
    CHECK(matrix_span(g.lie_basis, 4).vectors == matrix_span(p.lie_basis, 4).vectors);
    auto rep = matrix_rep(from_quotient(table_entry(20).presentation));
    CHECK(matrix_span(linear_lie_algebra(from_rep(rep)).lie_basis, rep.n).vectors ==
          matrix_span(lie_basis(rep), rep.n).vectors);
    CHECK_THROWS_AS(linear_lie_algebra(translations(2)), std::invalid_argument);
  }

  TEST_CASE("analysis reports") {
    auto report = analyze(polex(2), 0);
    CHECK(report.axioms_ok);
    CHECK(report.linear);
    CHECK(report.fixed_point == FixedPoint::yes);
    CHECK(report.orbit_rank_at_witness == 3);
    auto t = analyze(translations(2), 5);
    CHECK(t.orbit_rank_at_witness == 2);
    CHECK(t.fixed_point == FixedPoint::no);
    CHECK(analyze(hirzebruch(1), 0).orbit_rank_at_witness == 4);
  }

  TEST_CASE("builtin dispatch") {
    CHECK(builtin("polex", {{"n", 3}}).n == 6);
    CHECK(builtin("hirzebruch", {}).components == hirzebruch(1).components);
    CHECK(builtin("table_rep", {{"k", 20}}).n == 6);
    CHECK_THROWS_AS(builtin("nope", {}), std::invalid_argument);
    CHECK_THROWS_AS(builtin("polex", {{"n", 0}}), std::invalid_argument);
    CHECK_THROWS_AS(builtin("table_rep", {{"k", 43}}), std::invalid_argument);
    CHECK_THROWS_AS(builtin("scalar", {{"q", 1}}), std::invalid_argument);
  }
}
