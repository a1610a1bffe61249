#include "prehom/io.hpp"

#include <doctest.h>

using namespace prehom;

TEST_SUITE("io") {
  TEST_CASE("rationals") {
    CHECK(rational_json(make_rational(-3, 4)) == Json("-3/4"));
    CHECK(rational_from_json(Json("5/10")) == make_rational(1, 2));
    CHECK(rational_from_json(Json(7)) == Rational(7));
    CHECK_THROWS_AS(rational_from_json(Json(1.5)), std::invalid_argument);
    CHECK_THROWS_AS(rational_from_json(Json("1/0")), std::invalid_argument);
  }

  TEST_CASE("algebra round trip") {
    for (int k : {1, 20, 33, 42}) {
      FiniteAlgebra a = from_quotient(table_entry(k).presentation);
      Json j = to_json(a);
      CHECK(j["dim"] == a.dim());
      CHECK(algebra_from_json(j) == a);
      CHECK(algebra_from_json(Json::parse(j.dump())) == a);
    }
  }

  TEST_CASE("rep round trip") {
    ParamMatrixRep rep = matrix_rep(from_quotient(table_entry(20).presentation));
    ParamMatrixRep back = rep_from_json(Json::parse(to_json(rep).dump()));
    CHECK(back.n == rep.n);
    CHECK(back.torus_params == rep.torus_params);
    CHECK(back.additive_params == rep.additive_params);
    CHECK(back.entries == rep.entries);
    CHECK(back.layout == rep.layout);
    CHECK(verify_homomorphism(back));
    MatrixGroupInput g = group_from_json(to_json(rep));
    CHECK(g.lie_basis == lie_basis(rep));
  }

  TEST_CASE("group and action round trips") {
    MatrixGroupInput g = polex_group(2);
    g.base_point = Vector{Rational(1), Rational(2), Rational(3), Rational(4)};
    MatrixGroupInput back = group_from_json(Json::parse(to_json(g).dump()));
    CHECK(back.n == g.n);
    CHECK(back.lie_basis == g.lie_basis);
    CHECK(back.base_point == g.base_point);

    PolynomialAction act = hirzebruch(2);
    PolynomialAction again = action_from_json(Json::parse(to_json(act).dump()));
    CHECK(again.r == act.r);
    CHECK(again.components == act.components);

    Matrix m = Matrix::from_rows({{make_rational(1, 2), Rational(0)}, {Rational(3), Rational(-1)}});
    CHECK(matrix_from_json(matrix_json(m)) == m);
  }

  TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"dim": 2})")), std::invalid_argument);
    CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"dim": 1, "basis": ["1"], "unit": ["1"],
                                                     "structure": [[["1", "0"]]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(group_from_json(Json::parse(R"({"n": 2, "lie_basis": [[["1"]]]})")), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1", "2"], ["3"]])")), std::invalid_argument);
    CHECK_THROWS_AS(action_from_json(Json::parse(R"({"r": 0, "s": 1, "n": 1, "components": ["x1+q"]})")),
                    std::exception);
  }
}
