#pragma once

#include "prehom/action.hpp"
#include "prehom/algebra.hpp"
#include "prehom/hassett.hpp"
#include "prehom/prehomogeneous.hpp"

#include <json.hpp>

namespace prehom {

using Json = nlohmann::ordered_json;

/// Rationals are written as strings; strings and integers are accepted on input.
Json rational_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// { "dim", "basis", "unit", "structure" }, structure[i][j][k] = c(i, j, k).
Json to_json(const FiniteAlgebra& alg);
FiniteAlgebra algebra_from_json(const Json& j);

/// { "n", "torus_params", "additive_params", "entries", "layout", "basis" }.
Json to_json(const ParamMatrixRep& rep);
ParamMatrixRep rep_from_json(const Json& j);

/// { "n", "lie_basis", "base_point" }.
Json to_json(const MatrixGroupInput& g);
/// Also accepts a rep document, taking the Lie algebra of the representation.
MatrixGroupInput group_from_json(const Json& j);

/// { "r", "s", "n", "components" }.
Json to_json(const PolynomialAction& act);
PolynomialAction action_from_json(const Json& j);

Json matrix_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

}  // namespace prehom
