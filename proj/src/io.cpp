#include "prehom/io.hpp"

#include "prehom/presentation.hpp"

#include <stdexcept>

namespace prehom {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("malformed document: " + what);
}

Vector vector_from_json(const Json& j) {
  require(j.is_array(), "expected an array of rationals");
  Vector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(rational_json(x));
  return out;
}

std::size_t size_field(const Json& j, const char* key) {
  require(j.contains(key) && j[key].is_number_unsigned(), std::string("field '") + key + "'");
  return j[key].get<std::size_t>();
}

}  // namespace

Json rational_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  require(j.is_string(), "rational must be a string or an integer");
  return parse_rational(j.get<std::string>());
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector_json(m.row(i)));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  require(j.is_array(), "matrix must be an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  for (const auto& r : rows) require(r.size() == rows.front().size(), "ragged matrix");
  return Matrix::from_rows(rows);
}

Json to_json(const FiniteAlgebra& alg) {
  const std::size_t n = alg.dim();
  Json structure = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) {
      Json cell = Json::array();
      for (std::size_t k = 0; k < n; ++k) cell.push_back(rational_json(alg.constant(i, j, k)));
      row.push_back(std::move(cell));
    }
    structure.push_back(std::move(row));
  }
  Json out;
  out["dim"] = n;
  out["basis"] = alg.labels();
  out["unit"] = vector_json(alg.unit());
  out["structure"] = std::move(structure);
  return out;
}

FiniteAlgebra algebra_from_json(const Json& j) try {
  const std::size_t n = size_field(j, "dim");
  std::vector<std::string> labels;
  if (j.contains("basis")) {
    labels = j["basis"].get<std::vector<std::string>>();
  } else {
    for (std::size_t k = 1; k <= n; ++k) labels.push_back("e" + std::to_string(k));
  }
  require(labels.size() == n, "basis length differs from dim");
  Vector unit = vector_from_json(j.at("unit"));
  require(unit.size() == n, "unit length differs from dim");
  const Json& s = j.at("structure");
  require(s.is_array() && s.size() == n, "structure must be n x n x n");
  std::vector<Rational> c;
  c.reserve(n * n * n);
  for (const auto& row : s) {
    require(row.is_array() && row.size() == n, "structure must be n x n x n");
    for (const auto& cell : row) {
      Vector v = vector_from_json(cell);
      require(v.size() == n, "structure must be n x n x n");
      c.insert(c.end(), v.begin(), v.end());
    }
  }
  return FiniteAlgebra(std::move(labels), std::move(c), std::move(unit));
} catch (const Json::exception& e) {
  throw std::invalid_argument(std::string("malformed document: ") + e.what());
}

Json to_json(const ParamMatrixRep& rep) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < rep.n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < rep.n; ++j) row.push_back(rep.entries(i, j).to_string());
    entries.push_back(std::move(row));
  }
  Json out;
  out["n"] = rep.n;
  out["torus_params"] = rep.torus_params;
  out["additive_params"] = rep.additive_params;
  out["entries"] = std::move(entries);
  out["layout"] = rep.layout;
  out["basis"] = rep.basis_labels;
  return out;
}

ParamMatrixRep rep_from_json(const Json& j) try {
  ParamMatrixRep rep;
  rep.n = size_field(j, "n");
  rep.torus_params = j.at("torus_params").get<std::vector<std::string>>();
  rep.additive_params = j.at("additive_params").get<std::vector<std::string>>();
  std::vector<std::string> names = rep.torus_params;
  names.insert(names.end(), rep.additive_params.begin(), rep.additive_params.end());
  rep.variables = make_variables(names);
  rep.entries = PolyMatrix(rep.n, rep.n, rep.variables);
  const Json& e = j.at("entries");
  require(e.is_array() && e.size() == rep.n, "entries must be n x n");
  for (std::size_t i = 0; i < rep.n; ++i) {
    require(e[i].is_array() && e[i].size() == rep.n, "entries must be n x n");
    for (std::size_t k = 0; k < rep.n; ++k)
      rep.entries(i, k) = parse_polynomial(e[i][k].get<std::string>(), rep.variables);
  }
  if (j.contains("layout")) {
    rep.layout = j["layout"].get<std::vector<std::vector<std::size_t>>>();
  } else {
    rep.layout.emplace_back();
    for (std::size_t i = 0; i < rep.n; ++i) rep.layout.back().push_back(i);
  }
  for (const auto& block : rep.layout)
    for (auto idx : block) require(idx < rep.n, "layout index out of range");
  if (j.contains("basis")) rep.basis_labels = j["basis"].get<std::vector<std::string>>();
  for (std::size_t i = 0; i < rep.n; ++i) rep.basis.push_back(unit_vector(rep.n, i));
  return rep;
} catch (const Json::exception& e) {
  throw std::invalid_argument(std::string("malformed document: ") + e.what());
}

Json to_json(const MatrixGroupInput& g) {
  Json basis = Json::array();
  for (const auto& m : g.lie_basis) basis.push_back(matrix_json(m));
  Json out;
  out["n"] = g.n;
  out["lie_basis"] = std::move(basis);
  if (g.base_point) out["base_point"] = vector_json(*g.base_point);
  return out;
}

MatrixGroupInput group_from_json(const Json& j) try {
  if (j.contains("entries")) {
    MatrixGroupInput g;
    ParamMatrixRep rep = rep_from_json(j);
    g.n = rep.n;
    g.lie_basis = lie_basis(rep);
    return g;
  }
  MatrixGroupInput g;
  g.n = size_field(j, "n");
  require(j.contains("lie_basis") && j["lie_basis"].is_array(), "field 'lie_basis'");
  for (const auto& m : j["lie_basis"]) {
    g.lie_basis.push_back(matrix_from_json(m));
    require(g.lie_basis.back().rows() == g.n && g.lie_basis.back().cols() == g.n, "lie_basis matrices must be n x n");
  }
  if (j.contains("base_point") && !j["base_point"].is_null()) {
    g.base_point = vector_from_json(j["base_point"]);
    require(g.base_point->size() == g.n, "base_point must have length n");
  }
  return g;
} catch (const Json::exception& e) {
  throw std::invalid_argument(std::string("malformed document: ") + e.what());
}

Json to_json(const PolynomialAction& act) {
  Json comps = Json::array();
  for (const auto& c : act.components) comps.push_back(c.to_string());
  Json out;
  out["r"] = act.r;
  out["s"] = act.s;
  out["n"] = act.n;
  out["components"] = std::move(comps);
  return out;
}

PolynomialAction action_from_json(const Json& j) try {
  return make_action(size_field(j, "r"), size_field(j, "s"), size_field(j, "n"),
                     j.at("components").get<std::vector<std::string>>(), "file");
} catch (const Json::exception& e) {
  throw std::invalid_argument(std::string("malformed document: ") + e.what());
}

}  // namespace prehom
