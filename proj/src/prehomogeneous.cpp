#include "prehom/prehomogeneous.hpp"

#include <random>

namespace prehom {

namespace {

void require_shapes(const MatrixGroupInput& input) {
  for (const auto& m : input.lie_basis)
    if (m.rows() != input.n || m.cols() != input.n)
      throw DimensionMismatch("Lie basis matrix is " + std::to_string(m.rows()) + "x" +
                              std::to_string(m.cols()) + ", expected " + std::to_string(input.n) + "x" +
                              std::to_string(input.n));
}

Matrix unflatten(const Vector& v, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

bool commute(const Matrix& a, const Matrix& b) { return a * b == b * a; }

}  // namespace

bool check_commutative(const MatrixGroupInput& input) {
  require_shapes(input);
  const auto& basis = input.lie_basis;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!commute(basis[i], basis[j])) return false;
  return true;
}

SpanBasis matrix_span(const std::vector<Matrix>& ms, std::size_t n) {
  std::vector<Vector> flat;
  for (const auto& m : ms) flat.push_back(m.data());
  return span_basis(flat, n * n);
}

bool lie_basis_independent(const MatrixGroupInput& input) {
  require_shapes(input);
  return matrix_span(input.lie_basis, input.n).vectors.size() == input.lie_basis.size();
}

std::size_t infinitesimal_orbit_rank(const MatrixGroupInput& input, const Vector& v) {
  require_shapes(input);
  if (v.size() != input.n) throw DimensionMismatch("point has the wrong length");
  std::vector<Vector> images;
  for (const auto& x : input.lie_basis) images.push_back(x * v);
  return span_basis(images, input.n).vectors.size();
}

std::vector<Matrix> commutant(const MatrixGroupInput& input) {
  require_shapes(input);
  const std::size_t n = input.n;
  // Unknown X(a, b) sits at a*n + b; one equation per entry (i, j) of XM - MX.
  Matrix system(input.lie_basis.size() * n * n, n * n);
  std::size_t row = 0;
  for (const auto& m : input.lie_basis)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j, ++row) {
        for (std::size_t k = 0; k < n; ++k) {
          system(row, i * n + k) += m(k, j);
          system(row, k * n + j) -= m(i, k);
        }
      }
  std::vector<Matrix> out;
  for (const auto& v : nullspace(system)) out.push_back(unflatten(v, n));
  return out;
}

std::vector<Matrix> associative_hull(const MatrixGroupInput& input) {
  require_shapes(input);
  const std::size_t n = input.n;
  std::vector<Matrix> gens = input.lie_basis;
  gens.push_back(Matrix::identity(n));
  SpanBasis span = matrix_span(gens, n);
  while (true) {
    std::vector<Matrix> current;
    for (const auto& v : span.vectors) current.push_back(unflatten(v, n));
    std::vector<Matrix> grown = current;
    for (const auto& a : current)
      for (const auto& g : gens) grown.push_back(a * g);
    SpanBasis next = matrix_span(grown, n);
    if (next.vectors.size() == span.vectors.size()) return current;
    span = std::move(next);
  }
}

ReconstructedAlgebra reconstruct_algebra(const MatrixGroupInput& input, const Vector& v) {
  require_shapes(input);
  const std::size_t n = input.n;
  if (v.size() != n) throw DimensionMismatch("base vector has the wrong length");
  std::vector<Matrix> c = commutant(input);
  if (c.size() != n)
    throw DimensionMismatch("commutant has dimension " + std::to_string(c.size()) + ", module has dimension " +
                            std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!commute(c[i], c[j])) throw NonCommutativeCommutant("commutant is not commutative");

  std::vector<Vector> images;
  for (const auto& x : c) images.push_back(x * v);
  auto inv = inverse(Matrix::from_columns(images, n));
  if (!inv) throw NotCyclic("vector is not cyclic for the commutant");

  std::vector<Matrix> ops;
  for (std::size_t k = 0; k < n; ++k) {
    Matrix x(n, n);
    for (std::size_t l = 0; l < n; ++l)
      if ((*inv)(l, k) != 0) x = x + (*inv)(l, k) * c[l];
    ops.push_back(std::move(x));
  }

  std::vector<Rational> constants(n * n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector prod = ops[i] * (ops[j] * v);
      for (std::size_t k = 0; k < n; ++k) constants[(i * n + j) * n + k] = prod[k];
    }
  std::vector<std::string> labels;
  for (std::size_t k = 1; k <= n; ++k) labels.push_back("v" + std::to_string(k));
  return {FiniteAlgebra(std::move(labels), std::move(constants), v), std::move(ops), v};
}

Vector generic_point(std::size_t n, std::uint64_t seed, std::size_t attempt) {
  std::mt19937_64 rng(seed);
  rng.discard(attempt * n);
  Vector v(n);
  for (auto& x : v) x = static_cast<long>(rng() % 19) - 9;
  return v;
}

OpenOrbitCertificate certify_open_orbit(const MatrixGroupInput& input, std::uint64_t seed) {
  OpenOrbitCertificate cert;
  auto test = [&](const Vector& v) {
    ++cert.attempts;
    cert.point = v;
    cert.rank = infinitesimal_orbit_rank(input, v);
    cert.found = cert.rank == input.n;
    return cert.found;
  };
  if (input.base_point) {
    test(*input.base_point);
    return cert;
  }
  for (std::size_t attempt = 0; attempt < 5; ++attempt)
    if (test(generic_point(input.n, seed, attempt))) break;
  return cert;
}

MatrixGroupInput polex_group(std::size_t n) {
  MatrixGroupInput g;
  g.n = 2 * n;
  g.lie_basis.push_back(Matrix::identity(2 * n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Matrix e(2 * n, 2 * n);
      e(i, n + j) = 1;
      g.lie_basis.push_back(std::move(e));
    }
  return g;
}

}  // namespace prehom
