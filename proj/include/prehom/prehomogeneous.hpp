#pragma once

#include "prehom/algebra.hpp"
#include "prehom/errors.hpp"
#include "prehom/linalg.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace prehom {

/// A commutative connected matrix group given by a spanning set of its Lie algebra.
struct MatrixGroupInput {
  std::size_t n = 0;
  std::vector<Matrix> lie_basis;
  std::optional<Vector> base_point;
};

/// True iff all pairs commute. Throws DimensionMismatch unless every matrix is n x n.
bool check_commutative(const MatrixGroupInput& input);
/// Linear independence of the Lie basis.
bool lie_basis_independent(const MatrixGroupInput& input);

/// dim span{X v : X in lie_basis}.
std::size_t infinitesimal_orbit_rank(const MatrixGroupInput& input, const Vector& v);

/// Basis of {X : XM = MX for every M in the Lie basis}.
std::vector<Matrix> commutant(const MatrixGroupInput& input);
/// Basis of the smallest unital matrix algebra containing the Lie basis.
std::vector<Matrix> associative_hull(const MatrixGroupInput& input);

/// Basis of the span of the matrices, as flattened vectors.
SpanBasis matrix_span(const std::vector<Matrix>& ms, std::size_t n);

struct ReconstructedAlgebra {
  FiniteAlgebra algebra;
  /// operators[k] is the commutant element sending the witness to the k-th basis vector.
  std::vector<Matrix> operators;
  Vector witness;
};

/// The algebra on V with u * w = X_u X_w v. Throws DimensionMismatch,
/// NonCommutativeCommutant or NotCyclic, checked in that order.
ReconstructedAlgebra reconstruct_algebra(const MatrixGroupInput& input, const Vector& v);

struct OpenOrbitCertificate {
  bool found = false;
  std::size_t rank = 0;
  Vector point;  // last point tested; the certifying point when found
  std::size_t attempts = 0;
};

/// Tests rank n at the base point if given, otherwise at up to five seeded integer
/// points with entries in [-9, 9].
OpenOrbitCertificate certify_open_orbit(const MatrixGroupInput& input, std::uint64_t seed = 0);

/// Seeded integer vector with entries in [-9, 9]; attempt k of the given seed.
Vector generic_point(std::size_t n, std::uint64_t seed, std::size_t attempt);

/// {I_2n} together with the units E_{i, n+j}: the group of [[tE, tA], [0, tE]].
MatrixGroupInput polex_group(std::size_t n);

}  // namespace prehom
