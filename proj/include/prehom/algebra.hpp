#pragma once

#include "prehom/groebner.hpp"
#include "prehom/linalg.hpp"
#include "prehom/presentation.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace prehom {

/// Finite-dimensional algebra given by structure constants:
/// b_i * b_j = sum_k c(i, j, k) b_k, with the unit given in coordinates.
/// Construction only checks shapes; verify_axioms reports the algebra laws.
class FiniteAlgebra {
 public:
  FiniteAlgebra(std::vector<std::string> labels, std::vector<Rational> constants, Vector unit);

  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector& unit() const { return unit_; }
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * n_ + j) * n_ + k];
  }
  /// Flattened tensor, index (i*n + j)*n + k.
  const std::vector<Rational>& constants() const { return c_; }

  Vector multiply(const Vector& a, const Vector& b) const;
  Vector basis_vector(std::size_t i) const { return unit_vector(n_, i); }
  Vector power(const Vector& a, unsigned k) const;

  /// Same algebra in the basis whose vectors are the columns of change (old coordinates).
  /// Throws InvalidBasis when change is singular.
  FiniteAlgebra change_basis(const Matrix& change, std::vector<std::string> labels) const;

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

 private:
  std::size_t n_;
  std::vector<std::string> labels_;
  std::vector<Rational> c_;
  Vector unit_;
};

/// A presentation together with its reduced basis and the resulting algebra in the
/// standard-monomial basis.
struct QuotientAlgebra {
  Presentation presentation;
  GroebnerBasis groebner;
  QuotientBasis basis;
  FiniteAlgebra algebra;

  /// Coordinates of the class of p in the standard-monomial basis.
  Vector coordinates(const Polynomial& p) const;
};

/// Degrevlex with the written variable order. Throws InfiniteDimensional, or
/// InvalidBasis when the ideal is the whole ring.
QuotientAlgebra quotient_algebra(const Presentation& p);
FiniteAlgebra from_quotient(const Presentation& p);

struct AxiomReport {
  struct Check {
    std::string law;
    bool ok;
    std::string detail;  // first counterexample when !ok
  };
  std::vector<Check> checks;  // commutativity, associativity, unit
  bool ok() const;
};

AxiomReport verify_axioms(const FiniteAlgebra& a);

/// Matrix of b -> a*b; column j holds a*b_j.
Matrix mult_operator(const FiniteAlgebra& alg, const Vector& a);
std::optional<Vector> try_inverse(const FiniteAlgebra& alg, const Vector& a);
bool is_nilpotent(const FiniteAlgebra& alg, const Vector& a);

/// Kernel of the trace form (a, b) -> tr L_{ab}. Throws AxiomViolation.
std::vector<Vector> nilradical(const FiniteAlgebra& alg);
/// Nilradical of codimension one.
bool is_geometrically_local(const FiniteAlgebra& alg);

/// Block sum; basis labels get a "pK:" prefix when there is more than one part.
FiniteAlgebra direct_sum(std::span<const FiniteAlgebra> parts);

struct LocalDecomposition {
  std::vector<Vector> idempotents;
  std::vector<std::vector<Vector>> summand_bases;  // reduced echelon basis of e_i A
  std::vector<FiniteAlgebra> summands;
};

/// Primitive orthogonal idempotents via a generic element of A/N, Lagrange
/// interpolation, and lifting by e <- 3e^2 - 2e^3. Summands are ordered by the
/// first pivot of their basis. Throws NonSplitResidue when the residue algebra does
/// not split over the rationals, AxiomViolation on non-algebras.
LocalDecomposition local_decomposition(const FiniteAlgebra& alg, std::uint64_t seed = 0);

/// dim m^i / m^{i+1} until m^i = 0. Throws NotLocal.
std::vector<std::size_t> hilbert_function(const FiniteAlgebra& alg);

struct Fingerprint {
  std::size_t dim;
  std::vector<std::size_t> hilbert;
  std::size_t socle_dim;
  std::vector<std::size_t> ann_filtration;  // dim ann(m^i), i = 1..length of hilbert
  std::size_t embedding_dim;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const FiniteAlgebra& alg);

struct Separation {
  std::string invariant;
  std::string left;
  std::string right;
};

/// First fingerprint field on which the two local algebras differ, or nullopt
/// (inconclusive). Never claims isomorphism.
std::optional<Separation> certify_nonisomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);
std::optional<Separation> certify_nonisomorphic(const Fingerprint& a, const Fingerprint& b);

/// Embedding dimension at most one. Throws NotLocal.
bool is_chain(const FiniteAlgebra& alg);

/// Number of orbits of the unit group on the algebra: the product of (n_i + 1)
/// over local summands when all are chain algebras, nullopt (infinitely many)
/// otherwise.
std::optional<std::uint64_t> orbit_count(const FiniteAlgebra& alg, std::uint64_t seed = 0);

bool is_square_zero_radical(const FiniteAlgebra& alg, std::uint64_t seed = 0);

/// One linear form per local summand, f_i(a) = tr(L_{e_i a}) / dim A_i, the
/// residue of a in the i-th summand. An element is invertible iff every form is
/// nonzero on it.
std::vector<Vector> unit_hyperplanes(const FiniteAlgebra& alg, std::uint64_t seed = 0);

std::string format_sequence(const std::vector<std::size_t>& v);

}  // namespace prehom
