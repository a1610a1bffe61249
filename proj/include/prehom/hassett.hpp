#pragma once

#include "prehom/algebra.hpp"
#include "prehom/errors.hpp"

#include <map>
#include <span>
#include <string>
#include <vector>

namespace prehom {

/// Rectangular matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, const Variables& vars);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Variables& variables() const { return vars_; }
  Polynomial& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Polynomial& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Variables vars_;
  std::vector<Polynomial> data_;
};

/// rho(lambda, alpha) acting on column vectors: per local summand the block is
/// lambda_i times multiplication by exp(sum_j alpha_j r_j), r_j the summand's
/// radical basis. Parameters are named l1..lr (torus) and a1..as (additive).
struct ParamMatrixRep {
  std::size_t n = 0;
  std::vector<std::string> torus_params;
  std::vector<std::string> additive_params;
  Variables variables;  // torus parameters, then additive parameters
  PolyMatrix entries;
  std::vector<std::vector<std::size_t>> layout;  // rows/columns of each summand
  std::vector<std::string> basis_labels;
  std::vector<Vector> basis;                  // representation basis, algebra coordinates
  std::vector<Vector> additive_directions;    // r_j in representation coordinates
};

/// sum_k a^k / k!. Throws NotNilpotent.
Vector exp_element(const FiniteAlgebra& alg, const Vector& a);
/// Symbolic coordinates; same series.
std::vector<Polynomial> exp_element(const FiniteAlgebra& alg, const std::vector<Polynomial>& a);
/// sum_{k>=1} (-1)^{k+1} m^k / k with m = u - 1. Throws NotNilpotent when u is not unipotent.
Vector log_element(const FiniteAlgebra& alg, const Vector& u);

/// Product of coordinate vectors with polynomial entries.
std::vector<Polynomial> multiply_symbolic(const FiniteAlgebra& alg, const std::vector<Polynomial>& a,
                                          const std::vector<Polynomial>& b);

/// The algebra re-expressed in the basis of the given monomials (e.g. {"1","x1","x1^3"}).
/// Throws InvalidBasis unless they form a basis of the quotient.
FiniteAlgebra rebase(const QuotientAlgebra& q, std::span<const std::string> monomials);

/// Representation in the basis obtained by concatenating the summand bases of the
/// local decomposition; for local algebras and block sums this is the algebra's own basis.
ParamMatrixRep matrix_rep(const FiniteAlgebra& alg, std::uint64_t seed = 0);
ParamMatrixRep matrix_rep(const QuotientAlgebra& q, std::span<const std::string> basis_override,
                          std::uint64_t seed = 0);

/// Throws EvaluationError on a missing parameter or a zero torus value.
Matrix evaluate_rep(const ParamMatrixRep& rep, const std::map<std::string, Rational>& values);

/// rho(1,0) = I and rho(l,a) rho(m,b) = rho(l*m, a+b), checked symbolically with a
/// disjoint second alphabet (m1.., b1..).
bool verify_homomorphism(const ParamMatrixRep& rep);

/// Exact determinant, computed block by block.
Polynomial det_rep(const ParamMatrixRep& rep);

/// Derivatives at the identity, one matrix per parameter (torus first).
std::vector<Matrix> lie_basis(const ParamMatrixRep& rep);

/// pmatrix environment; torus factors pulled out, fractional terms grouped by denominator.
std::string to_latex(const ParamMatrixRep& rep);

class EvaluationError : public Error {
 public:
  using Error::Error;
};

}  // namespace prehom
