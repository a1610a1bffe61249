#pragma once

#include "prehom/rational.hpp"

#include <optional>
#include <vector>

namespace prehom {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vector>& columns, std::size_t rows);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector column(std::size_t j) const;
  Vector row(std::size_t i) const;
  void set_column(std::size_t j, const Vector& v);
  /// Row-major flattening, used to treat matrices as vectors.
  const Vector& data() const { return data_; }

  Matrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& c, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Vector data_;
};

struct Echelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);
/// Some solution of m x = b, if any.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
Rational determinant(Matrix m);
std::optional<Matrix> inverse(const Matrix& m);

/// Reduced echelon basis of the span of the vectors (all of length dim).
/// Coordinates of a vector in the span are its entries at the returned pivots.
struct SpanBasis {
  std::vector<Vector> vectors;
  std::vector<std::size_t> pivots;
};
SpanBasis span_basis(const std::vector<Vector>& vectors, std::size_t dim);

bool in_span(const SpanBasis& basis, const Vector& v);

/// Vector arithmetic helpers.
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Rational& c, const Vector& a);

}  // namespace prehom
