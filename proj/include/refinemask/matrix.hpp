#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "refinemask/rational.hpp"

namespace refinemask {

using Vector = std::vector<Rational>;

/// Small dense row-major rational matrix. Immutable once built.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix.
  Matrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionMismatch unless entries.size() == rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Rational> diag);
  /// Every column must have the same length.
  static Matrix from_columns(std::span<const Vector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector diagonal_entries() const;
  const std::vector<Rational>& entries() const { return entries_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Throws DimensionMismatch when a.cols() != b.rows().
Matrix mat_mul(const Matrix& a, const Matrix& b);
Vector mat_vec(const Matrix& a, std::span<const Rational> x);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, const Matrix& a);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

/// Back-substitution for an upper triangular system u x = b. Entries below
/// the diagonal are ignored. Throws SingularMatrix on a zero diagonal entry.
Vector solve_upper_triangular(const Matrix& u, std::span<const Rational> b);

/// Gaussian elimination with the first nonzero pivot in each column.
/// Throws SingularMatrix when a has no inverse.
Vector solve_general(const Matrix& a, std::span<const Rational> b);

/// Solves sum_j x_j^i a_j = b_i for i = 0..n (the transposed Vandermonde
/// system with rows indexed by power) through Lagrange basis coefficients.
/// Throws SingularMatrix when two nodes coincide.
Vector solve_vandermonde(std::span<const Rational> nodes, std::span<const Rational> b);

}  // namespace refinemask
