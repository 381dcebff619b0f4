#include "refinemask/matrix.hpp"

#include <string>
#include <utility>

#include "refinemask/error.hpp"

namespace refinemask {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionMismatch("matrix entry count " + std::to_string(entries_.size()) +
                            " does not match " + std::to_string(rows) + "x" + std::to_string(cols));
  }
}

Matrix Matrix::identity(std::size_t n) {
  std::vector<Rational> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = 1;
  return Matrix(n, n, std::move(e));
}

Matrix Matrix::diagonal(std::span<const Rational> diag) {
  const std::size_t n = diag.size();
  std::vector<Rational> e(n * n);
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = diag[i];
  return Matrix(n, n, std::move(e));
}

Matrix Matrix::from_columns(std::span<const Vector> columns) {
  if (columns.empty()) return Matrix();
  const std::size_t rows = columns.front().size();
  const std::size_t cols = columns.size();
  std::vector<Rational> e(rows * cols);
  for (std::size_t c = 0; c < cols; ++c) {
    if (columns[c].size() != rows) throw DimensionMismatch("ragged columns");
    for (std::size_t r = 0; r < rows; ++r) e[r * cols + c] = columns[c][r];
  }
  return Matrix(rows, cols, std::move(e));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::diagonal_entries() const {
  Vector v;
  for (std::size_t i = 0; i < rows_ && i < cols_; ++i) v.push_back((*this)(i, i));
  return v;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("cannot multiply " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + " by " + std::to_string(b.rows()) + "x" +
                            std::to_string(b.cols()));
  }
  std::vector<Rational> e(a.rows() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) e[i * b.cols() + j] += a(i, k) * b(k, j);
    }
  }
  return Matrix(a.rows(), b.cols(), std::move(e));
}

Vector mat_vec(const Matrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw DimensionMismatch("matrix-vector size mismatch");
  Vector y(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) y[i] += a(i, k) * x[k];
  }
  return y;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum");
  std::vector<Rational> e = a.entries();
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += b.entries()[i];
  return Matrix(a.rows(), a.cols(), std::move(e));
}

Matrix operator*(const Rational& s, const Matrix& a) {
  std::vector<Rational> e = a.entries();
  for (auto& x : e) x *= s;
  return Matrix(a.rows(), a.cols(), std::move(e));
}

Vector solve_upper_triangular(const Matrix& u, std::span<const Rational> b) {
  const std::size_t n = u.rows();
  if (u.cols() != n || b.size() != n) throw DimensionMismatch("triangular solve needs a square system");
  Vector x(n);
  for (std::size_t i = n; i-- > 0;) {
    if (u(i, i).is_zero()) throw SingularMatrix("zero diagonal entry in triangular solve");
    Rational acc = b[i];
    for (std::size_t j = i + 1; j < n; ++j) acc -= u(i, j) * x[j];
    x[i] = acc / u(i, i);
  }
  return x;
}

Vector solve_general(const Matrix& a, std::span<const Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) throw DimensionMismatch("general solve needs a square system");

  // Augmented working copy [a | b].
  std::vector<Vector> rows(n, Vector(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = a(i, j);
    rows[i][n] = b[i];
  }

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular");
    std::swap(rows[col], rows[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (rows[r][col].is_zero()) continue;
      const Rational factor = rows[r][col] / rows[col][col];
      for (std::size_t j = col; j <= n; ++j) rows[r][j] -= factor * rows[col][j];
    }
  }

  Vector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational acc = rows[i][n];
    for (std::size_t j = i + 1; j < n; ++j) acc -= rows[i][j] * x[j];
    x[i] = acc / rows[i][i];
  }
  return x;
}

Vector solve_vandermonde(std::span<const Rational> nodes, std::span<const Rational> b) {
  const std::size_t n = nodes.size();
  if (b.size() != n) throw DimensionMismatch("vandermonde solve needs one value per node");
  if (n == 0) return {};

  // master(x) = prod_k (x - nodes[k]), ascending coefficients, degree n.
  Vector master{Rational(1)};
  for (const auto& node : nodes) {
    Vector next(master.size() + 1);
    for (std::size_t i = 0; i < master.size(); ++i) {
      next[i + 1] += master[i];
      next[i] -= node * master[i];
    }
    master = std::move(next);
  }

  // Row j of the inverse holds the coefficients of the j-th Lagrange basis
  // polynomial master(x) / ((x - nodes[j]) * master'(nodes[j])).
  Vector a(n);
  Vector quotient(n);
  for (std::size_t j = 0; j < n; ++j) {
    Rational carry = master[n];
    for (std::size_t i = n; i-- > 0;) {
      quotient[i] = carry;
      carry = master[i] + nodes[j] * carry;
    }
    Rational denom;
    Rational power = 1;
    for (std::size_t i = 0; i < n; ++i) {
      denom += quotient[i] * power;
      power *= nodes[j];
    }
    if (denom.is_zero()) throw SingularMatrix("vandermonde nodes are not pairwise distinct");
    Rational acc;
    for (std::size_t i = 0; i < n; ++i) acc += quotient[i] * b[i];
    a[j] = acc / denom;
  }
  return a;
}

}  // namespace refinemask
