#pragma once

// Dense and sparse exact linear algebra over the rationals.

#include <cstddef>
#include <optional>
#include <vector>

#include "ncdef/rational.hpp"

namespace ncdef {

using Vector = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;
  Matrix transpose() const;
  Vector row(std::size_t i) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& c);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(const Rational& c, Matrix a);

/// Row vector times matrix.
Vector operator*(const Vector& v, const Matrix& m);

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of { x : m x = 0 }.
std::vector<Vector> nullspace(const Matrix& m);

/// Some solution of m x = b, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

bool is_invertible(const Matrix& m);

/// Block-diagonal matrix [a 0; 0 b].
Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// Matrix whose columns are the given vectors (all of length `height`).
Matrix from_columns(const std::vector<Vector>& columns, std::size_t height);

/// Incrementally built subspace of a coordinate space. Rows are kept with
/// leading coefficient 1 at their largest index; reduction eliminates every
/// pivot index, so a reduced vector is a canonical representative modulo the span.
class SparseEchelon {
 public:
  /// Adds v to the span; returns false if v was already in it.
  bool insert(const SparseVector& v);
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  bool is_pivot(int index) const { return rows_.count(index) != 0; }
  std::size_t size() const { return rows_.size(); }

 private:
  std::map<int, SparseVector> rows_;
};

SparseVector to_sparse(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t n);

}  // namespace ncdef
