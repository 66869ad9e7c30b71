#pragma once

#include <tuple>
#include <vector>

#include "dk/linalg/sparse_vector.hpp"

namespace dk::linalg {

/// Sparse exact matrix stored by columns. Acts on column vectors: a map from a
/// `cols`-dimensional space to a `rows`-dimensional one.
class Matrix {
 public:
  struct Triplet {
    int row;
    int col;
    Scalar value;
    friend bool operator==(const Triplet&, const Triplet&) = default;
  };

  Matrix() = default;
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }
  static Matrix from_columns(int rows, std::vector<SparseVector> columns);
  static Matrix from_triplets(int rows, int cols, const std::vector<Triplet>& triplets);
  static Matrix from_dense(const std::vector<std::vector<Scalar>>& rows_data, int cols = -1);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const SparseVector& column(int j) const { return columns_.at(static_cast<std::size_t>(j)); }
  const std::vector<SparseVector>& columns() const { return columns_; }
  Scalar at(int row, int col) const;
  bool is_zero() const;

  /// Row-major ordered nonzero entries.
  std::vector<Triplet> triplets() const;

  SparseVector apply(const SparseVector& x) const;
  Matrix transpose() const;
  /// Rows of `a` followed by rows of `b` (same column count).
  static Matrix stack(const Matrix& a, const Matrix& b);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<SparseVector> columns_;
};

int rank(const Matrix& m);

/// Basis of ker(m), in reduced row echelon form (canonical for the subspace).
std::vector<SparseVector> kernel_basis(const Matrix& m);

/// Canonical basis of the column space of m.
std::vector<SparseVector> image_basis(const Matrix& m);

}  // namespace dk::linalg
