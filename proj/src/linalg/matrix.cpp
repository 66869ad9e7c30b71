#include "dk/linalg/matrix.hpp"

#include <algorithm>

#include "dk/error.hpp"
#include "dk/linalg/subspace.hpp"

namespace dk::linalg {

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw PreconditionError("negative matrix shape");
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.columns_[static_cast<std::size_t>(i)] = SparseVector::unit(i);
  return m;
}

Matrix Matrix::from_columns(int rows, std::vector<SparseVector> columns) {
  Matrix m(rows, static_cast<int>(columns.size()));
  for (const auto& c : columns)
    if (c.support_bound() > rows) throw PreconditionError("matrix column exceeds row count");
  m.columns_ = std::move(columns);
  return m;
}

Matrix Matrix::from_triplets(int rows, int cols, const std::vector<Triplet>& triplets) {
  std::vector<std::vector<SparseVector::Entry>> cols_data(static_cast<std::size_t>(cols));
  for (const auto& t : triplets) {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
      throw PreconditionError("matrix triplet out of bounds");
    cols_data[static_cast<std::size_t>(t.col)].push_back({t.row, t.value});
  }
  std::vector<SparseVector> columns;
  columns.reserve(cols_data.size());
  for (auto& c : cols_data) columns.emplace_back(std::move(c));
  return from_columns(rows, std::move(columns));
}

Matrix Matrix::from_dense(const std::vector<std::vector<Scalar>>& rows_data, int cols) {
  int r = static_cast<int>(rows_data.size());
  int c = cols >= 0 ? cols : (rows_data.empty() ? 0 : static_cast<int>(rows_data.front().size()));
  std::vector<Triplet> t;
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows_data[static_cast<std::size_t>(i)].size()) != c)
      throw PreconditionError("ragged dense matrix");
    for (int j = 0; j < c; ++j) {
      const Scalar& v = rows_data[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (!v.is_zero()) t.push_back({i, j, v});
    }
  }
  return from_triplets(r, c, t);
}

Scalar Matrix::at(int row, int col) const {
  if (row < 0 || row >= rows_ || col < 0 || col >= cols_) throw PreconditionError("matrix index out of bounds");
  return column(col).at(row);
}

bool Matrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& c) { return c.empty(); });
}

std::vector<Matrix::Triplet> Matrix::triplets() const {
  std::vector<Triplet> out;
  for (int j = 0; j < cols_; ++j)
    for (const auto& e : column(j).entries()) out.push_back({e.index, j, e.value});
  std::sort(out.begin(), out.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return out;
}

SparseVector Matrix::apply(const SparseVector& x) const {
  if (x.support_bound() > cols_) throw PreconditionError("vector length exceeds matrix columns");
  SparseVector y;
  for (const auto& e : x.entries()) y.add_scaled(column(e.index), e.value);
  return y;
}

Matrix Matrix::transpose() const {
  std::vector<Triplet> t;
  for (const auto& x : triplets()) t.push_back({x.col, x.row, x.value});
  return from_triplets(cols_, rows_, t);
}

Matrix Matrix::stack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_) throw PreconditionError("stack: column counts differ");
  std::vector<SparseVector> cols;
  cols.reserve(static_cast<std::size_t>(a.cols_));
  for (int j = 0; j < a.cols_; ++j) {
    std::vector<SparseVector::Entry> e = a.column(j).entries();
    for (const auto& x : b.column(j).entries()) e.push_back({x.index + a.rows_, x.value});
    cols.emplace_back(std::move(e));
  }
  return from_columns(a.rows_ + b.rows_, std::move(cols));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw PreconditionError("matrix product shape mismatch");
  std::vector<SparseVector> cols;
  cols.reserve(static_cast<std::size_t>(b.cols_));
  for (int j = 0; j < b.cols_; ++j) cols.push_back(a.apply(b.column(j)));
  return Matrix::from_columns(a.rows_, std::move(cols));
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix sum shape mismatch");
  std::vector<SparseVector> cols;
  for (int j = 0; j < a.cols_; ++j) cols.push_back(a.column(j) + b.column(j));
  return Matrix::from_columns(a.rows_, std::move(cols));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix difference shape mismatch");
  std::vector<SparseVector> cols;
  for (int j = 0; j < a.cols_; ++j) cols.push_back(a.column(j) - b.column(j));
  return Matrix::from_columns(a.rows_, std::move(cols));
}

int rank(const Matrix& m) {
  Subspace s(m.rows());
  for (const auto& c : m.columns()) s.insert(c);
  return s.dim();
}

std::vector<SparseVector> kernel_basis(const Matrix& m) {
  // Reduce the columns one at a time, carrying the combination that produced
  // each reduced column; a column that reduces to zero yields a kernel vector.
  struct Row {
    SparseVector value;
    SparseVector combo;
  };
  std::vector<int> pivot_row(static_cast<std::size_t>(m.rows()), -1);
  std::vector<Row> rows;
  Subspace kernel(m.cols());
  for (int j = 0; j < m.cols(); ++j) {
    SparseVector v = m.column(j);
    SparseVector combo = SparseVector::unit(j);
    std::size_t pos = 0;
    while (pos < v.size()) {
      const auto& e = v.entries()[pos];
      int r = pivot_row[static_cast<std::size_t>(e.index)];
      if (r < 0) {
        ++pos;
        continue;
      }
      Scalar factor = -e.value;
      const Row& row = rows[static_cast<std::size_t>(r)];
      v.add_scaled(row.value, factor);
      combo.add_scaled(row.combo, factor);
    }
    if (v.empty()) {
      kernel.insert(std::move(combo));
      continue;
    }
    Scalar inv = Scalar(1) / v.entries().front().value;
    v.scale(inv);
    combo.scale(inv);
    pivot_row[static_cast<std::size_t>(v.leading_index())] = static_cast<int>(rows.size());
    rows.push_back({std::move(v), std::move(combo)});
  }
  return kernel.canonical_basis();
}

std::vector<SparseVector> image_basis(const Matrix& m) {
  return Subspace(m.rows(), m.columns()).canonical_basis();
}

}  // namespace dk::linalg
