#pragma once

#include <optional>
#include <vector>

#include "dk/linalg/sparse_vector.hpp"

namespace dk::linalg {

/// Incrementally built subspace of K^n kept in echelon form. Pivots are the
/// leading (lowest) indices of the stored rows.
class Subspace {
 public:
  explicit Subspace(int ambient_dim = 0);
  Subspace(int ambient_dim, const std::vector<SparseVector>& spanning);

  int ambient_dim() const { return ambient_dim_; }
  int dim() const { return static_cast<int>(rows_.size()); }

  /// Adds v to the span. Returns true iff the dimension grew.
  bool insert(SparseVector v);
  /// Normal form of v modulo the subspace; supported on non-pivot indices.
  SparseVector reduce(SparseVector v) const;
  bool contains(const SparseVector& v) const { return reduce(v).empty(); }
  bool contains(const Subspace& other) const;

  /// Reduced row echelon basis ordered by pivot; depends only on the subspace.
  std::vector<SparseVector> canonical_basis() const;
  std::vector<int> pivots() const;
  /// Indices that are not pivots: the standard basis of the quotient K^n / this.
  std::vector<int> free_indices() const;

  friend bool operator==(const Subspace& a, const Subspace& b);

 private:
  int ambient_dim_;
  std::vector<int> pivot_row_;  // -1 when the index is not a pivot
  std::vector<SparseVector> rows_;
};

/// Coordinates of quotient vectors relative to K^n / sub, using its free indices.
class QuotientCoordinates {
 public:
  explicit QuotientCoordinates(const Subspace& sub);
  int dim() const { return static_cast<int>(free_.size()); }
  /// Coordinates of the class of v.
  SparseVector coordinates(const SparseVector& v) const;
  /// The ambient index representing quotient coordinate k.
  int representative(int k) const { return free_.at(static_cast<std::size_t>(k)); }
  const Subspace& subspace() const { return sub_; }

 private:
  Subspace sub_;
  std::vector<int> free_;
  std::vector<int> position_;  // ambient index -> quotient coordinate or -1
};

/// Coordinates of v in a reduced row echelon basis (entries at the pivots).
/// Returns nullopt when v is not in the span.
std::optional<SparseVector> rref_coordinates(const std::vector<SparseVector>& rref_basis,
                                             const SparseVector& v);

}  // namespace dk::linalg
