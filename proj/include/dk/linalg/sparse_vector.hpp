#pragma once

#include <utility>
#include <vector>

#include "dk/linalg/scalar.hpp"

namespace dk::linalg {

/// Sparse column vector: (index, value) pairs sorted by index, no explicit zeros.
class SparseVector {
 public:
  struct Entry {
    int index;
    Scalar value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  SparseVector() = default;
  /// Entries may be unsorted and contain duplicates or zeros; they are normalized.
  explicit SparseVector(std::vector<Entry> entries);

  static SparseVector unit(int index, Scalar value = 1);

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  int leading_index() const { return entries_.empty() ? -1 : entries_.front().index; }
  Scalar at(int index) const;
  /// One past the largest stored index (0 when empty).
  int support_bound() const { return entries_.empty() ? 0 : entries_.back().index + 1; }

  /// this += factor * other
  void add_scaled(const SparseVector& other, const Scalar& factor);
  void scale(const Scalar& factor);

  SparseVector operator-() const;
  friend SparseVector operator+(SparseVector a, const SparseVector& b) { a.add_scaled(b, 1); return a; }
  friend SparseVector operator-(SparseVector a, const SparseVector& b) { a.add_scaled(b, -1); return a; }
  friend SparseVector operator*(const Scalar& c, SparseVector v) { v.scale(c); return v; }
  friend bool operator==(const SparseVector&, const SparseVector&) = default;
  friend bool operator<(const SparseVector& a, const SparseVector& b);

  std::vector<Scalar> dense(int length) const;

 private:
  std::vector<Entry> entries_;
};

Scalar dot(const SparseVector& a, const SparseVector& b);

}  // namespace dk::linalg
