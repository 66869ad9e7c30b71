#include "dk/linalg/subspace.hpp"

#include <algorithm>

#include "dk/error.hpp"

namespace dk::linalg {

Subspace::Subspace(int ambient_dim)
    : ambient_dim_(ambient_dim), pivot_row_(static_cast<std::size_t>(ambient_dim), -1) {}

Subspace::Subspace(int ambient_dim, const std::vector<SparseVector>& spanning) : Subspace(ambient_dim) {
  for (const auto& v : spanning) insert(v);
}

SparseVector Subspace::reduce(SparseVector v) const {
  if (v.support_bound() > ambient_dim_) throw PreconditionError("vector exceeds ambient dimension");
  std::size_t pos = 0;
  while (pos < v.size()) {
    const auto& e = v.entries()[pos];
    int r = pivot_row_[static_cast<std::size_t>(e.index)];
    if (r < 0) {
      ++pos;
      continue;
    }
    // Rows are monic at the pivot and only touch indices >= pivot, so entries
    // before pos are untouched and the pivot entry vanishes.
    Scalar factor = -e.value;
    v.add_scaled(rows_[static_cast<std::size_t>(r)], factor);
  }
  return v;
}

bool Subspace::insert(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Scalar lead = v.entries().front().value;
  v.scale(Scalar(1) / lead);
  pivot_row_[static_cast<std::size_t>(v.leading_index())] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(v));
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

std::vector<int> Subspace::pivots() const {
  std::vector<int> p;
  for (int i = 0; i < ambient_dim_; ++i)
    if (pivot_row_[static_cast<std::size_t>(i)] >= 0) p.push_back(i);
  return p;
}

std::vector<int> Subspace::free_indices() const {
  std::vector<int> f;
  for (int i = 0; i < ambient_dim_; ++i)
    if (pivot_row_[static_cast<std::size_t>(i)] < 0) f.push_back(i);
  return f;
}

std::vector<SparseVector> Subspace::canonical_basis() const {
  std::vector<int> order = pivots();
  std::vector<SparseVector> basis;
  basis.reserve(order.size());
  // Back-substitute from the last pivot so each row is clear at every other pivot.
  std::vector<SparseVector> reduced(rows_.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int r = pivot_row_[static_cast<std::size_t>(*it)];
    SparseVector row = rows_[static_cast<std::size_t>(r)];
    std::vector<std::pair<int, Scalar>> hits;
    for (const auto& e : row.entries())
      if (e.index != *it && pivot_row_[static_cast<std::size_t>(e.index)] >= 0) hits.emplace_back(e.index, e.value);
    for (const auto& [idx, val] : hits)
      row.add_scaled(reduced[static_cast<std::size_t>(pivot_row_[static_cast<std::size_t>(idx)])], -val);
    reduced[static_cast<std::size_t>(r)] = std::move(row);
  }
  for (int p : order) basis.push_back(reduced[static_cast<std::size_t>(pivot_row_[static_cast<std::size_t>(p)])]);
  return basis;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_dim_ == b.ambient_dim_ && a.dim() == b.dim() && a.contains(b);
}

QuotientCoordinates::QuotientCoordinates(const Subspace& sub)
    : sub_(sub), free_(sub.free_indices()), position_(static_cast<std::size_t>(sub.ambient_dim()), -1) {
  for (std::size_t k = 0; k < free_.size(); ++k) position_[static_cast<std::size_t>(free_[k])] = static_cast<int>(k);
}

SparseVector QuotientCoordinates::coordinates(const SparseVector& v) const {
  SparseVector r = sub_.reduce(v);
  std::vector<SparseVector::Entry> out;
  out.reserve(r.size());
  for (const auto& e : r.entries()) {
    int k = position_[static_cast<std::size_t>(e.index)];
    if (k < 0) throw InvariantError("normal form touches a pivot");
    out.push_back({k, e.value});
  }
  return SparseVector(std::move(out));
}

std::optional<SparseVector> rref_coordinates(const std::vector<SparseVector>& rref_basis, const SparseVector& v) {
  std::vector<SparseVector::Entry> coords;
  SparseVector rest = v;
  for (std::size_t k = 0; k < rref_basis.size(); ++k) {
    const auto& b = rref_basis[k];
    Scalar c = v.at(b.leading_index());
    if (!c.is_zero()) {
      coords.push_back({static_cast<int>(k), c});
      rest.add_scaled(b, -c);
    }
  }
  if (!rest.empty()) return std::nullopt;
  return SparseVector(std::move(coords));
}

}  // namespace dk::linalg
