#include "dk/linalg/sparse_vector.hpp"

#include <algorithm>

#include "dk/error.hpp"

namespace dk::linalg {

SparseVector::SparseVector(std::vector<Entry> entries) {
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.index < b.index; });
  for (auto& e : entries) {
    if (e.index < 0) throw PreconditionError("negative vector index");
    if (!entries_.empty() && entries_.back().index == e.index)
      entries_.back().value += e.value;
    else
      entries_.push_back(std::move(e));
    if (entries_.back().value.is_zero()) entries_.pop_back();
  }
}

SparseVector SparseVector::unit(int index, Scalar value) {
  SparseVector v;
  if (!value.is_zero()) v.entries_.push_back({index, std::move(value)});
  return v;
}

Scalar SparseVector::at(int index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, int i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) return it->value;
  return Scalar(0);
}

void SparseVector::add_scaled(const SparseVector& other, const Scalar& factor) {
  if (factor.is_zero() || other.empty()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->index < a->index) {
      merged.push_back({b->index, factor * b->value});
      ++b;
    } else {
      Scalar v = a->value + factor * b->value;
      if (!v.is_zero()) merged.push_back({a->index, std::move(v)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

void SparseVector::scale(const Scalar& factor) {
  if (factor.is_zero()) {
    entries_.clear();
    return;
  }
  for (auto& e : entries_) e.value *= factor;
}

SparseVector SparseVector::operator-() const {
  SparseVector r = *this;
  r.scale(-1);
  return r;
}

bool operator<(const SparseVector& a, const SparseVector& b) {
  return std::lexicographical_compare(
      a.entries_.begin(), a.entries_.end(), b.entries_.begin(), b.entries_.end(),
      [](const SparseVector::Entry& x, const SparseVector::Entry& y) {
        if (x.index != y.index) return x.index < y.index;
        return x.value < y.value;
      });
}

std::vector<Scalar> SparseVector::dense(int length) const {
  std::vector<Scalar> out(static_cast<std::size_t>(length));
  for (const auto& e : entries_) {
    if (e.index >= length) throw PreconditionError("vector index exceeds requested length");
    out[static_cast<std::size_t>(e.index)] = e.value;
  }
  return out;
}

Scalar dot(const SparseVector& a, const SparseVector& b) {
  Scalar s;
  auto x = a.entries().begin();
  auto y = b.entries().begin();
  while (x != a.entries().end() && y != b.entries().end()) {
    if (x->index < y->index) ++x;
    else if (y->index < x->index) ++y;
    else s += (x++)->value * (y++)->value;
  }
  return s;
}

}  // namespace dk::linalg
