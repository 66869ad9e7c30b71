#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dk/linalg/matrix.hpp"

namespace dk::linalg {

/// Dimensions of a graded vector space in degrees 0..T, with optional basis labels.
class GradedVectorSpace {
 public:
  GradedVectorSpace() = default;
  explicit GradedVectorSpace(std::vector<int> dims, std::vector<std::vector<std::string>> labels = {});

  int top_degree() const { return static_cast<int>(dims_.size()) - 1; }
  int dim(int degree) const;
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<std::vector<std::string>>& labels() const { return labels_; }
  bool has_labels() const { return !labels_.empty(); }

  friend bool operator==(const GradedVectorSpace&, const GradedVectorSpace&) = default;

 private:
  std::vector<int> dims_;
  std::vector<std::vector<std::string>> labels_;
};

/// Finite-type chain complex in degrees 0..T with differentials d_k : C_k -> C_{k-1}.
/// Construction verifies shapes and d_{k} d_{k+1} = 0.
class ChainComplex {
 public:
  ChainComplex() = default;
  /// differentials[k-1] is d_k, for k = 1..T.
  ChainComplex(GradedVectorSpace spaces, std::vector<Matrix> differentials);
  ChainComplex(std::vector<int> dims, std::vector<Matrix> differentials)
      : ChainComplex(GradedVectorSpace(std::move(dims)), std::move(differentials)) {}

  /// K in degree k (S^k), truncated at top.
  static ChainComplex sphere(int k, int top);
  /// K in degrees k-1 and k with identity differential (D^k; D^0 = K[0]), truncated at top.
  static ChainComplex disk(int k, int top);
  static ChainComplex zero(int top);
  static ChainComplex direct_sum(const ChainComplex& a, const ChainComplex& b);

  int top_degree() const { return spaces_.top_degree(); }
  int dim(int degree) const { return spaces_.dim(degree); }
  const GradedVectorSpace& spaces() const { return spaces_; }
  /// d_k for 1 <= k <= T.
  const Matrix& differential(int k) const;
  const std::vector<Matrix>& differentials() const { return differentials_; }

  friend bool operator==(const ChainComplex&, const ChainComplex&) = default;

 private:
  GradedVectorSpace spaces_;
  std::vector<Matrix> differentials_;
};

struct HomologyResult {
  int dimension = 0;
  /// Cycles whose classes form a basis of H_k.
  std::vector<SparseVector> representatives;
  /// False at the top degree, where boundaries from degree T+1 are unknown.
  bool reliable = true;
};

HomologyResult homology(const ChainComplex& c, int k);

/// Chain map given by one matrix per degree 0..min(top degrees).
class ChainMap {
 public:
  ChainMap(ChainComplex source, ChainComplex target, std::vector<Matrix> components);
  static ChainMap identity(const ChainComplex& c);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  const Matrix& component(int k) const { return components_.at(static_cast<std::size_t>(k)); }
  int top_degree() const { return static_cast<int>(components_.size()) - 1; }

 private:
  ChainComplex source_;
  ChainComplex target_;
  std::vector<Matrix> components_;
};

struct DegreeComparison {
  int degree;
  int source_dim;
  int target_dim;
  int induced_rank;
  bool bijective() const { return source_dim == target_dim && induced_rank == source_dim; }
};

struct QuasiIsoReport {
  bool verdict = true;
  std::vector<DegreeComparison> degrees;
};

/// Rank of the map induced on H_k by f.
DegreeComparison compare_homology(const ChainMap& f, int k);

/// Checks that f induces isomorphisms on H_0..H_d. Requires both complexes
/// truncated at T >= d + 1.
QuasiIsoReport is_quasi_iso(const ChainMap& f, int through_degree);

}  // namespace dk::linalg
