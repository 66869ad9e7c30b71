#pragma once

#include <string>
#include <vector>

#include "dk/linalg/chain_complex.hpp"
#include "dk/linalg/subspace.hpp"
#include "dk/simplicial/simplex_ops.hpp"

namespace dk::simplicial {

using linalg::ChainComplex;
using linalg::GradedVectorSpace;
using linalg::Matrix;
using linalg::SparseVector;

/// Finite-type simplicial vector space truncated at level T. Faces d_i are
/// stored for levels 1..T and degeneracies s_j for levels 0..T-1. The
/// simplicial identities are verified on construction.
class SimplicialVectorSpace {
 public:
  SimplicialVectorSpace() = default;
  /// faces[n-1][i] : level n -> n-1 (n = 1..T, i = 0..n);
  /// degeneracies[n][j] : level n -> n+1 (n = 0..T-1, j = 0..n).
  SimplicialVectorSpace(GradedVectorSpace levels, std::vector<std::vector<Matrix>> faces,
                        std::vector<std::vector<Matrix>> degeneracies);

  static SimplicialVectorSpace constant(int dim, int top);
  static SimplicialVectorSpace direct_sum(const SimplicialVectorSpace& a, const SimplicialVectorSpace& b);

  int top_level() const { return levels_.top_degree(); }
  int dim(int level) const { return levels_.dim(level); }
  const GradedVectorSpace& levels() const { return levels_; }
  const Matrix& face(int level, int i) const;
  const Matrix& degeneracy(int level, int j) const;
  const std::vector<std::vector<Matrix>>& faces() const { return faces_; }
  const std::vector<std::vector<Matrix>>& degeneracies() const { return degeneracies_; }

  /// Descriptions of every violated simplicial identity (empty when valid).
  std::vector<std::string> identity_violations() const;

  friend bool operator==(const SimplicialVectorSpace&, const SimplicialVectorSpace&) = default;

 private:
  GradedVectorSpace levels_;
  std::vector<std::vector<Matrix>> faces_;
  std::vector<std::vector<Matrix>> degeneracies_;
};

/// Normalized chains together with the canonical (RREF) basis of each
/// N_k = intersection of ker d_i, i = 1..k, inside level k.
struct Normalization {
  ChainComplex complex;
  std::vector<std::vector<SparseVector>> bases;
};

/// Moore complex with differential d_0 restricted to the intersection of ker d_i, i >= 1.
Normalization normalize(const SimplicialVectorSpace& v);
ChainComplex normalized_chains(const SimplicialVectorSpace& v);

/// Dold-Kan inverse: level n is the sum over surjections [n] ->> [k] of c_k.
SimplicialVectorSpace gamma(const ChainComplex& c);

/// One summand of gamma(c) at a given level.
struct GammaSummand {
  Surjection surjection;
  int offset;  // first coordinate of the summand
  int dim;     // = dim c_k
};
/// Summands of level n of gamma(c), in coordinate order (identity summand first).
std::vector<GammaSummand> gamma_summands(const ChainComplex& c, int level);

struct HomotopyResult {
  int dimension = 0;
  bool reliable = true;
};

/// pi_k as the homology of the normalized chains.
HomotopyResult homotopy_normalized(const SimplicialVectorSpace& v, int k);
/// pi_k from the intersection-of-kernels quotient, without building N. Requires k <= T-1.
HomotopyResult homotopy_moore(const SimplicialVectorSpace& v, int k);

/// Span of the images of all degeneracies into level k.
linalg::Subspace degenerate_subspace(const SimplicialVectorSpace& v, int k);

/// Sub-simplicial space spanned per level by the given vectors. Throws
/// PreconditionError if some structure map leaves the subspaces.
SimplicialVectorSpace restrict_to(const SimplicialVectorSpace& v, const std::vector<linalg::Subspace>& subspaces);
/// Levelwise quotient by structure-map-stable subspaces, in the coordinates
/// given by their free indices.
SimplicialVectorSpace quotient_by(const SimplicialVectorSpace& v, const std::vector<linalg::Subspace>& subspaces);

/// Reduced chains of Delta^k / boundary (the simplicial k-sphere), built from
/// the simplices [n] -> [k] directly.
SimplicialVectorSpace reduced_sphere_chains(int k, int top);
/// Reduced chains of Delta^k / Lambda^k_0 (k >= 1).
SimplicialVectorSpace reduced_disk_chains(int k, int top);

}  // namespace dk::simplicial
