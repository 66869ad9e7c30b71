#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dk/cdga/free_cdga.hpp"
#include "dk/linalg/subspace.hpp"
#include "dk/simplicial/simplicial_vector_space.hpp"

namespace dk::scdga {

using cdga::Monomial;
using cdga::Polynomial;
using linalg::SparseVector;
using simplicial::MonotoneMap;
using simplicial::SimplicialVectorSpace;

struct LevelGenerator {
  std::string label;
  int weight = 1;
};

/// Simplicial commutative algebra, levelwise polynomial on weighted generators,
/// modulo the simplicial ideal generated by finitely many relations, truncated
/// at level T. Every slice (level n, weight w) is finite-dimensional.
class SimplicialPolynomialAlgebra {
 public:
  using Images = std::vector<Polynomial>;

  /// faces[n-1][i][g] is d_i of generator g of level n (a polynomial over level n-1);
  /// degeneracies[n][j][g] is s_j of generator g of level n (over level n+1);
  /// relations[n] are relation generators living at level n.
  SimplicialPolynomialAlgebra(std::vector<std::vector<LevelGenerator>> generators,
                              std::vector<std::vector<Images>> faces, std::vector<std::vector<Images>> degeneracies,
                              std::vector<std::vector<Polynomial>> relations = {},
                              std::optional<int> max_weight = std::nullopt);

  int top_level() const { return static_cast<int>(generators_.size()) - 1; }
  /// Slices above this weight are not modelled (generators were cut off).
  std::optional<int> max_weight() const { return max_weight_; }
  const cdga::FreeCDGA& level(int n) const { return levels_.at(static_cast<std::size_t>(n)); }
  const std::vector<LevelGenerator>& generators(int n) const { return generators_.at(static_cast<std::size_t>(n)); }
  const std::vector<Polynomial>& relations(int n) const { return relations_.at(static_cast<std::size_t>(n)); }
  /// Level 0 is the ground field.
  bool is_reduced() const { return generators_.front().empty(); }
  std::string str(int n, const Polynomial& p) const;

  Polynomial face(int n, int i, const Polynomial& p) const;
  Polynomial degeneracy(int n, int j, const Polynomial& p) const;
  /// theta^* for theta : [m] -> [n]; p lives at level n, the result at level m.
  Polynomial apply(const MonotoneMap& theta, const Polynomial& p) const;
  /// Shuffle product of x (level p) and y (level q), landing at level p + q.
  Polynomial ez_product(int p, const Polynomial& x, int q, const Polynomial& y) const;

  struct Slice {
    std::vector<Monomial> basis;
    linalg::Subspace relations;
    linalg::QuotientCoordinates quotient;
  };
  const Slice& slice(int n, int w) const;
  int quotient_dim(int n, int w) const { return slice(n, w).quotient.dim(); }
  /// Quotient coordinates of a weight-w polynomial at level n.
  SparseVector reduce(int n, int w, const Polynomial& p) const;
  /// Representative polynomial of a vector in quotient coordinates.
  Polynomial lift(int n, int w, const SparseVector& v) const;
  /// True when p lies in the relation ideal (each weight part checked separately).
  bool vanishes(int n, const Polynomial& p) const;

  /// Weight-w slice as a simplicial vector space in quotient coordinates.
  const SimplicialVectorSpace& slice_space(int w) const;
  /// Per level, the image in slice_space(w) of the monomials of length >= r.
  std::vector<linalg::Subspace> length_filtration(int w, int r) const;

  /// Simplicial identities on every generator, checked modulo the relations.
  std::vector<std::string> identity_violations() const;

 private:
  struct Cache;
  const Images& operator_images(const MonotoneMap& theta) const;
  Polynomial substitute(int to_level, const Images& images, const Polynomial& p) const;
  void check_weight(int w) const;

  std::vector<std::vector<LevelGenerator>> generators_;
  std::vector<cdga::FreeCDGA> levels_;
  std::vector<std::vector<Images>> faces_;
  std::vector<std::vector<Images>> degeneracies_;
  std::vector<std::vector<Polynomial>> relations_;
  std::optional<int> max_weight_;
  std::shared_ptr<Cache> cache_;
};

/// Levelwise symmetric algebra on a simplicial vector space; generators have weight 1.
SimplicialPolynomialAlgebra free_simplicial_algebra(const SimplicialVectorSpace& v);

/// Normalized chains of the weight-w slice, differential d_0.
linalg::ChainComplex normalized_algebra_complex(const SimplicialPolynomialAlgebra& b, int w);
simplicial::HomotopyResult homotopy(const SimplicialPolynomialAlgebra& b, int q, int w);

}  // namespace dk::scdga
