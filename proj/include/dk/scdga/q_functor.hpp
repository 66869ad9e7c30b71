#pragma once

#include <map>
#include <vector>

#include "dk/cdga/free_cdga.hpp"
#include "dk/scdga/simplicial_algebra.hpp"

namespace dk::scdga {

/// Q(A): levelwise free on Gamma of the underlying complex of A, modulo the
/// simplicial ideal generated by mu(Gamma x, Gamma y) - Gamma(x y).
/// Generators are pairs (monomial x of A of positive weight, surjection
/// [n] ->> [deg x]); Gamma of the unit is the unit.
struct QFunctor {
  struct Key {
    Monomial x;
    simplicial::Surjection sigma;
    friend auto operator<=>(const Key&, const Key&) = default;
    friend bool operator==(const Key&, const Key&) = default;
  };

  cdga::FreeCDGA source;
  int max_weight = 0;
  SimplicialPolynomialAlgebra algebra;
  std::vector<std::vector<Key>> keys;
  std::vector<std::map<Key, std::size_t>> index;

  int top_level() const { return algebra.top_level(); }
  /// Gamma-image at level n of the polynomial p of A (degree k) along sigma : [n] ->> [k].
  /// Weight-0 terms map to constants.
  Polynomial gamma(int level, const cdga::Polynomial& p, const simplicial::Surjection& sigma) const;
  /// Gamma(x) on the identity surjection.
  Polynomial gamma(const cdga::Polynomial& p) const;
};

QFunctor q_functor(const cdga::FreeCDGA& a, int top, int max_weight);

struct BidegreeComparison {
  int degree = 0;
  int weight = 0;
  int source_dim = 0;
  int target_dim = 0;
  int induced_rank = 0;
  bool bijective() const { return source_dim == target_dim && induced_rank == source_dim; }
};

/// The unit A -> N Q(A), x |-> class of Gamma x, checked per bidegree.
struct UnitMapCertificate {
  int max_degree = 0;  // T; homology is compared through T - 1
  int max_weight = 0;
  /// matrices[w][k]: basis(k, w) of A into the normalized basis of N_k of the weight-w slice.
  std::vector<std::vector<linalg::Matrix>> matrices;
  std::vector<BidegreeComparison> comparisons;
  bool verdict = true;
};

UnitMapCertificate beta(const QFunctor& q);

/// Levelwise algebra map given by the images of every source generator.
struct SimplicialAlgebraMap {
  std::vector<std::vector<Polynomial>> images;  // images[n][g] over target level n
  /// Every generator maps to itself modulo the relations.
  bool is_identity(const SimplicialPolynomialAlgebra& source) const;
};

/// phi sends each monomial x of A (positive weight, degree <= T) to a normalized
/// element of B at level deg x. Throws PreconditionError if phi is not a chain
/// map into the normalized chains or does not kill the relations.
SimplicialAlgebraMap induced_theta(const QFunctor& q, const SimplicialPolynomialAlgebra& b,
                                   const std::map<Monomial, Polynomial>& phi);

/// Extends values on the generators of A to all monomials by shuffle products.
std::map<Monomial, Polynomial> extend_by_products(const QFunctor& q, const SimplicialPolynomialAlgebra& b,
                                                  const std::vector<Polynomial>& generator_values);

struct ConnectivityEntry {
  int degree = 0;
  int weight = 0;
  int dimension = 0;
};

struct ConnectivityReport {
  int power = 0;
  int through_degree = 0;
  std::vector<ConnectivityEntry> entries;
  bool verdict = true;
};

/// pi_q of the span of words of length >= r vanishes for q <= min(r-1, T-1),
/// each weight 0..max_weight. B must be reduced.
ConnectivityReport connectivity_check(const SimplicialPolynomialAlgebra& b, int r, int max_weight);

struct KernelIdealEntry {
  int weight = 0;
  int kernel_dim = 0;
  int span_dim = 0;
  bool contained = true;
};

struct KernelIdealReport {
  std::vector<KernelIdealEntry> entries;
  bool verdict = true;
};

/// In the free algebra on the reduced chains of the n-sphere, compares ker d_i
/// at level k with the ideal spanned by s_J x - s_J' x (J containing i but not
/// i-1, J' = J with i replaced by i-1) and s_J x (i, i-1 not in J), per weight.
KernelIdealReport face_kernel_ideal_check(int n, int k, int i, int max_weight);

struct IndecomposablesEntry {
  int degree = 0;
  int weight = 0;
  int generators = 0;       // dim of (A-bar / A-bar^2) in bidegree (degree, weight)
  int indecomposables = 0;  // dim N_degree of the weight slice of Q(A)-bar / Q(A)-bar^2
};

struct IndecomposablesReport {
  std::vector<IndecomposablesEntry> entries;
  bool verdict = true;
};

/// Compares generators of A with the normalized indecomposables of Q(A), per
/// bidegree with degree <= T and weight <= W.
IndecomposablesReport indecomposables_check(const QFunctor& q);

}  // namespace dk::scdga
