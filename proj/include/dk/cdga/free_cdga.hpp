#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dk/linalg/chain_complex.hpp"
#include "dk/linalg/scalar.hpp"

namespace dk::cdga {

using linalg::Scalar;

struct GeneratorSpec {
  std::string name;
  int degree = 0;
  /// Absent for algebras used only pointwise.
  std::optional<int> weight;

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

/// Exponent vector over the generators of an algebra, in canonical order.
/// Odd generators carry exponent 0 or 1.
using Monomial = std::vector<int>;

/// Finite linear combination of monomials. Zero coefficients are never stored.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial constant(const Scalar& c, std::size_t generator_count);
  static Polynomial monomial(Monomial m, Scalar c = Scalar(1));

  const std::map<Monomial, Scalar>& terms() const& { return terms_; }
  std::map<Monomial, Scalar> terms() && { return std::move(terms_); }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;
  void add(const Monomial& m, const Scalar& c);

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  Polynomial operator-() const;
  friend Polynomial operator*(const Scalar& c, const Polynomial& p);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::map<Monomial, Scalar> terms_;
};

struct BigradedHomology {
  int dimension = 0;
  std::vector<Polynomial> representatives;
};

/// Semifree graded-commutative DG algebra over Q. Generators are kept sorted
/// by (degree, name); all monomials and polynomials index into that order.
/// Construction checks degrees, weights, d = 0 on degree 0 and d^2 = 0.
class FreeCDGA {
 public:
  /// The ground field K.
  FreeCDGA() = default;
  /// Differentials as polynomial strings keyed by generator name; missing means 0.
  FreeCDGA(std::vector<GeneratorSpec> generators, const std::map<std::string, std::string>& differential);
  /// Differentials given as polynomials in the canonical generator order.
  FreeCDGA(std::vector<GeneratorSpec> sorted_generators, std::vector<Polynomial> differential);

  const std::vector<GeneratorSpec>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  std::optional<std::size_t> index_of(const std::string& name) const;
  const Polynomial& differential_of(std::size_t i) const { return differential_.at(i); }
  /// True when every generator has a weight (then d is weight-homogeneous).
  bool weight_graded() const { return weight_graded_; }
  bool is_odd(std::size_t i) const { return generators_[i].degree % 2 != 0; }

  Monomial unit_monomial() const { return Monomial(generators_.size(), 0); }
  Polynomial one() const { return Polynomial::constant(Scalar(1), generators_.size()); }
  Polynomial constant(const Scalar& c) const { return Polynomial::constant(c, generators_.size()); }
  Polynomial variable(const std::string& name) const;
  Polynomial variable(std::size_t i) const;

  int degree(const Monomial& m) const;
  /// Throws PreconditionError unless weight-graded.
  int weight(const Monomial& m) const;
  static int length(const Monomial& m);
  std::optional<int> homogeneous_degree(const Polynomial& p) const;
  std::optional<int> homogeneous_weight(const Polynomial& p) const;

  /// Signed product of two monomials; coefficient 0 when an odd generator repeats.
  std::pair<Monomial, int> multiply(const Monomial& a, const Monomial& b) const;
  Polynomial multiply(const Polynomial& p, const Polynomial& q) const;
  Polynomial power(const Polynomial& p, int e) const;
  Polynomial d(const Polynomial& p) const;
  Polynomial d(const Monomial& m) const;

  Polynomial parse(const std::string& text) const;
  std::string str(const Polynomial& p) const;
  std::string str(const Monomial& m) const;
  /// Rewrites p, expressed over the generators of `from`, over this algebra by name.
  Polynomial transport(const Polynomial& p, const FreeCDGA& from) const;

  /// Monomials of bidegree (n, w) in increasing order.
  std::vector<Monomial> basis(int n, int w) const;
  std::vector<Monomial> augmentation_ideal_basis(int r, int n, int w) const;
  /// dim of the word-length-r part of bidegree (n, w).
  int gr_component(int r, int n, int w) const;
  /// Largest chain degree with a nonzero weight-w monomial.
  int max_degree(int w) const;
  /// Weight-w part of the algebra as a chain complex in degrees 0..top.
  linalg::ChainComplex weight_complex(int w, int top) const;
  BigradedHomology homology_bigraded(int n, int w) const;

  linalg::SparseVector coordinates(const Polynomial& p, const std::vector<Monomial>& basis) const;

  friend bool operator==(const FreeCDGA& a, const FreeCDGA& b) {
    return a.generators_ == b.generators_ && a.differential_ == b.differential_;
  }

 private:
  void require_weights() const;
  void validate();

  std::vector<GeneratorSpec> generators_;
  std::vector<Polynomial> differential_;
  bool weight_graded_ = true;
};

bool is_identifier(const std::string& s);

/// A with a new generator g, d(g) = z. z is a polynomial over A.
FreeCDGA attach_cell(const FreeCDGA& a, const GeneratorSpec& g, const Polynomial& z);
/// Tensor product of algebras with disjoint generator names.
FreeCDGA tensor_product(const FreeCDGA& a, const FreeCDGA& b);

/// S^g(S^k) with generator `name` of degree k and the given weight.
FreeCDGA sphere_algebra(int k, int weight = 1, const std::string& name = "a");
/// S^g(D^k) (k >= 1): generators a (degree k-1) and b (degree k), d b = a.
FreeCDGA disk_algebra(int k, int weight = 1, const std::string& lower = "a", const std::string& upper = "b");

}  // namespace dk::cdga
