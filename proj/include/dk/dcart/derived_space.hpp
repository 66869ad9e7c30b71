#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dk/cdga/algebra_map.hpp"

namespace dk::dcart {

using cdga::FreeCDGA;
using linalg::Scalar;

/// Rational point: a value for every degree-0 generator.
using Point = std::map<std::string, Scalar>;

std::string point_str(const Point& p);

/// Value of a polynomial at P; monomials containing positive-degree generators vanish.
Scalar evaluate(const FreeCDGA& a, const cdga::Polynomial& p, const Point& point);

/// P kills d(g) for every degree-1 generator g. Throws PreconditionError when
/// P misses a degree-0 generator or names an unknown one.
bool is_classical_point(const FreeCDGA& a, const Point& point);

/// Cochain complex T^0 -> T^1 -> ... -> T^amplitude; T^j is spanned by the
/// degree-j generators and maps[j] : T^j -> T^{j+1} holds the linear
/// coefficients of d at P.
struct TangentComplex {
  std::vector<std::vector<std::string>> generators;
  std::vector<linalg::Matrix> maps;

  int amplitude() const { return static_cast<int>(generators.size()) - 1; }
  int dim(int j) const;
  const linalg::Matrix& map(int j) const { return maps.at(static_cast<std::size_t>(j)); }
  std::vector<int> cohomology() const;
};

/// Linearization of d after the shift x_i -> x_i + P(x_i). Throws if P is not classical.
TangentComplex tangent_complex(const FreeCDGA& a, const Point& point);

/// For f : B -> A (dual to a map M -> N) and a classical point P of A:
/// the point f^*P of B, and the induced maps T^j_P M -> T^j_{f^*P} N.
Point pullback(const cdga::AlgebraMap& f, const Point& point);
std::vector<linalg::Matrix> tangent_map(const cdga::AlgebraMap& f, const Point& point);

struct PointComparison {
  Point source;
  Point target;
  std::vector<int> source_cohomology;
  std::vector<int> target_cohomology;
  std::vector<int> induced_ranks;
  bool quasi_iso = false;
};

struct WeakEquivalenceReport {
  /// Pulling back along f matches the two supplied lists one to one.
  bool bijection = false;
  std::vector<PointComparison> points;
  bool verdict = false;
};

/// f : B -> A dual to M -> N. `source_points` are the classical points of M
/// (of A = f.target()), `target_points` those of N (of B = f.source()); both
/// lists are taken to be complete. Throws if some point is not classical.
WeakEquivalenceReport is_weak_equivalence(const cdga::AlgebraMap& f, const std::vector<Point>& source_points,
                                          const std::vector<Point>& target_points);

/// Tangent maps at P (a classical point of f.target()) are onto in every degree.
bool is_fibration_at(const cdga::AlgebraMap& f, const Point& point);

/// All rational classical points, when every degree-1 differential is affine
/// or univariate and the locus is finite; std::nullopt otherwise.
std::optional<std::vector<Point>> enumerate_classical_points(const FreeCDGA& a);

/// Rational roots of a univariate polynomial with coefficients c[0] + c[1] t + ...
std::vector<Scalar> rational_roots(const std::vector<Scalar>& coefficients);

struct DifferentialForms {
  /// Free algebra on A-bar / A-bar^2 with zero differential. Generators keep
  /// their weights; without weights every generator gets weight 1.
  FreeCDGA algebra;
  /// dims[n][w] for degree n <= max_degree and weight w <= max_weight.
  std::vector<std::vector<int>> dims;
};

/// Throws PreconditionError without an origin, or when the origin is not classical.
DifferentialForms differential_forms(const FreeCDGA& a, const std::optional<Point>& origin, int max_degree,
                                     int max_weight);

}  // namespace dk::dcart
