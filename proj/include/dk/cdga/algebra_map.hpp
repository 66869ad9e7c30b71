#pragma once

#include <map>
#include <string>
#include <vector>

#include "dk/cdga/free_cdga.hpp"

namespace dk::cdga {

/// DG algebra map given by the images of the source generators.
/// Construction checks that images keep degree and commute with d.
class AlgebraMap {
 public:
  /// images[i] is the image of source generator i, a polynomial over target.
  AlgebraMap(FreeCDGA source, FreeCDGA target, std::vector<Polynomial> images);
  /// Images as polynomial strings keyed by source generator name; missing means 0.
  AlgebraMap(FreeCDGA source, FreeCDGA target, const std::map<std::string, std::string>& images);
  static AlgebraMap identity(const FreeCDGA& a);

  const FreeCDGA& source() const { return source_; }
  const FreeCDGA& target() const { return target_; }
  const Polynomial& image(std::size_t i) const { return images_.at(i); }
  const std::vector<Polynomial>& images() const { return images_; }

  Polynomial apply(const Polynomial& p) const;
  Polynomial apply(const Monomial& m) const;
  bool preserves_weight() const;
  /// Matrix from basis(n, w) of the source to basis(n, w) of the target.
  linalg::Matrix component(int n, int w) const;
  linalg::ChainMap weight_chain_map(int w, int top) const;

 private:
  void validate() const;

  FreeCDGA source_;
  FreeCDGA target_;
  std::vector<Polynomial> images_;
};

/// g after f.
AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f);

struct WeightedQuasiIsoReport {
  bool verdict = true;
  /// Index w holds the comparison for weight w.
  std::vector<linalg::QuasiIsoReport> weights;
};

/// Quasi-isomorphism test per weight 0..max_weight through the given chain degree.
/// Exact, since every weight slice is finite.
WeightedQuasiIsoReport is_quasi_iso(const AlgebraMap& f, int through_degree, int max_weight);

}  // namespace dk::cdga
