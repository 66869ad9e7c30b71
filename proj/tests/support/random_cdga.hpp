#pragma once

#include <random>
#include <string>

#include "dk/cdga/free_cdga.hpp"
#include "dk/linalg/matrix.hpp"

namespace dk::testing {

/// Cellular algebra with `cells` generators of degree <= max_degree and weight <= 3.
/// Each new generator is attached along a random cycle of matching bidegree.
inline cdga::FreeCDGA random_cellular_algebra(std::mt19937& rng, int cells, int max_degree = 3,
                                              const std::string& prefix = "g") {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> wt(1, 3);
  std::uniform_int_distribution<int> coef(-2, 2);
  cdga::FreeCDGA a;
  for (int c = 0; c < cells; ++c) {
    cdga::GeneratorSpec g{prefix + std::to_string(c), deg(rng), wt(rng)};
    cdga::Polynomial z;
    if (g.degree > 0) {
      auto cx = a.weight_complex(*g.weight, g.degree);
      auto basis = a.basis(g.degree - 1, *g.weight);
      std::vector<linalg::SparseVector> cycles;
      if (g.degree == 1) {
        for (int i = 0; i < static_cast<int>(basis.size()); ++i) cycles.push_back(linalg::SparseVector::unit(i));
      } else {
        cycles = linalg::kernel_basis(cx.differential(g.degree - 1));
      }
      for (const auto& v : cycles) {
        linalg::Scalar s = coef(rng);
        for (const auto& e : v.entries()) z.add(basis[static_cast<std::size_t>(e.index)], s * e.value);
      }
    }
    a = cdga::attach_cell(a, g, z);
  }
  return a;
}

/// Random polynomial supported on monomials of bidegree (n, w).
inline cdga::Polynomial random_homogeneous(std::mt19937& rng, const cdga::FreeCDGA& a, int n, int w) {
  std::uniform_int_distribution<int> coef(-3, 3);
  cdga::Polynomial p;
  for (const auto& m : a.basis(n, w)) p.add(m, coef(rng));
  return p;
}

}  // namespace dk::testing
