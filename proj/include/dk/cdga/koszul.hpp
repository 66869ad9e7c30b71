#pragma once

#include <vector>

#include "dk/cdga/free_cdga.hpp"

namespace dk::cdga {

/// K[x1..xm] with odd e1..em, d e_i = x_i; all generators of weight 1.
FreeCDGA koszul_algebra(int m);

/// Koszul complex K(A, T0) of K[x1..xm], one finite complex per weight 0..max_weight,
/// homological degrees 0..m+1.
std::vector<linalg::ChainComplex> koszul_complex(int m, int max_weight);

/// Dimensions of H_j(K(A, T0) (x) K) for j = 0..m.
std::vector<int> tor_dimensions(int m);

}  // namespace dk::cdga
