#include "dk/cdga/koszul.hpp"

#include "dk/error.hpp"

namespace dk::cdga {

FreeCDGA koszul_algebra(int m) {
  if (m < 0) throw PreconditionError("generator count must be non-negative");
  std::vector<GeneratorSpec> gens;
  std::map<std::string, std::string> d;
  for (int i = 1; i <= m; ++i) {
    gens.push_back({"x" + std::to_string(i), 0, 1});
    gens.push_back({"e" + std::to_string(i), 1, 1});
    d["e" + std::to_string(i)] = "x" + std::to_string(i);
  }
  return FreeCDGA(gens, d);
}

std::vector<linalg::ChainComplex> koszul_complex(int m, int max_weight) {
  auto a = koszul_algebra(m);
  std::vector<linalg::ChainComplex> out;
  for (int w = 0; w <= max_weight; ++w) out.push_back(a.weight_complex(w, m + 1));
  return out;
}

std::vector<int> tor_dimensions(int m) {
  auto a = koszul_algebra(m);
  // Setting every x_i to 0 leaves the exterior monomials e_S.
  auto is_exterior = [&](const Monomial& mono) {
    for (std::size_t i = 0; i < mono.size(); ++i)
      if (!a.is_odd(i) && mono[i] != 0) return false;
    return true;
  };
  std::vector<std::vector<Monomial>> bases;
  std::vector<int> dims;
  for (int j = 0; j <= m + 1; ++j) {
    bases.emplace_back();
    for (const auto& mono : a.basis(j, j))
      if (is_exterior(mono)) bases.back().push_back(mono);
    dims.push_back(static_cast<int>(bases.back().size()));
  }
  std::vector<linalg::Matrix> ds;
  for (int j = 1; j <= m + 1; ++j) {
    std::vector<linalg::SparseVector> cols;
    for (const auto& mono : bases[static_cast<std::size_t>(j)]) {
      Polynomial reduced;
      Polynomial full = a.d(mono);
      for (const auto& [t, c] : full.terms())
        if (is_exterior(t)) reduced.add(t, c);
      cols.push_back(a.coordinates(reduced, bases[static_cast<std::size_t>(j - 1)]));
    }
    ds.push_back(linalg::Matrix::from_columns(dims[static_cast<std::size_t>(j - 1)], std::move(cols)));
  }
  linalg::ChainComplex c(dims, std::move(ds));
  std::vector<int> out;
  for (int j = 0; j <= m; ++j) out.push_back(linalg::homology(c, j).dimension);
  return out;
}

}  // namespace dk::cdga
