#pragma once

#include <string>
#include <vector>

#include "dk/scdga/simplicial_algebra.hpp"

namespace dk::testing {

struct AxiomReport {
  int checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// Exhaustive check of the shuffle-product axioms on normalized basis
/// elements of every slice with level <= T and weight <= max_weight:
/// products stay normalized, unit, graded commutativity, Leibniz for d_0,
/// associativity.
inline AxiomReport check_ez_axioms(const scdga::SimplicialPolynomialAlgebra& b, int max_weight) {
  using scdga::Polynomial;
  AxiomReport rep;
  int top = b.top_level();
  std::vector<std::vector<std::vector<Polynomial>>> nb(static_cast<std::size_t>(max_weight + 1));
  for (int w = 0; w <= max_weight; ++w) {
    auto norm = simplicial::normalize(b.slice_space(w));
    for (int k = 0; k <= top; ++k) {
      nb[static_cast<std::size_t>(w)].emplace_back();
      for (const auto& v : norm.bases[static_cast<std::size_t>(k)])
        nb[static_cast<std::size_t>(w)].back().push_back(b.lift(k, w, v));
    }
  }
  auto basis = [&](int k, int w) -> const std::vector<Polynomial>& {
    return nb[static_cast<std::size_t>(w)][static_cast<std::size_t>(k)];
  };
  auto same = [&](int k, const Polynomial& x, const Polynomial& y) { return b.vanishes(k, x - y); };
  auto fail = [&](const std::string& what, int p, int w1, int q, int w2) {
    rep.failures.push_back(what + " at (" + std::to_string(p) + "," + std::to_string(w1) + ")x(" + std::to_string(q) +
                           "," + std::to_string(w2) + ")");
  };
  Polynomial one0 = b.level(0).one();
  for (int p = 0; p <= top; ++p)
    for (int w1 = 0; w1 <= max_weight; ++w1)
      for (const auto& x : basis(p, w1)) {
        ++rep.checks;
        if (!same(p, b.ez_product(0, one0, p, x), x) || !same(p, b.ez_product(p, x, 0, one0), x)) fail("unit", p, w1, 0, 0);
        for (int q = 0; p + q <= top; ++q)
          for (int w2 = 0; w1 + w2 <= max_weight; ++w2)
            for (const auto& y : basis(q, w2)) {
              ++rep.checks;
              Polynomial xy = b.ez_product(p, x, q, y);
              for (int i = 1; i <= p + q; ++i)
                if (!b.vanishes(p + q - 1, b.face(p + q, i, xy))) fail("normalized", p, w1, q, w2);
              Polynomial yx = b.ez_product(q, y, p, x);
              if (!same(p + q, xy, (p * q) % 2 == 0 ? yx : -yx)) fail("commutativity", p, w1, q, w2);
              if (p + q >= 1) {
                Polynomial rhs;
                if (p >= 1) rhs += b.ez_product(p - 1, b.face(p, 0, x), q, y);
                if (q >= 1) {
                  Polynomial t = b.ez_product(p, x, q - 1, b.face(q, 0, y));
                  rhs += p % 2 == 0 ? t : -t;
                }
                if (!same(p + q - 1, b.face(p + q, 0, xy), rhs)) fail("Leibniz", p, w1, q, w2);
              }
              for (int r = 0; p + q + r <= top; ++r)
                for (int w3 = 0; w1 + w2 + w3 <= max_weight; ++w3)
                  for (const auto& z : basis(r, w3)) {
                    ++rep.checks;
                    if (!same(p + q + r, b.ez_product(p + q, xy, r, z), b.ez_product(p, x, q + r, b.ez_product(q, y, r, z))))
                      fail("associativity", p, w1, q + r, w2 + w3);
                  }
            }
      }
  return rep;
}

/// quotient_dim(n, w) for n <= T, w <= max_weight.
inline std::vector<std::vector<int>> dimension_table(const scdga::SimplicialPolynomialAlgebra& b, int max_weight) {
  std::vector<std::vector<int>> out;
  for (int n = 0; n <= b.top_level(); ++n) {
    out.emplace_back();
    for (int w = 0; w <= max_weight; ++w) out.back().push_back(b.quotient_dim(n, w));
  }
  return out;
}

}  // namespace dk::testing
