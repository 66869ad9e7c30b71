#include "dk/scdga/q_functor.hpp"

#include <algorithm>

#include "dk/error.hpp"
#include "dk/linalg/matrix.hpp"

namespace dk::scdga {

using linalg::Matrix;
using linalg::Subspace;
using simplicial::MonotoneMap;
using simplicial::Surjection;

namespace {

Monomial unit_monomial(std::size_t size, std::size_t i) {
  Monomial m(size, 0);
  m[i] = 1;
  return m;
}

std::string key_label(const cdga::FreeCDGA& a, const QFunctor::Key& key) {
  std::string s = "[" + a.str(key.x) + "]";
  if (key.sigma.is_identity()) return s;
  s += "_";
  for (std::size_t t = 0; t < key.sigma.repeats.size(); ++t) s += (t ? "," : "") + std::to_string(key.sigma.repeats[t]);
  return s;
}

/// Levelwise substitution of generator images into a polynomial at level n.
Polynomial substitute(const cdga::FreeCDGA& target, const std::vector<Polynomial>& images, const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial prod = target.one();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) prod = target.multiply(prod, images[i]);
    out += c * prod;
  }
  return out;
}

}  // namespace

Polynomial QFunctor::gamma(int level, const cdga::Polynomial& p, const Surjection& sigma) const {
  const auto& lv = algebra.level(level);
  Polynomial out;
  for (const auto& [x, c] : p.terms()) {
    if (source.weight(x) == 0) {
      out += lv.constant(c);
      continue;
    }
    auto it = index.at(static_cast<std::size_t>(level)).find(Key{x, sigma});
    if (it == index[static_cast<std::size_t>(level)].end())
      throw PreconditionError("no generator for " + source.str(x) + " at level " + std::to_string(level));
    out.add(unit_monomial(lv.generator_count(), it->second), c);
  }
  return out;
}

Polynomial QFunctor::gamma(const cdga::Polynomial& p) const {
  auto k = source.homogeneous_degree(p);
  if (!k) {
    if (p.is_zero()) return Polynomial();
    throw PreconditionError("gamma needs a homogeneous element");
  }
  return gamma(*k, p, Surjection::identity(*k));
}

QFunctor q_functor(const cdga::FreeCDGA& a, int top, int max_weight) {
  if (!a.weight_graded()) throw PreconditionError("Q needs a weight-graded algebra");
  if (top < 0 || max_weight < 0) throw PreconditionError("truncation bounds must be non-negative");
  std::vector<Monomial> sources;
  for (int w = 1; w <= max_weight; ++w)
    for (int k = 0; k <= top; ++k)
      for (auto& x : a.basis(k, w)) sources.push_back(std::move(x));

  std::vector<std::vector<QFunctor::Key>> keys(static_cast<std::size_t>(top + 1));
  std::vector<std::map<QFunctor::Key, std::size_t>> index(static_cast<std::size_t>(top + 1));
  std::vector<std::vector<LevelGenerator>> gens(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n)
    for (const auto& x : sources) {
      int k = a.degree(x);
      if (k > n) continue;
      for (auto& sigma : simplicial::enumerate_surjections(n, k)) {
        QFunctor::Key key{x, std::move(sigma)};
        index[static_cast<std::size_t>(n)][key] = keys[static_cast<std::size_t>(n)].size();
        gens[static_cast<std::size_t>(n)].push_back({key_label(a, key), a.weight(x)});
        keys[static_cast<std::size_t>(n)].push_back(std::move(key));
      }
    }

  // Gamma rule: theta sends (x, sigma) to (x, sigma') when sigma theta is onto,
  // to (dx, sigma') when its image is {1..k}, and to 0 otherwise.
  auto induced = [&](const MonotoneMap& theta) {
    int n = theta.codomain;
    int m = theta.domain();
    std::size_t target_count = keys[static_cast<std::size_t>(m)].size();
    SimplicialPolynomialAlgebra::Images images;
    for (const auto& key : keys[static_cast<std::size_t>(n)]) {
      auto [epi, image] = simplicial::epi_mono(simplicial::compose(key.sigma.to_map(), theta));
      int k = key.sigma.target;
      Polynomial p;
      if (static_cast<int>(image.size()) == k + 1) {
        p.add(unit_monomial(target_count, index[static_cast<std::size_t>(m)].at({key.x, epi})), 1);
      } else if (k >= 1 && static_cast<int>(image.size()) == k && image.front() == 1) {
        for (const auto& [y, c] : a.d(key.x).terms())
          p.add(unit_monomial(target_count, index[static_cast<std::size_t>(m)].at({y, epi})), c);
      }
      images.push_back(std::move(p));
    }
    return images;
  };
  std::vector<std::vector<SimplicialPolynomialAlgebra::Images>> faces, degens;
  for (int n = 1; n <= top; ++n) {
    faces.emplace_back();
    for (int i = 0; i <= n; ++i) faces.back().push_back(induced(simplicial::coface(n, i)));
  }
  for (int n = 0; n < top; ++n) {
    degens.emplace_back();
    for (int j = 0; j <= n; ++j) degens.back().push_back(induced(simplicial::codegeneracy(n, j)));
  }

  QFunctor q{a, max_weight, SimplicialPolynomialAlgebra(gens, faces, degens, {}, max_weight), keys, index};

  std::vector<std::vector<Polynomial>> relations(static_cast<std::size_t>(top + 1));
  for (std::size_t s = 0; s < sources.size(); ++s)
    for (std::size_t t = s; t < sources.size(); ++t) {
      const auto& x = sources[s];
      const auto& y = sources[t];
      int p = a.degree(x), r = a.degree(y);
      if (p + r > top || a.weight(x) + a.weight(y) > max_weight) continue;
      Polynomial rel = q.algebra.ez_product(p, q.gamma(cdga::Polynomial::monomial(x)), r,
                                            q.gamma(cdga::Polynomial::monomial(y)));
      auto [xy, sign] = a.multiply(x, y);
      if (sign != 0) rel -= q.gamma(cdga::Polynomial::monomial(xy, sign));
      if (!rel.is_zero()) relations[static_cast<std::size_t>(p + r)].push_back(std::move(rel));
    }
  q.algebra = SimplicialPolynomialAlgebra(std::move(gens), std::move(faces), std::move(degens), std::move(relations),
                                          max_weight);
  return q;
}

UnitMapCertificate beta(const QFunctor& q) {
  const auto& a = q.source;
  int top = q.top_level();
  UnitMapCertificate cert;
  cert.max_degree = top;
  cert.max_weight = q.max_weight;
  for (int w = 0; w <= q.max_weight; ++w) {
    auto norm = simplicial::normalize(q.algebra.slice_space(w));
    std::vector<Matrix> comps;
    for (int k = 0; k <= top; ++k) {
      std::vector<linalg::SparseVector> cols;
      const auto& nb = norm.bases[static_cast<std::size_t>(k)];
      for (const auto& x : a.basis(k, w)) {
        auto v = q.algebra.reduce(k, w, q.gamma(cdga::Polynomial::monomial(x)));
        auto c = linalg::rref_coordinates(nb, v);
        if (!c) throw InvariantError("unit image of " + a.str(x) + " is not normalized");
        cols.push_back(std::move(*c));
      }
      comps.push_back(Matrix::from_columns(static_cast<int>(nb.size()), std::move(cols)));
    }
    cert.matrices.push_back(comps);
    try {
      linalg::ChainMap f(a.weight_complex(w, top), norm.complex, std::move(comps));
      for (int k = 0; k < top; ++k) {
        auto cmp = linalg::compare_homology(f, k);
        BidegreeComparison b{k, w, cmp.source_dim, cmp.target_dim, cmp.induced_rank};
        cert.verdict = cert.verdict && b.bijective();
        cert.comparisons.push_back(b);
      }
    } catch (const PreconditionError& e) {
      throw InvariantError(std::string("unit is not a chain map: ") + e.what());
    }
  }
  return cert;
}

bool SimplicialAlgebraMap::is_identity(const SimplicialPolynomialAlgebra& source) const {
  for (int n = 0; n <= source.top_level(); ++n)
    for (std::size_t g = 0; g < source.generators(n).size(); ++g)
      if (!source.vanishes(n, images[static_cast<std::size_t>(n)][g] -
                                  Polynomial::monomial(unit_monomial(source.generators(n).size(), g))))
        return false;
  return true;
}

SimplicialAlgebraMap induced_theta(const QFunctor& q, const SimplicialPolynomialAlgebra& b,
                                   const std::map<Monomial, Polynomial>& phi) {
  const auto& a = q.source;
  int top = q.top_level();
  if (b.top_level() != top) throw PreconditionError("source and target truncations differ");
  auto value = [&](const Monomial& x) -> const Polynomial& {
    auto it = phi.find(x);
    if (it == phi.end()) throw PreconditionError("no value given for " + a.str(x));
    return it->second;
  };
  for (const auto& [x, v] : phi) {
    if (x.size() != a.generator_count() || a.weight(x) == 0 || a.degree(x) > top)
      throw PreconditionError("value given for an unexpected monomial");
    int k = a.degree(x);
    if (!v.is_zero() && b.level(k).homogeneous_weight(v) != a.weight(x))
      throw PreconditionError("value of " + a.str(x) + " has the wrong weight");
    for (int i = 1; i <= k; ++i)
      if (!b.vanishes(k - 1, b.face(k, i, v))) throw PreconditionError("value of " + a.str(x) + " is not normalized");
    if (k >= 1) {
      Polynomial image_of_d;
      for (const auto& [y, c] : a.d(x).terms()) image_of_d += c * value(y);
      if (!b.vanishes(k - 1, b.face(k, 0, v) - image_of_d))
        throw PreconditionError("values do not commute with the differential at " + a.str(x));
    }
  }
  SimplicialAlgebraMap out;
  for (int n = 0; n <= top; ++n) {
    out.images.emplace_back();
    for (const auto& key : q.keys[static_cast<std::size_t>(n)])
      out.images.back().push_back(b.apply(key.sigma.to_map(), value(key.x)));
  }
  for (int n = 0; n <= top; ++n)
    for (const auto& r : q.algebra.relations(n)) {
      Polynomial image = substitute(b.level(n), out.images[static_cast<std::size_t>(n)], r);
      if (!b.vanishes(n, image))
        throw PreconditionError("relation " + q.algebra.str(n, r) + " is not annihilated: values are not multiplicative");
    }
  return out;
}

std::map<Monomial, Polynomial> extend_by_products(const QFunctor& q, const SimplicialPolynomialAlgebra& b,
                                                  const std::vector<Polynomial>& generator_values) {
  const auto& a = q.source;
  if (generator_values.size() != a.generator_count()) throw PreconditionError("one value per generator required");
  std::map<Monomial, Polynomial> out;
  for (int w = 1; w <= q.max_weight; ++w)
    for (int k = 0; k <= q.top_level(); ++k)
      for (const auto& x : a.basis(k, w)) {
        Polynomial acc;
        int level = -1;
        for (std::size_t i = 0; i < x.size(); ++i)
          for (int e = 0; e < x[i]; ++e) {
            int gd = a.generators()[i].degree;
            if (level < 0) {
              acc = generator_values[i];
              level = gd;
            } else {
              acc = b.ez_product(level, acc, gd, generator_values[i]);
              level += gd;
            }
          }
        out[x] = std::move(acc);
      }
  return out;
}

ConnectivityReport connectivity_check(const SimplicialPolynomialAlgebra& b, int r, int max_weight) {
  if (!b.is_reduced()) throw PreconditionError("connectivity check needs a reduced algebra (level 0 = K)");
  if (r < 1) throw PreconditionError("power must be >= 1");
  ConnectivityReport report;
  report.power = r;
  report.through_degree = std::min(r - 1, b.top_level() - 1);
  for (int w = 0; w <= max_weight; ++w) {
    auto sub = simplicial::restrict_to(b.slice_space(w), b.length_filtration(w, r));
    for (int qd = 0; qd <= report.through_degree; ++qd) {
      int dim = simplicial::homotopy_normalized(sub, qd).dimension;
      report.entries.push_back({qd, w, dim});
      report.verdict = report.verdict && dim == 0;
    }
  }
  return report;
}

KernelIdealReport face_kernel_ideal_check(int n, int k, int i, int max_weight) {
  if (n < 0 || k < 1 || i < 0 || i > k) throw PreconditionError("need n >= 0, k >= 1 and 0 <= i <= k");
  auto b = free_simplicial_algebra(simplicial::reduced_sphere_chains(n, k));
  // Level-k generators are the surjections [k] ->> [n], in the order the
  // reduced chains list them (lexicographic by values).
  std::map<std::vector<int>, std::size_t> by_repeats;
  for (const auto& m : simplicial::enumerate_monotone(k, n)) {
    if (static_cast<int>(simplicial::epi_mono(m).second.size()) != n + 1) continue;
    std::size_t idx = by_repeats.size();
    by_repeats[Surjection::from_map(m).repeats] = idx;
  }
  std::size_t count = b.generators(k).size();
  std::vector<Polynomial> linear;
  for (const auto& [rep, idx] : by_repeats) {
    bool has_i = std::find(rep.begin(), rep.end(), i) != rep.end();
    bool has_prev = i >= 1 && std::find(rep.begin(), rep.end(), i - 1) != rep.end();
    if (has_i && !has_prev && i >= 1) {
      auto other = rep;
      *std::find(other.begin(), other.end(), i) = i - 1;
      std::sort(other.begin(), other.end());
      Polynomial p = Polynomial::monomial(unit_monomial(count, idx));
      p.add(unit_monomial(count, by_repeats.at(other)), -1);
      linear.push_back(std::move(p));
    } else if (!has_i && !has_prev) {
      linear.push_back(Polynomial::monomial(unit_monomial(count, idx)));
    }
  }
  KernelIdealReport report;
  const auto& lv = b.level(k);
  for (int w = 0; w <= max_weight; ++w) {
    auto basis = lv.basis(0, w);
    auto lower = b.level(k - 1).basis(0, w);
    std::vector<linalg::SparseVector> cols;
    for (const auto& m : basis) cols.push_back(b.level(k - 1).coordinates(b.face(k, i, Polynomial::monomial(m)), lower));
    Subspace kernel(static_cast<int>(basis.size()),
                    linalg::kernel_basis(Matrix::from_columns(static_cast<int>(lower.size()), std::move(cols))));
    Subspace span(static_cast<int>(basis.size()));
    if (w >= 1)
      for (const auto& l : linear)
        for (const auto& m : lv.basis(0, w - 1))
          span.insert(lv.coordinates(lv.multiply(Polynomial::monomial(m), l), basis));
    KernelIdealEntry e{w, kernel.dim(), span.dim(), kernel.contains(span)};
    report.verdict = report.verdict && e.contained && e.kernel_dim == e.span_dim;
    report.entries.push_back(e);
  }
  return report;
}

IndecomposablesReport indecomposables_check(const QFunctor& q) {
  IndecomposablesReport report;
  for (int w = 1; w <= q.max_weight; ++w) {
    const auto& space = q.algebra.slice_space(w);
    auto gr1 = simplicial::quotient_by(space, q.algebra.length_filtration(w, 2));
    auto chains = simplicial::normalized_chains(gr1);
    for (int k = 0; k <= q.top_level(); ++k) {
      IndecomposablesEntry e{k, w, q.source.gr_component(1, k, w), chains.dim(k)};
      report.verdict = report.verdict && e.generators == e.indecomposables;
      report.entries.push_back(e);
    }
  }
  return report;
}

}  // namespace dk::scdga
