#include "dk/scdga/simplicial_algebra.hpp"

#include <cstdio>
#include <mutex>

#include "dk/error.hpp"

namespace dk::scdga {

using linalg::Matrix;
using linalg::Subspace;
using simplicial::Surjection;

struct SimplicialPolynomialAlgebra::Cache {
  std::mutex mutex;
  std::map<std::pair<std::vector<int>, int>, Images> operators;
  std::map<std::pair<int, int>, Slice> slices;
  std::map<int, SimplicialVectorSpace> spaces;
};

namespace {

std::string generator_name(std::size_t i) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "v%06zu", i);
  return buf;
}

cdga::FreeCDGA level_algebra(const std::vector<LevelGenerator>& gens) {
  std::vector<cdga::GeneratorSpec> specs;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].weight < 1) throw PreconditionError("level generators need weight >= 1");
    specs.push_back({generator_name(i), 0, gens[i].weight});
  }
  return cdga::FreeCDGA(std::move(specs), std::vector<Polynomial>(gens.size()));
}

Monomial unit_monomial(std::size_t size, std::size_t i) {
  Monomial m(size, 0);
  m[i] = 1;
  return m;
}

}  // namespace

SimplicialPolynomialAlgebra::SimplicialPolynomialAlgebra(std::vector<std::vector<LevelGenerator>> generators,
                                                         std::vector<std::vector<Images>> faces,
                                                         std::vector<std::vector<Images>> degeneracies,
                                                         std::vector<std::vector<Polynomial>> relations,
                                                         std::optional<int> max_weight)
    : generators_(std::move(generators)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)),
      relations_(std::move(relations)),
      max_weight_(max_weight),
      cache_(std::make_shared<Cache>()) {
  if (generators_.empty()) throw PreconditionError("simplicial algebra needs at least level 0");
  int top = top_level();
  for (const auto& g : generators_) levels_.push_back(level_algebra(g));
  if (relations_.empty()) relations_.resize(generators_.size());
  if (static_cast<int>(relations_.size()) != top + 1) throw PreconditionError("one relation list per level required");
  if (static_cast<int>(faces_.size()) != top || static_cast<int>(degeneracies_.size()) != top)
    throw PreconditionError("faces for levels 1..T and degeneracies for levels 0..T-1 required");

  auto check = [&](int n, const Polynomial& p, std::optional<int> weight, const std::string& what) {
    const auto& a = level(n);
    for (const auto& [m, c] : p.terms())
      if (m.size() != a.generator_count()) throw PreconditionError(what + ": polynomial has the wrong number of variables");
    if (p.is_zero()) return;
    auto w = a.homogeneous_weight(p);
    if (!w || (weight && *w != *weight)) throw PreconditionError(what + ": not of the expected weight");
    if (!weight && *w < 1) throw PreconditionError(what + ": relations need positive weight");
  };
  auto check_maps = [&](const std::vector<Images>& maps, int from, int to, const char* kind) {
    for (const auto& images : maps) {
      if (images.size() != generators_[static_cast<std::size_t>(from)].size())
        throw PreconditionError(std::string(kind) + " at level " + std::to_string(from) + ": one image per generator required");
      for (std::size_t g = 0; g < images.size(); ++g)
        check(to, images[g], generators_[static_cast<std::size_t>(from)][g].weight,
              std::string(kind) + " at level " + std::to_string(from));
    }
  };
  for (int n = 1; n <= top; ++n) {
    if (static_cast<int>(faces_[static_cast<std::size_t>(n - 1)].size()) != n + 1)
      throw PreconditionError("wrong number of faces at level " + std::to_string(n));
    check_maps(faces_[static_cast<std::size_t>(n - 1)], n, n - 1, "face");
  }
  for (int n = 0; n < top; ++n) {
    if (static_cast<int>(degeneracies_[static_cast<std::size_t>(n)].size()) != n + 1)
      throw PreconditionError("wrong number of degeneracies at level " + std::to_string(n));
    check_maps(degeneracies_[static_cast<std::size_t>(n)], n, n + 1, "degeneracy");
  }
  for (int n = 0; n <= top; ++n)
    for (const auto& r : relations_[static_cast<std::size_t>(n)])
      check(n, r, std::nullopt, "relation at level " + std::to_string(n));
}

std::string SimplicialPolynomialAlgebra::str(int n, const Polynomial& p) const {
  const auto& gens = generators(n);
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative = c.sign() < 0;
    linalg::Scalar magnitude = negative ? -c : c;
    out += out.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
    std::string factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += '*';
      factors += gens[i].label;
      if (m[i] > 1) factors += '^' + std::to_string(m[i]);
    }
    if (factors.empty()) {
      out += magnitude.str();
    } else {
      if (!magnitude.is_one()) out += magnitude.str() + '*';
      out += factors;
    }
  }
  return out;
}

Polynomial SimplicialPolynomialAlgebra::substitute(int to_level, const Images& images, const Polynomial& p) const {
  const auto& a = level(to_level);
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial prod = a.one();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) prod = a.multiply(prod, images[i]);
    out += c * prod;
  }
  return out;
}

Polynomial SimplicialPolynomialAlgebra::face(int n, int i, const Polynomial& p) const {
  if (n < 1 || n > top_level() || i < 0 || i > n) throw PreconditionError("face index out of range");
  return substitute(n - 1, faces_[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(i)], p);
}

Polynomial SimplicialPolynomialAlgebra::degeneracy(int n, int j, const Polynomial& p) const {
  if (n < 0 || n >= top_level() || j < 0 || j > n) throw PreconditionError("degeneracy index out of range");
  return substitute(n + 1, degeneracies_[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)], p);
}

const SimplicialPolynomialAlgebra::Images& SimplicialPolynomialAlgebra::operator_images(const MonotoneMap& theta) const {
  auto key = std::make_pair(theta.values, theta.codomain);
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->operators.find(key);
    if (it != cache_->operators.end()) return it->second;
  }
  int n = theta.codomain;
  if (n > top_level() || theta.domain() > top_level()) throw PreconditionError("operator leaves the truncation range");
  auto [epi, image] = simplicial::epi_mono(theta);
  std::vector<int> missing;
  for (int t = n, pos = static_cast<int>(image.size()) - 1; t >= 0; --t) {
    if (pos >= 0 && image[static_cast<std::size_t>(pos)] == t) {
      --pos;
    } else {
      missing.push_back(t);
    }
  }
  Images images;
  for (std::size_t g = 0; g < generators(n).size(); ++g)
    images.push_back(Polynomial::monomial(unit_monomial(generators(n).size(), g)));
  int lvl = n;
  for (int i : missing) {  // descending
    for (auto& p : images) p = face(lvl, i, p);
    --lvl;
  }
  for (int j : epi.repeats) {  // ascending
    for (auto& p : images) p = degeneracy(lvl, j, p);
    ++lvl;
  }
  std::lock_guard lock(cache_->mutex);
  return cache_->operators.try_emplace(key, std::move(images)).first->second;
}

Polynomial SimplicialPolynomialAlgebra::apply(const MonotoneMap& theta, const Polynomial& p) const {
  if (theta.is_identity()) return p;
  return substitute(theta.domain(), operator_images(theta), p);
}

Polynomial SimplicialPolynomialAlgebra::ez_product(int p, const Polynomial& x, int q, const Polynomial& y) const {
  if (p < 0 || q < 0 || p + q > top_level()) throw PreconditionError("shuffle product exceeds the truncation level");
  const auto& a = level(p + q);
  Polynomial out;
  for (const auto& sh : simplicial::enumerate_shuffles(p, q)) {
    Polynomial sx = apply(Surjection{p + q, p, sh.second}.to_map(), x);
    Polynomial sy = apply(Surjection{p + q, q, sh.first}.to_map(), y);
    Polynomial term = a.multiply(sx, sy);
    out += sh.sign > 0 ? term : -term;
  }
  return out;
}

void SimplicialPolynomialAlgebra::check_weight(int w) const {
  if (w < 0) throw PreconditionError("weight must be non-negative");
  if (max_weight_ && w > *max_weight_)
    throw PreconditionError("weight " + std::to_string(w) + " exceeds the modelled bound " + std::to_string(*max_weight_));
}

const SimplicialPolynomialAlgebra::Slice& SimplicialPolynomialAlgebra::slice(int n, int w) const {
  if (n < 0 || n > top_level()) throw PreconditionError("level out of range");
  check_weight(w);
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->slices.find({n, w});
    if (it != cache_->slices.end()) return it->second;
  }
  const auto& a = level(n);
  auto basis = a.basis(0, w);
  Subspace rel(static_cast<int>(basis.size()));
  for (int l = 0; l <= top_level() && rel.dim() < static_cast<int>(basis.size()); ++l) {
    for (const auto& r : relations(l)) {
      int wr = *level(l).homogeneous_weight(r);
      if (wr > w) continue;
      auto multipliers = a.basis(0, w - wr);
      for (const auto& theta : simplicial::enumerate_monotone(n, l)) {
        Polynomial pulled = apply(theta, r);
        if (pulled.is_zero()) continue;
        for (const auto& m : multipliers) rel.insert(a.coordinates(a.multiply(Polynomial::monomial(m), pulled), basis));
      }
    }
  }
  linalg::QuotientCoordinates quotient(rel);
  std::lock_guard lock(cache_->mutex);
  return cache_->slices.try_emplace({n, w}, Slice{std::move(basis), std::move(rel), std::move(quotient)}).first->second;
}

SparseVector SimplicialPolynomialAlgebra::reduce(int n, int w, const Polynomial& p) const {
  const auto& s = slice(n, w);
  return s.quotient.coordinates(level(n).coordinates(p, s.basis));
}

Polynomial SimplicialPolynomialAlgebra::lift(int n, int w, const SparseVector& v) const {
  const auto& s = slice(n, w);
  Polynomial out;
  for (const auto& e : v.entries()) out.add(s.basis[static_cast<std::size_t>(s.quotient.representative(e.index))], e.value);
  return out;
}

bool SimplicialPolynomialAlgebra::vanishes(int n, const Polynomial& p) const {
  std::map<int, Polynomial> parts;
  for (const auto& [m, c] : p.terms()) parts[level(n).weight(m)].add(m, c);
  for (const auto& [w, part] : parts)
    if (!reduce(n, w, part).empty()) return false;
  return true;
}

const SimplicialVectorSpace& SimplicialPolynomialAlgebra::slice_space(int w) const {
  check_weight(w);
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->spaces.find(w);
    if (it != cache_->spaces.end()) return it->second;
  }
  int top = top_level();
  std::vector<int> dims;
  std::vector<std::vector<std::string>> labels;
  for (int n = 0; n <= top; ++n) {
    const auto& s = slice(n, w);
    dims.push_back(s.quotient.dim());
    labels.emplace_back();
    for (int k = 0; k < s.quotient.dim(); ++k)
      labels.back().push_back(str(n, Polynomial::monomial(s.basis[static_cast<std::size_t>(s.quotient.representative(k))])));
  }
  auto induced = [&](int from, int to, auto&& op) {
    const auto& s = slice(from, w);
    std::vector<SparseVector> cols;
    for (int k = 0; k < s.quotient.dim(); ++k) {
      Polynomial rep = Polynomial::monomial(s.basis[static_cast<std::size_t>(s.quotient.representative(k))]);
      cols.push_back(reduce(to, w, op(rep)));
    }
    return Matrix::from_columns(dims[static_cast<std::size_t>(to)], std::move(cols));
  };
  std::vector<std::vector<Matrix>> faces, degens;
  for (int n = 1; n <= top; ++n) {
    faces.emplace_back();
    for (int i = 0; i <= n; ++i)
      faces.back().push_back(induced(n, n - 1, [&](const Polynomial& p) { return face(n, i, p); }));
  }
  for (int n = 0; n < top; ++n) {
    degens.emplace_back();
    for (int j = 0; j <= n; ++j)
      degens.back().push_back(induced(n, n + 1, [&](const Polynomial& p) { return degeneracy(n, j, p); }));
  }
  SimplicialVectorSpace space(linalg::GradedVectorSpace(std::move(dims), std::move(labels)), std::move(faces),
                              std::move(degens));
  std::lock_guard lock(cache_->mutex);
  return cache_->spaces.try_emplace(w, std::move(space)).first->second;
}

std::vector<Subspace> SimplicialPolynomialAlgebra::length_filtration(int w, int r) const {
  std::vector<Subspace> out;
  for (int n = 0; n <= top_level(); ++n) {
    const auto& s = slice(n, w);
    out.emplace_back(s.quotient.dim());
    for (std::size_t b = 0; b < s.basis.size(); ++b)
      if (cdga::FreeCDGA::length(s.basis[b]) >= r)
        out.back().insert(s.quotient.coordinates(SparseVector::unit(static_cast<int>(b))));
  }
  return out;
}

std::vector<std::string> SimplicialPolynomialAlgebra::identity_violations() const {
  std::vector<std::string> out;
  int top = top_level();
  auto var = [&](int n, std::size_t g) { return Polynomial::monomial(unit_monomial(generators(n).size(), g)); };
  auto report = [&](const char* rule, int n, std::size_t g) {
    out.push_back(std::string(rule) + " on generator " + generators(n)[g].label + " at level " + std::to_string(n));
  };
  for (int n = 0; n <= top; ++n)
    for (std::size_t g = 0; g < generators(n).size(); ++g) {
      Polynomial x = var(n, g);
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i < j && n >= 2; ++i)
          if (!vanishes(n - 2, face(n - 1, i, face(n, j, x)) - face(n - 1, j - 1, face(n, i, x))))
            report("d_i d_j = d_{j-1} d_i", n, g);
      if (n + 1 <= top)
        for (int j = 0; j <= n; ++j) {
          Polynomial sx = degeneracy(n, j, x);
          for (int i = 0; i <= n + 1; ++i) {
            Polynomial lhs = face(n + 1, i, sx);
            Polynomial rhs;
            if (i < j) {
              rhs = degeneracy(n - 1, j - 1, face(n, i, x));
            } else if (i == j || i == j + 1) {
              rhs = x;
            } else {
              rhs = degeneracy(n - 1, j, face(n, i - 1, x));
            }
            if (!vanishes(n, lhs - rhs)) report("d_i s_j", n, g);
          }
        }
      if (n + 2 <= top)
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= j; ++i)
            if (!vanishes(n + 2, degeneracy(n + 1, i, degeneracy(n, j, x)) - degeneracy(n + 1, j + 1, degeneracy(n, i, x))))
              report("s_i s_j = s_{j+1} s_i", n, g);
    }
  return out;
}

SimplicialPolynomialAlgebra free_simplicial_algebra(const SimplicialVectorSpace& v) {
  int top = v.top_level();
  std::vector<std::vector<LevelGenerator>> gens;
  for (int n = 0; n <= top; ++n) {
    gens.emplace_back();
    for (int j = 0; j < v.dim(n); ++j) {
      std::string label = v.levels().has_labels() ? v.levels().labels()[static_cast<std::size_t>(n)][static_cast<std::size_t>(j)]
                                                  : "e" + std::to_string(j);
      gens.back().push_back({label, 1});
    }
  }
  auto linear = [&](const Matrix& m, int to) {
    SimplicialPolynomialAlgebra::Images images;
    for (int j = 0; j < m.cols(); ++j) {
      Polynomial p;
      for (const auto& e : m.column(j).entries())
        p.add(unit_monomial(static_cast<std::size_t>(v.dim(to)), static_cast<std::size_t>(e.index)), e.value);
      images.push_back(std::move(p));
    }
    return images;
  };
  std::vector<std::vector<SimplicialPolynomialAlgebra::Images>> faces, degens;
  for (int n = 1; n <= top; ++n) {
    faces.emplace_back();
    for (int i = 0; i <= n; ++i) faces.back().push_back(linear(v.face(n, i), n - 1));
  }
  for (int n = 0; n < top; ++n) {
    degens.emplace_back();
    for (int j = 0; j <= n; ++j) degens.back().push_back(linear(v.degeneracy(n, j), n + 1));
  }
  return SimplicialPolynomialAlgebra(std::move(gens), std::move(faces), std::move(degens));
}

linalg::ChainComplex normalized_algebra_complex(const SimplicialPolynomialAlgebra& b, int w) {
  return simplicial::normalized_chains(b.slice_space(w));
}

simplicial::HomotopyResult homotopy(const SimplicialPolynomialAlgebra& b, int q, int w) {
  return simplicial::homotopy_normalized(b.slice_space(w), q);
}

}  // namespace dk::scdga
