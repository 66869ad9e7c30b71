#include "dk/simplicial/simplicial_vector_space.hpp"

#include <functional>
#include <map>

#include "dk/error.hpp"

namespace dk::simplicial {

using linalg::Subspace;

namespace {

std::string at_level(const std::string& what, int n) { return what + " at level " + std::to_string(n); }

Matrix stack_faces(const SimplicialVectorSpace& v, int level, int first, int last) {
  Matrix m(0, v.dim(level));
  for (int i = first; i <= last; ++i) m = Matrix::stack(m, v.face(level, i));
  return m;
}

}  // namespace

SimplicialVectorSpace::SimplicialVectorSpace(GradedVectorSpace levels, std::vector<std::vector<Matrix>> faces,
                                             std::vector<std::vector<Matrix>> degeneracies)
    : levels_(std::move(levels)), faces_(std::move(faces)), degeneracies_(std::move(degeneracies)) {
  int top = top_level();
  if (static_cast<int>(faces_.size()) != top || static_cast<int>(degeneracies_.size()) != top)
    throw PreconditionError("simplicial space needs faces for levels 1..T and degeneracies for 0..T-1");
  for (int n = 1; n <= top; ++n) {
    if (static_cast<int>(faces_[static_cast<std::size_t>(n - 1)].size()) != n + 1)
      throw PreconditionError(at_level("wrong number of faces", n));
    for (const auto& d : faces_[static_cast<std::size_t>(n - 1)])
      if (d.rows() != dim(n - 1) || d.cols() != dim(n)) throw PreconditionError(at_level("face shape mismatch", n));
  }
  for (int n = 0; n < top; ++n) {
    if (static_cast<int>(degeneracies_[static_cast<std::size_t>(n)].size()) != n + 1)
      throw PreconditionError(at_level("wrong number of degeneracies", n));
    for (const auto& s : degeneracies_[static_cast<std::size_t>(n)])
      if (s.rows() != dim(n + 1) || s.cols() != dim(n))
        throw PreconditionError(at_level("degeneracy shape mismatch", n));
  }
  auto violations = identity_violations();
  if (!violations.empty()) throw PreconditionError("simplicial identity fails: " + violations.front());
}

const Matrix& SimplicialVectorSpace::face(int level, int i) const {
  if (level < 1 || level > top_level() || i < 0 || i > level) throw PreconditionError("face index out of range");
  return faces_[static_cast<std::size_t>(level - 1)][static_cast<std::size_t>(i)];
}

const Matrix& SimplicialVectorSpace::degeneracy(int level, int j) const {
  if (level < 0 || level >= top_level() || j < 0 || j > level)
    throw PreconditionError("degeneracy index out of range");
  return degeneracies_[static_cast<std::size_t>(level)][static_cast<std::size_t>(j)];
}

std::vector<std::string> SimplicialVectorSpace::identity_violations() const {
  std::vector<std::string> out;
  int top = top_level();
  auto tag = [](const char* rule, int n, int i, int j) {
    return std::string(rule) + " (level " + std::to_string(n) + ", i=" + std::to_string(i) + ", j=" + std::to_string(j) +
           ")";
  };
  for (int n = 2; n <= top; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        if (!(face(n - 1, i) * face(n, j) == face(n - 1, j - 1) * face(n, i))) out.push_back(tag("d_i d_j = d_{j-1} d_i", n, i, j));
  for (int n = 0; n + 1 <= top; ++n) {
    Matrix id = Matrix::identity(dim(n));
    for (int j = 0; j <= n; ++j) {
      const Matrix& s = degeneracy(n, j);
      for (int i = 0; i <= n + 1; ++i) {
        Matrix lhs = face(n + 1, i) * s;
        if (i < j) {
          if (!(lhs == degeneracy(n - 1, j - 1) * face(n, i))) out.push_back(tag("d_i s_j = s_{j-1} d_i", n, i, j));
        } else if (i == j || i == j + 1) {
          if (!(lhs == id)) out.push_back(tag("d_j s_j = d_{j+1} s_j = id", n, i, j));
        } else {
          if (!(lhs == degeneracy(n - 1, j) * face(n, i - 1))) out.push_back(tag("d_i s_j = s_j d_{i-1}", n, i, j));
        }
      }
    }
  }
  for (int n = 0; n + 2 <= top; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        if (!(degeneracy(n + 1, i) * degeneracy(n, j) == degeneracy(n + 1, j + 1) * degeneracy(n, i)))
          out.push_back(tag("s_i s_j = s_{j+1} s_i", n, i, j));
  return out;
}

SimplicialVectorSpace SimplicialVectorSpace::constant(int dim, int top) {
  std::vector<std::vector<Matrix>> faces, degens;
  for (int n = 1; n <= top; ++n) faces.emplace_back(static_cast<std::size_t>(n + 1), Matrix::identity(dim));
  for (int n = 0; n < top; ++n) degens.emplace_back(static_cast<std::size_t>(n + 1), Matrix::identity(dim));
  return SimplicialVectorSpace(GradedVectorSpace(std::vector<int>(static_cast<std::size_t>(top + 1), dim)),
                               std::move(faces), std::move(degens));
}

namespace {

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  std::vector<Matrix::Triplet> t = a.triplets();
  for (const auto& x : b.triplets()) t.push_back({x.row + a.rows(), x.col + a.cols(), x.value});
  return Matrix::from_triplets(a.rows() + b.rows(), a.cols() + b.cols(), t);
}

}  // namespace

SimplicialVectorSpace SimplicialVectorSpace::direct_sum(const SimplicialVectorSpace& a, const SimplicialVectorSpace& b) {
  if (a.top_level() != b.top_level()) throw PreconditionError("direct sum: truncation levels differ");
  int top = a.top_level();
  std::vector<int> dims;
  for (int n = 0; n <= top; ++n) dims.push_back(a.dim(n) + b.dim(n));
  std::vector<std::vector<Matrix>> faces, degens;
  for (int n = 1; n <= top; ++n) {
    faces.emplace_back();
    for (int i = 0; i <= n; ++i) faces.back().push_back(block_diagonal(a.face(n, i), b.face(n, i)));
  }
  for (int n = 0; n < top; ++n) {
    degens.emplace_back();
    for (int j = 0; j <= n; ++j) degens.back().push_back(block_diagonal(a.degeneracy(n, j), b.degeneracy(n, j)));
  }
  return SimplicialVectorSpace(GradedVectorSpace(std::move(dims)), std::move(faces), std::move(degens));
}

Normalization normalize(const SimplicialVectorSpace& v) {
  int top = v.top_level();
  Normalization out;
  out.bases.resize(static_cast<std::size_t>(top + 1));
  out.bases[0] = Matrix::identity(v.dim(0)).columns();
  for (int k = 1; k <= top; ++k) out.bases[static_cast<std::size_t>(k)] = linalg::kernel_basis(stack_faces(v, k, 1, k));
  std::vector<int> dims;
  for (const auto& b : out.bases) dims.push_back(static_cast<int>(b.size()));
  std::vector<Matrix> diffs;
  for (int k = 1; k <= top; ++k) {
    std::vector<SparseVector> cols;
    for (const auto& b : out.bases[static_cast<std::size_t>(k)]) {
      auto c = linalg::rref_coordinates(out.bases[static_cast<std::size_t>(k - 1)], v.face(k, 0).apply(b));
      if (!c) throw InvariantError("d_0 leaves the normalized subspace");
      cols.push_back(std::move(*c));
    }
    diffs.push_back(Matrix::from_columns(dims[static_cast<std::size_t>(k - 1)], std::move(cols)));
  }
  out.complex = ChainComplex(std::move(dims), std::move(diffs));
  return out;
}

ChainComplex normalized_chains(const SimplicialVectorSpace& v) { return normalize(v).complex; }

std::vector<GammaSummand> gamma_summands(const ChainComplex& c, int level) {
  std::vector<GammaSummand> out;
  int offset = 0;
  for (int k = std::min(level, c.top_degree()); k >= 0; --k) {
    for (auto& s : enumerate_surjections(level, k)) {
      out.push_back({std::move(s), offset, c.dim(k)});
      offset += c.dim(k);
    }
  }
  return out;
}

namespace {

int total_dim(const std::vector<GammaSummand>& summands) {
  return summands.empty() ? 0 : summands.back().offset + summands.back().dim;
}

const GammaSummand& find_summand(const std::vector<GammaSummand>& summands, const Surjection& s) {
  for (const auto& x : summands)
    if (x.surjection == s) return x;
  throw InvariantError("surjection missing from gamma level");
}

bool is_top_face_image(const std::vector<int>& image, int k) {
  if (static_cast<int>(image.size()) != k) return false;
  for (int t = 0; t < k; ++t)
    if (image[static_cast<std::size_t>(t)] != t + 1) return false;
  return true;
}

/// Matrix of theta^* : gamma(c)_n -> gamma(c)_m for theta : [m] -> [n].
Matrix gamma_operator(const ChainComplex& c, const MonotoneMap& theta) {
  int n = theta.codomain;
  int m = theta.domain();
  auto src = gamma_summands(c, n);
  auto dst = gamma_summands(c, m);
  std::vector<Matrix::Triplet> t;
  for (const auto& s : src) {
    int k = s.surjection.target;
    auto [epi, image] = epi_mono(compose(s.surjection.to_map(), theta));
    if (static_cast<int>(image.size()) == k + 1) {
      const auto& d = find_summand(dst, epi);
      for (int r = 0; r < s.dim; ++r) t.push_back({d.offset + r, s.offset + r, 1});
    } else if (k >= 1 && is_top_face_image(image, k)) {
      const auto& d = find_summand(dst, epi);
      for (const auto& x : c.differential(k).triplets()) t.push_back({d.offset + x.row, s.offset + x.col, x.value});
    }
  }
  return Matrix::from_triplets(total_dim(dst), total_dim(src), t);
}

}  // namespace

SimplicialVectorSpace gamma(const ChainComplex& c) {
  int top = c.top_degree();
  std::vector<int> dims;
  for (int n = 0; n <= top; ++n) dims.push_back(total_dim(gamma_summands(c, n)));
  std::vector<std::vector<Matrix>> faces, degens;
  for (int n = 1; n <= top; ++n) {
    faces.emplace_back();
    for (int i = 0; i <= n; ++i) faces.back().push_back(gamma_operator(c, coface(n, i)));
  }
  for (int n = 0; n < top; ++n) {
    degens.emplace_back();
    for (int j = 0; j <= n; ++j) degens.back().push_back(gamma_operator(c, codegeneracy(n, j)));
  }
  return SimplicialVectorSpace(GradedVectorSpace(std::move(dims)), std::move(faces), std::move(degens));
}

HomotopyResult homotopy_normalized(const SimplicialVectorSpace& v, int k) {
  if (k < 0 || k > v.top_level()) throw PreconditionError("homotopy degree out of range");
  auto h = linalg::homology(normalized_chains(v), k);
  return {h.dimension, h.reliable};
}

HomotopyResult homotopy_moore(const SimplicialVectorSpace& v, int k) {
  if (k < 0 || k > v.top_level() - 1) throw PreconditionError("Moore homotopy needs k <= T-1");
  int cycles = k == 0 ? v.dim(0) : static_cast<int>(linalg::kernel_basis(stack_faces(v, k, 0, k)).size());
  Subspace boundaries(v.dim(k));
  for (const auto& z : linalg::kernel_basis(stack_faces(v, k + 1, 1, k + 1)))
    boundaries.insert(v.face(k + 1, 0).apply(z));
  return {cycles - boundaries.dim(), true};
}

Subspace degenerate_subspace(const SimplicialVectorSpace& v, int k) {
  Subspace s(v.dim(k));
  for (int j = 0; j < k; ++j)
    for (const auto& col : v.degeneracy(k - 1, j).columns()) s.insert(col);
  return s;
}

namespace {

template <class Induce>
SimplicialVectorSpace induced_space(const SimplicialVectorSpace& v, std::vector<int> dims, Induce induce) {
  int top = v.top_level();
  std::vector<std::vector<Matrix>> faces, degens;
  for (int n = 1; n <= top; ++n) {
    faces.emplace_back();
    for (int i = 0; i <= n; ++i) faces.back().push_back(induce(v.face(n, i), n, n - 1));
  }
  for (int n = 0; n < top; ++n) {
    degens.emplace_back();
    for (int j = 0; j <= n; ++j) degens.back().push_back(induce(v.degeneracy(n, j), n, n + 1));
  }
  return SimplicialVectorSpace(GradedVectorSpace(std::move(dims)), std::move(faces), std::move(degens));
}

}  // namespace

SimplicialVectorSpace restrict_to(const SimplicialVectorSpace& v, const std::vector<Subspace>& subspaces) {
  if (static_cast<int>(subspaces.size()) != v.top_level() + 1) throw PreconditionError("one subspace per level required");
  std::vector<std::vector<SparseVector>> bases;
  std::vector<int> dims;
  for (const auto& s : subspaces) {
    bases.push_back(s.canonical_basis());
    dims.push_back(s.dim());
  }
  return induced_space(v, dims, [&](const Matrix& m, int from, int to) {
    std::vector<SparseVector> cols;
    for (const auto& b : bases[static_cast<std::size_t>(from)]) {
      auto c = linalg::rref_coordinates(bases[static_cast<std::size_t>(to)], m.apply(b));
      if (!c) throw PreconditionError("subspaces are not stable under the structure maps");
      cols.push_back(std::move(*c));
    }
    return Matrix::from_columns(dims[static_cast<std::size_t>(to)], std::move(cols));
  });
}

SimplicialVectorSpace quotient_by(const SimplicialVectorSpace& v, const std::vector<Subspace>& subspaces) {
  if (static_cast<int>(subspaces.size()) != v.top_level() + 1) throw PreconditionError("one subspace per level required");
  std::vector<linalg::QuotientCoordinates> coords;
  std::vector<int> dims;
  for (const auto& s : subspaces) {
    coords.emplace_back(s);
    dims.push_back(coords.back().dim());
  }
  return induced_space(v, dims, [&](const Matrix& m, int from, int to) {
    for (const auto& r : subspaces[static_cast<std::size_t>(from)].canonical_basis())
      if (!subspaces[static_cast<std::size_t>(to)].contains(m.apply(r)))
        throw PreconditionError("subspaces are not stable under the structure maps");
    const auto& qf = coords[static_cast<std::size_t>(from)];
    std::vector<SparseVector> cols;
    for (int k = 0; k < qf.dim(); ++k)
      cols.push_back(coords[static_cast<std::size_t>(to)].coordinates(m.column(qf.representative(k))));
    return Matrix::from_columns(dims[static_cast<std::size_t>(to)], std::move(cols));
  });
}

namespace {

/// Reduced chains of Delta^k modulo the simplices whose image fails `keep`.
SimplicialVectorSpace reduced_quotient_chains(int k, int top, const std::function<bool(const std::vector<int>&)>& keep) {
  std::vector<std::vector<MonotoneMap>> simplices;
  std::vector<std::map<std::vector<int>, int>> index;
  std::vector<int> dims;
  for (int n = 0; n <= top; ++n) {
    simplices.emplace_back();
    index.emplace_back();
    for (auto& m : enumerate_monotone(n, k)) {
      if (!keep(epi_mono(m).second)) continue;
      index.back()[m.values] = static_cast<int>(simplices.back().size());
      simplices.back().push_back(std::move(m));
    }
    dims.push_back(static_cast<int>(simplices.back().size()));
  }
  auto op = [&](const MonotoneMap& theta) {
    int n = theta.codomain;
    int m = theta.domain();
    std::vector<Matrix::Triplet> t;
    for (std::size_t c = 0; c < simplices[static_cast<std::size_t>(n)].size(); ++c) {
      MonotoneMap img = compose(simplices[static_cast<std::size_t>(n)][c], theta);
      auto it = index[static_cast<std::size_t>(m)].find(img.values);
      if (it != index[static_cast<std::size_t>(m)].end()) t.push_back({it->second, static_cast<int>(c), 1});
    }
    return Matrix::from_triplets(dims[static_cast<std::size_t>(m)], dims[static_cast<std::size_t>(n)], t);
  };
  std::vector<std::vector<Matrix>> faces, degens;
  for (int n = 1; n <= top; ++n) {
    faces.emplace_back();
    for (int i = 0; i <= n; ++i) faces.back().push_back(op(coface(n, i)));
  }
  for (int n = 0; n < top; ++n) {
    degens.emplace_back();
    for (int j = 0; j <= n; ++j) degens.back().push_back(op(codegeneracy(n, j)));
  }
  return SimplicialVectorSpace(GradedVectorSpace(std::move(dims)), std::move(faces), std::move(degens));
}

}  // namespace

SimplicialVectorSpace reduced_sphere_chains(int k, int top) {
  if (k < 0) throw PreconditionError("sphere dimension must be non-negative");
  return reduced_quotient_chains(k, top, [k](const std::vector<int>& image) {
    return static_cast<int>(image.size()) == k + 1;
  });
}

SimplicialVectorSpace reduced_disk_chains(int k, int top) {
  if (k < 1) throw PreconditionError("disk dimension must be positive");
  return reduced_quotient_chains(k, top, [k](const std::vector<int>& image) {
    // Outside the horn: the image contains every vertex 1..k.
    int need = 1;
    for (int x : image)
      if (x == need) ++need;
    return need == k + 1;
  });
}

}  // namespace dk::simplicial
