#include "dk/linalg/chain_complex.hpp"

#include <algorithm>

#include "dk/error.hpp"
#include "dk/linalg/subspace.hpp"

namespace dk::linalg {

GradedVectorSpace::GradedVectorSpace(std::vector<int> dims, std::vector<std::vector<std::string>> labels)
    : dims_(std::move(dims)), labels_(std::move(labels)) {
  if (dims_.empty()) throw PreconditionError("graded vector space needs at least degree 0");
  for (int d : dims_)
    if (d < 0) throw PreconditionError("negative dimension");
  if (!labels_.empty()) {
    if (labels_.size() != dims_.size()) throw PreconditionError("label list length mismatch");
    for (std::size_t k = 0; k < dims_.size(); ++k)
      if (static_cast<int>(labels_[k].size()) != dims_[k]) throw PreconditionError("label count mismatch");
  }
}

int GradedVectorSpace::dim(int degree) const {
  if (degree < 0 || degree > top_degree()) return 0;
  return dims_[static_cast<std::size_t>(degree)];
}

ChainComplex::ChainComplex(GradedVectorSpace spaces, std::vector<Matrix> differentials)
    : spaces_(std::move(spaces)), differentials_(std::move(differentials)) {
  int top = spaces_.top_degree();
  if (static_cast<int>(differentials_.size()) != top)
    throw PreconditionError("chain complex needs one differential per degree 1..T");
  for (int k = 1; k <= top; ++k) {
    const Matrix& d = differential(k);
    if (d.rows() != dim(k - 1) || d.cols() != dim(k)) throw PreconditionError("differential shape mismatch");
  }
  for (int k = 1; k < top; ++k)
    if (!(differential(k) * differential(k + 1)).is_zero())
      throw PreconditionError("d o d != 0 at degree " + std::to_string(k + 1));
}

const Matrix& ChainComplex::differential(int k) const {
  if (k < 1 || k > top_degree()) throw PreconditionError("differential degree out of range");
  return differentials_[static_cast<std::size_t>(k - 1)];
}

ChainComplex ChainComplex::zero(int top) {
  std::vector<Matrix> d;
  for (int k = 1; k <= top; ++k) d.emplace_back(0, 0);
  return ChainComplex(std::vector<int>(static_cast<std::size_t>(top + 1), 0), std::move(d));
}

ChainComplex ChainComplex::sphere(int k, int top) {
  std::vector<int> dims(static_cast<std::size_t>(top + 1), 0);
  if (k >= 0 && k <= top) dims[static_cast<std::size_t>(k)] = 1;
  std::vector<Matrix> d;
  for (int j = 1; j <= top; ++j) d.emplace_back(dims[static_cast<std::size_t>(j - 1)], dims[static_cast<std::size_t>(j)]);
  return ChainComplex(std::move(dims), std::move(d));
}

ChainComplex ChainComplex::disk(int k, int top) {
  if (k == 0) return sphere(0, top);
  std::vector<int> dims(static_cast<std::size_t>(top + 1), 0);
  if (k - 1 <= top) dims[static_cast<std::size_t>(k - 1)] = 1;
  if (k <= top) dims[static_cast<std::size_t>(k)] = 1;
  std::vector<Matrix> d;
  for (int j = 1; j <= top; ++j) {
    if (j == k)
      d.push_back(Matrix::identity(1));
    else
      d.emplace_back(dims[static_cast<std::size_t>(j - 1)], dims[static_cast<std::size_t>(j)]);
  }
  return ChainComplex(std::move(dims), std::move(d));
}

ChainComplex ChainComplex::direct_sum(const ChainComplex& a, const ChainComplex& b) {
  if (a.top_degree() != b.top_degree()) throw PreconditionError("direct sum: truncation degrees differ");
  int top = a.top_degree();
  std::vector<int> dims;
  for (int k = 0; k <= top; ++k) dims.push_back(a.dim(k) + b.dim(k));
  std::vector<Matrix> d;
  for (int k = 1; k <= top; ++k) {
    std::vector<Matrix::Triplet> t = a.differential(k).triplets();
    for (const auto& x : b.differential(k).triplets()) t.push_back({x.row + a.dim(k - 1), x.col + a.dim(k), x.value});
    d.push_back(Matrix::from_triplets(dims[static_cast<std::size_t>(k - 1)], dims[static_cast<std::size_t>(k)], t));
  }
  return ChainComplex(std::move(dims), std::move(d));
}

HomologyResult homology(const ChainComplex& c, int k) {
  if (k < 0 || k > c.top_degree()) throw PreconditionError("homology degree out of range");
  HomologyResult result;
  result.reliable = k < c.top_degree();
  std::vector<SparseVector> cycles =
      k == 0 ? Matrix::identity(c.dim(0)).columns() : kernel_basis(c.differential(k));
  Subspace span(c.dim(k));
  if (k < c.top_degree())
    for (const auto& b : c.differential(k + 1).columns()) span.insert(b);
  int boundary_dim = span.dim();
  for (const auto& z : cycles)
    if (span.insert(z)) result.representatives.push_back(z);
  result.dimension = static_cast<int>(cycles.size()) - boundary_dim;
  if (result.dimension != static_cast<int>(result.representatives.size()))
    throw InvariantError("boundaries are not contained in cycles");
  return result;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  int top = std::min(source_.top_degree(), target_.top_degree());
  if (static_cast<int>(components_.size()) != top + 1)
    throw PreconditionError("chain map needs one component per common degree");
  for (int k = 0; k <= top; ++k) {
    const Matrix& f = component(k);
    if (f.rows() != target_.dim(k) || f.cols() != source_.dim(k)) throw PreconditionError("chain map shape mismatch");
  }
  for (int k = 1; k <= top; ++k)
    if (!(component(k - 1) * source_.differential(k) == target_.differential(k) * component(k)))
      throw PreconditionError("map does not commute with differentials in degree " + std::to_string(k));
}

ChainMap ChainMap::identity(const ChainComplex& c) {
  std::vector<Matrix> comps;
  for (int k = 0; k <= c.top_degree(); ++k) comps.push_back(Matrix::identity(c.dim(k)));
  return ChainMap(c, c, std::move(comps));
}

DegreeComparison compare_homology(const ChainMap& f, int k) {
  HomologyResult hs = homology(f.source(), k);
  HomologyResult ht = homology(f.target(), k);
  Subspace span(f.target().dim(k));
  if (k < f.target().top_degree())
    for (const auto& b : f.target().differential(k + 1).columns()) span.insert(b);
  int before = span.dim();
  for (const auto& z : hs.representatives) span.insert(f.component(k).apply(z));
  return {k, hs.dimension, ht.dimension, span.dim() - before};
}

QuasiIsoReport is_quasi_iso(const ChainMap& f, int through_degree) {
  if (f.source().top_degree() < through_degree + 1 || f.target().top_degree() < through_degree + 1)
    throw PreconditionError("insufficient truncation for quasi-isomorphism check through degree " +
                            std::to_string(through_degree));
  QuasiIsoReport report;
  for (int k = 0; k <= through_degree; ++k) {
    report.degrees.push_back(compare_homology(f, k));
    report.verdict = report.verdict && report.degrees.back().bijective();
  }
  return report;
}

}  // namespace dk::linalg
