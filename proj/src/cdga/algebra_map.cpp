#include "dk/cdga/algebra_map.hpp"

#include "dk/error.hpp"

namespace dk::cdga {

AlgebraMap::AlgebraMap(FreeCDGA source, FreeCDGA target, std::vector<Polynomial> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  validate();
}

AlgebraMap::AlgebraMap(FreeCDGA source, FreeCDGA target, const std::map<std::string, std::string>& images)
    : source_(std::move(source)), target_(std::move(target)), images_(source_.generator_count()) {
  for (const auto& [name, text] : images) {
    auto i = source_.index_of(name);
    if (!i) throw PreconditionError("image given for unknown generator '" + name + "'");
    images_[*i] = target_.parse(text);
  }
  validate();
}

AlgebraMap AlgebraMap::identity(const FreeCDGA& a) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < a.generator_count(); ++i) images.push_back(a.variable(i));
  return AlgebraMap(a, a, std::move(images));
}

void AlgebraMap::validate() const {
  if (images_.size() != source_.generator_count()) throw PreconditionError("one image per source generator required");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto& g = source_.generators()[i];
    for (const auto& [m, c] : images_[i].terms())
      if (m.size() != target_.generator_count()) throw PreconditionError("image of " + g.name + " is malformed");
    if (!images_[i].is_zero() && target_.homogeneous_degree(images_[i]) != g.degree)
      throw PreconditionError("image of " + g.name + " must have degree " + std::to_string(g.degree));
  }
  for (std::size_t i = 0; i < images_.size(); ++i) {
    Polynomial lhs = apply(source_.differential_of(i));
    Polynomial rhs = target_.d(images_[i]);
    if (lhs != rhs)
      throw PreconditionError("map does not commute with d on " + source_.generators()[i].name + ": " +
                              target_.str(lhs) + " vs " + target_.str(rhs));
  }
}

Polynomial AlgebraMap::apply(const Monomial& m) const {
  Polynomial r = target_.one();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (int e = 0; e < m[i]; ++e) r = target_.multiply(r, images_[i]);
  return r;
}

Polynomial AlgebraMap::apply(const Polynomial& p) const {
  Polynomial r;
  for (const auto& [m, c] : p.terms()) r += c * apply(m);
  return r;
}

bool AlgebraMap::preserves_weight() const {
  if (!source_.weight_graded() || !target_.weight_graded()) return false;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (!images_[i].is_zero() && target_.homogeneous_weight(images_[i]) != source_.generators()[i].weight) return false;
  return true;
}

linalg::Matrix AlgebraMap::component(int n, int w) const {
  if (!preserves_weight()) throw PreconditionError("map must preserve weights");
  auto src = source_.basis(n, w);
  auto tgt = target_.basis(n, w);
  std::vector<linalg::SparseVector> cols;
  for (const auto& m : src) cols.push_back(target_.coordinates(apply(m), tgt));
  return linalg::Matrix::from_columns(static_cast<int>(tgt.size()), std::move(cols));
}

linalg::ChainMap AlgebraMap::weight_chain_map(int w, int top) const {
  std::vector<linalg::Matrix> comps;
  for (int k = 0; k <= top; ++k) comps.push_back(component(k, w));
  return linalg::ChainMap(source_.weight_complex(w, top), target_.weight_complex(w, top), std::move(comps));
}

AlgebraMap compose(const AlgebraMap& g, const AlgebraMap& f) {
  if (!(f.target() == g.source())) throw PreconditionError("maps are not composable");
  std::vector<Polynomial> images;
  for (const auto& p : f.images()) images.push_back(g.apply(p));
  return AlgebraMap(f.source(), g.target(), std::move(images));
}

WeightedQuasiIsoReport is_quasi_iso(const AlgebraMap& f, int through_degree, int max_weight) {
  WeightedQuasiIsoReport out;
  for (int w = 0; w <= max_weight; ++w) {
    auto r = linalg::is_quasi_iso(f.weight_chain_map(w, through_degree + 1), through_degree);
    out.verdict = out.verdict && r.verdict;
    out.weights.push_back(std::move(r));
  }
  return out;
}

}  // namespace dk::cdga
