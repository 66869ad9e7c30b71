#include "dk/cdga/free_cdga.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>

#include "dk/error.hpp"

namespace dk::cdga {

using linalg::ChainComplex;
using linalg::Matrix;
using linalg::SparseVector;

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(const Scalar& c, std::size_t generator_count) {
  Polynomial p;
  p.add(Monomial(generator_count, 0), c);
  return p;
}

Polynomial Polynomial::monomial(Monomial m, Scalar c) {
  Polynomial p;
  p.add(m, c);
  return p;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

void Polynomial::add(const Monomial& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Polynomial operator*(const Scalar& c, const Polynomial& p) {
  Polynomial r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : p.terms_) r.terms_.emplace(m, c * v);
  return r;
}

// ---------------------------------------------------------------------------
// FreeCDGA

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

namespace {

bool canonical_less(const GeneratorSpec& a, const GeneratorSpec& b) {
  return std::tie(a.degree, a.name) < std::tie(b.degree, b.name);
}

void check_generators(const std::vector<GeneratorSpec>& gens) {
  std::set<std::string> names;
  std::size_t weighted = 0;
  for (const auto& g : gens) {
    if (!is_identifier(g.name)) throw PreconditionError("invalid generator name '" + g.name + "'");
    if (!names.insert(g.name).second) throw PreconditionError("duplicate generator '" + g.name + "'");
    if (g.degree < 0) throw PreconditionError("generator '" + g.name + "' has negative degree");
    if (g.weight) {
      if (*g.weight < 1) throw PreconditionError("generator '" + g.name + "' needs weight >= 1");
      ++weighted;
    }
  }
  if (weighted != 0 && weighted != gens.size())
    throw PreconditionError("either every generator carries a weight or none does");
}

}  // namespace

FreeCDGA::FreeCDGA(std::vector<GeneratorSpec> generators, const std::map<std::string, std::string>& differential) {
  check_generators(generators);
  std::sort(generators.begin(), generators.end(), canonical_less);
  generators_ = std::move(generators);
  differential_.assign(generators_.size(), Polynomial());
  std::vector<Polynomial> d(generators_.size());
  for (const auto& [name, text] : differential) {
    auto i = index_of(name);
    if (!i) throw PreconditionError("differential given for unknown generator '" + name + "'");
    d[*i] = parse(text);
  }
  differential_ = std::move(d);
  validate();
}

FreeCDGA::FreeCDGA(std::vector<GeneratorSpec> sorted_generators, std::vector<Polynomial> differential)
    : generators_(std::move(sorted_generators)), differential_(std::move(differential)) {
  check_generators(generators_);
  if (!std::is_sorted(generators_.begin(), generators_.end(), canonical_less))
    throw PreconditionError("generators must be sorted by (degree, name)");
  if (differential_.size() != generators_.size())
    throw PreconditionError("one differential per generator required");
  validate();
}

void FreeCDGA::validate() {
  weight_graded_ = std::all_of(generators_.begin(), generators_.end(), [](const auto& g) { return g.weight.has_value(); });
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    const auto& g = generators_[i];
    const auto& dg = differential_[i];
    for (const auto& [m, c] : dg.terms()) {
      if (m.size() != generators_.size()) throw PreconditionError("d(" + g.name + ") has malformed monomial");
      for (std::size_t j = 0; j < m.size(); ++j)
        if (m[j] < 0 || (is_odd(j) && m[j] > 1)) throw PreconditionError("d(" + g.name + ") has malformed monomial");
    }
    if (dg.is_zero()) continue;
    if (g.degree == 0) throw PreconditionError("degree-0 generator '" + g.name + "' must have zero differential");
    if (homogeneous_degree(dg) != g.degree - 1)
      throw PreconditionError("d(" + g.name + ") must be homogeneous of degree " + std::to_string(g.degree - 1));
    if (weight_graded_ && homogeneous_weight(dg) != *g.weight)
      throw PreconditionError("d(" + g.name + ") must be homogeneous of weight " + std::to_string(*g.weight));
  }
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (!d(differential_[i]).is_zero())
      throw PreconditionError("d^2(" + generators_[i].name + ") = " + str(d(differential_[i])) + " is not zero");
}

std::optional<std::size_t> FreeCDGA::index_of(const std::string& name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}

Polynomial FreeCDGA::variable(const std::string& name) const {
  auto i = index_of(name);
  if (!i) throw PreconditionError("unknown generator '" + name + "'");
  return variable(*i);
}

Polynomial FreeCDGA::variable(std::size_t i) const {
  Monomial m = unit_monomial();
  m.at(i) = 1;
  return Polynomial::monomial(std::move(m));
}

int FreeCDGA::degree(const Monomial& m) const {
  int total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) total += m[i] * generators_[i].degree;
  return total;
}

void FreeCDGA::require_weights() const {
  if (!weight_graded_) throw PreconditionError("operation needs a weight-graded algebra");
}

int FreeCDGA::weight(const Monomial& m) const {
  require_weights();
  int total = 0;
  for (std::size_t i = 0; i < m.size(); ++i) total += m[i] * *generators_[i].weight;
  return total;
}

int FreeCDGA::length(const Monomial& m) {
  int total = 0;
  for (int e : m) total += e;
  return total;
}

std::optional<int> FreeCDGA::homogeneous_degree(const Polynomial& p) const {
  std::optional<int> result;
  for (const auto& [m, c] : p.terms()) {
    int k = degree(m);
    if (result && *result != k) return std::nullopt;
    result = k;
  }
  return result;
}

std::optional<int> FreeCDGA::homogeneous_weight(const Polynomial& p) const {
  std::optional<int> result;
  for (const auto& [m, c] : p.terms()) {
    int k = weight(m);
    if (result && *result != k) return std::nullopt;
    result = k;
  }
  return result;
}

std::pair<Monomial, int> FreeCDGA::multiply(const Monomial& a, const Monomial& b) const {
  Monomial r(a.size(), 0);
  int odd_after = 0;  // odd factors of a with index greater than the current one
  for (std::size_t i = 0; i < a.size(); ++i)
    if (is_odd(i)) odd_after += a[i];
  int swaps = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_odd(i)) {
      odd_after -= a[i];
      if (a[i] + b[i] > 1) return {r, 0};
      swaps += b[i] * odd_after;
    }
    r[i] = a[i] + b[i];
  }
  return {r, swaps % 2 == 0 ? 1 : -1};
}

Polynomial FreeCDGA::multiply(const Polynomial& p, const Polynomial& q) const {
  Polynomial r;
  for (const auto& [m1, c1] : p.terms())
    for (const auto& [m2, c2] : q.terms()) {
      auto [m, s] = multiply(m1, m2);
      if (s != 0) r.add(m, s > 0 ? c1 * c2 : -(c1 * c2));
    }
  return r;
}

Polynomial FreeCDGA::power(const Polynomial& p, int e) const {
  Polynomial r = one();
  for (int k = 0; k < e; ++k) r = multiply(r, p);
  return r;
}

Polynomial FreeCDGA::d(const Monomial& m) const {
  Polynomial result;
  Monomial prefix = unit_monomial();
  Monomial suffix = m;
  int sign_degree = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (int e = 0; e < m[i]; ++e) {
      --suffix[i];
      if (!differential_[i].is_zero()) {
        Polynomial term = multiply(multiply(Polynomial::monomial(prefix), differential_[i]), Polynomial::monomial(suffix));
        result += sign_degree % 2 == 0 ? term : -term;
      }
      ++prefix[i];
      sign_degree += generators_[i].degree;
    }
  }
  return result;
}

Polynomial FreeCDGA::d(const Polynomial& p) const {
  Polynomial r;
  for (const auto& [m, c] : p.terms()) r += c * d(m);
  return r;
}

// ---------------------------------------------------------------------------
// Text form

namespace {

class PolynomialParser {
 public:
  PolynomialParser(const FreeCDGA& a, const std::string& text) : a_(a), text_(text) {}

  Polynomial run() {
    skip();
    if (pos_ == text_.size()) fail("empty polynomial");
    Polynomial result;
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    result += term(negative);
    while (skip(), pos_ < text_.size()) {
      char op = take();
      if (op != '+' && op != '-') fail(std::string("unexpected '") + op + "'");
      result += term(op == '-');
    }
    return result;
  }

 private:
  Polynomial term(bool negative) {
    Polynomial t = a_.constant(negative ? Scalar(-1) : Scalar(1));
    t = a_.multiply(t, atom());
    while (skip(), pos_ < text_.size() && peek() == '*') {
      take();
      t = a_.multiply(t, atom());
    }
    return t;
  }

  Polynomial atom() {
    skip();
    if (pos_ == text_.size()) fail("expected a factor");
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
      return a_.constant(Scalar::parse(text_.substr(start, pos_ - start)));
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    if (name.empty()) fail(std::string("unexpected '") + peek() + "'");
    auto i = a_.index_of(name);
    if (!i) fail("unknown generator '" + name + "'");
    int e = 1;
    skip();
    if (pos_ < text_.size() && peek() == '^') {
      take();
      skip();
      std::size_t s = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (s == pos_) fail("expected exponent");
      e = std::stoi(text_.substr(s, pos_ - s));
    }
    return a_.power(a_.variable(*i), e);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() const { return text_[pos_]; }
  char take() { return text_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial '" + text_ + "': " + what + " at position " + std::to_string(pos_));
  }

  const FreeCDGA& a_;
  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial FreeCDGA::parse(const std::string& text) const { return PolynomialParser(*this, text).run(); }

std::string FreeCDGA::str(const Monomial& m) const {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += generators_[i].name;
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string FreeCDGA::str(const Polynomial& p) const {
  if (p.is_zero()) return "0";
  std::string out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [m, c] = *it;
    bool negative = c.sign() < 0;
    Scalar magnitude = negative ? -c : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    bool unit = length(m) == 0;
    if (unit) {
      out += magnitude.str();
    } else {
      if (!magnitude.is_one()) out += magnitude.str() + '*';
      out += str(m);
    }
  }
  return out;
}

Polynomial FreeCDGA::transport(const Polynomial& p, const FreeCDGA& from) const {
  std::vector<std::size_t> target(from.generator_count());
  for (std::size_t i = 0; i < target.size(); ++i) {
    auto j = index_of(from.generators()[i].name);
    if (!j) throw PreconditionError("generator '" + from.generators()[i].name + "' missing from target algebra");
    if (generators_[*j].degree != from.generators()[i].degree)
      throw PreconditionError("generator '" + from.generators()[i].name + "' changes degree");
    target[i] = *j;
  }
  Polynomial r;
  for (const auto& [m, c] : p.terms()) {
    Monomial n = unit_monomial();
    for (std::size_t i = 0; i < m.size(); ++i) n[target[i]] = m[i];
    r.add(n, c);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Bigraded pieces

std::vector<Monomial> FreeCDGA::basis(int n, int w) const {
  require_weights();
  std::vector<Monomial> out;
  if (n < 0 || w < 0) return out;
  Monomial m = unit_monomial();
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int deg_left, int wt_left) {
    if (i == m.size()) {
      if (deg_left == 0 && wt_left == 0) out.push_back(m);
      return;
    }
    const auto& g = generators_[i];
    int cap = is_odd(i) ? 1 : wt_left / *g.weight;
    for (int e = 0; e <= cap && e * *g.weight <= wt_left && e * g.degree <= deg_left; ++e) {
      m[i] = e;
      rec(i + 1, deg_left - e * g.degree, wt_left - e * *g.weight);
    }
    m[i] = 0;
  };
  rec(0, n, w);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Monomial> FreeCDGA::augmentation_ideal_basis(int r, int n, int w) const {
  if (r < 1) throw PreconditionError("augmentation ideal power must be >= 1");
  auto all = basis(n, w);
  std::erase_if(all, [r](const Monomial& m) { return length(m) < r; });
  return all;
}

int FreeCDGA::gr_component(int r, int n, int w) const {
  auto all = basis(n, w);
  return static_cast<int>(std::count_if(all.begin(), all.end(), [r](const Monomial& m) { return length(m) == r; }));
}

int FreeCDGA::max_degree(int w) const {
  require_weights();
  constexpr int unreachable = -1;
  std::vector<int> best(static_cast<std::size_t>(std::max(w, 0) + 1), unreachable);
  if (w < 0) return unreachable;
  best[0] = 0;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    int gw = *generators_[i].weight;
    int gd = generators_[i].degree;
    if (is_odd(i)) {
      for (int v = w; v >= gw; --v)
        if (best[static_cast<std::size_t>(v - gw)] != unreachable)
          best[static_cast<std::size_t>(v)] = std::max(best[static_cast<std::size_t>(v)], best[static_cast<std::size_t>(v - gw)] + gd);
    } else {
      for (int v = gw; v <= w; ++v)
        if (best[static_cast<std::size_t>(v - gw)] != unreachable)
          best[static_cast<std::size_t>(v)] = std::max(best[static_cast<std::size_t>(v)], best[static_cast<std::size_t>(v - gw)] + gd);
    }
  }
  return best[static_cast<std::size_t>(w)];
}

SparseVector FreeCDGA::coordinates(const Polynomial& p, const std::vector<Monomial>& basis) const {
  std::vector<SparseVector::Entry> entries;
  for (const auto& [m, c] : p.terms()) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || *it != m) throw InvariantError("monomial " + str(m) + " outside the expected basis");
    entries.push_back({static_cast<int>(it - basis.begin()), c});
  }
  return SparseVector(std::move(entries));
}

ChainComplex FreeCDGA::weight_complex(int w, int top) const {
  std::vector<std::vector<Monomial>> bases;
  std::vector<int> dims;
  std::vector<std::vector<std::string>> labels;
  for (int k = 0; k <= top; ++k) {
    bases.push_back(basis(k, w));
    dims.push_back(static_cast<int>(bases.back().size()));
    labels.emplace_back();
    for (const auto& m : bases.back()) labels.back().push_back(str(m));
  }
  std::vector<Matrix> ds;
  for (int k = 1; k <= top; ++k) {
    const auto& src = bases[static_cast<std::size_t>(k)];
    const auto& tgt = bases[static_cast<std::size_t>(k - 1)];
    std::vector<SparseVector> cols;
    for (const auto& m : src) cols.push_back(coordinates(d(m), tgt));
    ds.push_back(Matrix::from_columns(static_cast<int>(tgt.size()), std::move(cols)));
  }
  return ChainComplex(linalg::GradedVectorSpace(std::move(dims), std::move(labels)), std::move(ds));
}

BigradedHomology FreeCDGA::homology_bigraded(int n, int w) const {
  if (n < 0 || w < 0) throw PreconditionError("bidegree must be non-negative");
  auto c = weight_complex(w, n + 1);
  auto h = linalg::homology(c, n);
  auto b = basis(n, w);
  BigradedHomology out{h.dimension, {}};
  for (const auto& v : h.representatives) {
    Polynomial p;
    for (const auto& e : v.entries()) p.add(b[static_cast<std::size_t>(e.index)], e.value);
    out.representatives.push_back(std::move(p));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

FreeCDGA attach_cell(const FreeCDGA& a, const GeneratorSpec& g, const Polynomial& z) {
  if (a.index_of(g.name)) throw PreconditionError("generator '" + g.name + "' already present");
  if (!z.is_zero()) {
    if (a.homogeneous_degree(z) != g.degree - 1)
      throw PreconditionError("attaching cycle must have degree " + std::to_string(g.degree - 1));
    if (a.weight_graded() && (!g.weight || a.homogeneous_weight(z) != *g.weight))
      throw PreconditionError("attaching cycle must have the weight of the new generator");
    if (!a.d(z).is_zero()) throw PreconditionError("attaching element " + a.str(z) + " is not a cycle");
  }
  auto gens = a.generators();
  gens.push_back(g);
  FreeCDGA bare(gens, std::map<std::string, std::string>{});
  std::vector<Polynomial> d(bare.generator_count());
  for (std::size_t i = 0; i < a.generator_count(); ++i)
    d[*bare.index_of(a.generators()[i].name)] = bare.transport(a.differential_of(i), a);
  d[*bare.index_of(g.name)] = bare.transport(z, a);
  return FreeCDGA(bare.generators(), std::move(d));
}

FreeCDGA tensor_product(const FreeCDGA& a, const FreeCDGA& b) {
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  FreeCDGA bare(gens, std::map<std::string, std::string>{});
  std::vector<Polynomial> d(bare.generator_count());
  for (std::size_t i = 0; i < a.generator_count(); ++i)
    d[*bare.index_of(a.generators()[i].name)] = bare.transport(a.differential_of(i), a);
  for (std::size_t i = 0; i < b.generator_count(); ++i)
    d[*bare.index_of(b.generators()[i].name)] = bare.transport(b.differential_of(i), b);
  return FreeCDGA(bare.generators(), std::move(d));
}

FreeCDGA sphere_algebra(int k, int weight, const std::string& name) {
  return FreeCDGA({{name, k, weight}}, std::map<std::string, std::string>{});
}

FreeCDGA disk_algebra(int k, int weight, const std::string& lower, const std::string& upper) {
  if (k < 1) throw PreconditionError("disk algebra needs k >= 1");
  return FreeCDGA({{lower, k - 1, weight}, {upper, k, weight}}, {{upper, lower}});
}

}  // namespace dk::cdga
