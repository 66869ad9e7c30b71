#include "dk/dcart/derived_space.hpp"

#include <algorithm>
#include <set>

#include "dk/error.hpp"

namespace dk::dcart {

using cdga::Monomial;
using cdga::Polynomial;
using linalg::Matrix;

namespace {

Polynomial substitute(const FreeCDGA& target, const std::vector<Polynomial>& images, const Polynomial& p) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial prod = target.one();
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) prod = target.multiply(prod, images[i]);
    out += c * prod;
  }
  return out;
}

void check_point(const FreeCDGA& a, const Point& point) {
  for (const auto& [name, v] : point) {
    auto i = a.index_of(name);
    if (!i || a.generators()[*i].degree != 0) throw PreconditionError("point assigns '" + name + "', not a degree-0 generator");
  }
  for (const auto& g : a.generators())
    if (g.degree == 0 && !point.count(g.name)) throw PreconditionError("point misses generator '" + g.name + "'");
}

/// p with every degree-0 generator x replaced by x + P(x).
Polynomial shift(const FreeCDGA& a, const Point& point, const Polynomial& p) {
  std::vector<Polynomial> images;
  for (std::size_t i = 0; i < a.generator_count(); ++i) {
    Polynomial v = a.variable(i);
    if (a.generators()[i].degree == 0) v += a.constant(point.at(a.generators()[i].name));
    images.push_back(std::move(v));
  }
  return substitute(a, images, p);
}

/// Coefficient of generator i in the linear part of p.
Scalar linear_coefficient(const FreeCDGA& a, const Polynomial& p, std::size_t i) {
  Monomial m = a.unit_monomial();
  m[i] = 1;
  return p.coefficient(m);
}

std::vector<std::size_t> generators_of_degree(const FreeCDGA& a, int j) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.generator_count(); ++i)
    if (a.generators()[i].degree == j) out.push_back(i);
  return out;
}

int amplitude_of(const FreeCDGA& a) {
  int amp = 0;
  for (const auto& g : a.generators()) amp = std::max(amp, g.degree);
  return amp;
}

/// Cochain complex T^0..T^N re-indexed as a chain complex C_k = T^{N-k},
/// k = 0..N+1, with C_{N+1} = 0.
linalg::ChainComplex as_chain_complex(const TangentComplex& t, int n) {
  std::vector<int> dims;
  for (int k = 0; k <= n + 1; ++k) dims.push_back(n - k >= 0 ? t.dim(n - k) : 0);
  std::vector<Matrix> ds;
  for (int k = 1; k <= n + 1; ++k) {
    int j = n - k;  // d_k : T^j -> T^{j+1}
    if (j >= 0 && j < t.amplitude()) {
      ds.push_back(t.map(j));
    } else {
      ds.push_back(Matrix(dims[static_cast<std::size_t>(k - 1)], dims[static_cast<std::size_t>(k)]));
    }
  }
  return linalg::ChainComplex(dims, std::move(ds));
}

}  // namespace

std::string point_str(const Point& p) {
  std::string s = "{";
  for (const auto& [name, v] : p) s += (s.size() > 1 ? ", " : "") + name + "=" + v.str();
  return s + "}";
}

Scalar evaluate(const FreeCDGA& a, const Polynomial& p, const Point& point) {
  check_point(a, point);
  Scalar total = 0;
  for (const auto& [m, c] : p.terms()) {
    if (a.degree(m) != 0) continue;
    Scalar term = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (int e = 0; e < m[i]; ++e) term *= point.at(a.generators()[i].name);
    total += term;
  }
  return total;
}

bool is_classical_point(const FreeCDGA& a, const Point& point) {
  check_point(a, point);
  for (auto i : generators_of_degree(a, 1))
    if (!evaluate(a, a.differential_of(i), point).is_zero()) return false;
  return true;
}

int TangentComplex::dim(int j) const {
  if (j < 0 || j > amplitude()) return 0;
  return static_cast<int>(generators[static_cast<std::size_t>(j)].size());
}

std::vector<int> TangentComplex::cohomology() const {
  std::vector<int> out;
  for (int j = 0; j <= amplitude(); ++j) {
    int out_rank = j < amplitude() ? linalg::rank(map(j)) : 0;
    int in_rank = j > 0 ? linalg::rank(map(j - 1)) : 0;
    out.push_back(dim(j) - out_rank - in_rank);
  }
  return out;
}

TangentComplex tangent_complex(const FreeCDGA& a, const Point& point) {
  if (!is_classical_point(a, point)) throw PreconditionError("point " + point_str(point) + " is not classical");
  int amp = amplitude_of(a);
  TangentComplex t;
  std::vector<std::vector<std::size_t>> by_degree;
  for (int j = 0; j <= amp; ++j) {
    by_degree.push_back(generators_of_degree(a, j));
    t.generators.emplace_back();
    for (auto i : by_degree.back()) t.generators.back().push_back(a.generators()[i].name);
  }
  for (int j = 0; j < amp; ++j) {
    const auto& rows = by_degree[static_cast<std::size_t>(j + 1)];
    const auto& cols = by_degree[static_cast<std::size_t>(j)];
    std::vector<Matrix::Triplet> trip;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Polynomial lin = shift(a, point, a.differential_of(rows[r]));
      for (std::size_t c = 0; c < cols.size(); ++c) {
        Scalar v = linear_coefficient(a, lin, cols[c]);
        if (!v.is_zero()) trip.push_back({static_cast<int>(r), static_cast<int>(c), v});
      }
    }
    t.maps.push_back(Matrix::from_triplets(static_cast<int>(rows.size()), static_cast<int>(cols.size()), trip));
  }
  for (int j = 0; j + 1 < amp; ++j)
    if (!(t.map(j + 1) * t.map(j)).is_zero()) throw InvariantError("linearized differential does not square to zero");
  return t;
}

Point pullback(const cdga::AlgebraMap& f, const Point& point) {
  Point out;
  const auto& b = f.source();
  for (std::size_t i = 0; i < b.generator_count(); ++i)
    if (b.generators()[i].degree == 0) out[b.generators()[i].name] = evaluate(f.target(), f.image(i), point);
  return out;
}

std::vector<Matrix> tangent_map(const cdga::AlgebraMap& f, const Point& point) {
  const auto& a = f.target();
  const auto& b = f.source();
  int amp = std::max(amplitude_of(a), amplitude_of(b));
  std::vector<Matrix> out;
  for (int j = 0; j <= amp; ++j) {
    auto rows = generators_of_degree(b, j);
    auto cols = generators_of_degree(a, j);
    std::vector<Matrix::Triplet> trip;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Polynomial lin = shift(a, point, f.image(rows[r]));
      for (std::size_t c = 0; c < cols.size(); ++c) {
        Scalar v = linear_coefficient(a, lin, cols[c]);
        if (!v.is_zero()) trip.push_back({static_cast<int>(r), static_cast<int>(c), v});
      }
    }
    out.push_back(Matrix::from_triplets(static_cast<int>(rows.size()), static_cast<int>(cols.size()), trip));
  }
  return out;
}

WeakEquivalenceReport is_weak_equivalence(const cdga::AlgebraMap& f, const std::vector<Point>& source_points,
                                          const std::vector<Point>& target_points) {
  const auto& a = f.target();
  const auto& b = f.source();
  for (const auto& p : source_points)
    if (!is_classical_point(a, p)) throw PreconditionError("source point " + point_str(p) + " is not classical");
  for (const auto& p : target_points)
    if (!is_classical_point(b, p)) throw PreconditionError("target point " + point_str(p) + " is not classical");

  WeakEquivalenceReport report;
  report.bijection = source_points.size() == target_points.size();
  std::set<std::size_t> hit;
  int amp = std::max(amplitude_of(a), amplitude_of(b));
  bool all_quasi_iso = true;
  for (const auto& p : source_points) {
    Point q = pullback(f, p);
    auto it = std::find(target_points.begin(), target_points.end(), q);
    if (it == target_points.end() || !hit.insert(static_cast<std::size_t>(it - target_points.begin())).second)
      report.bijection = false;
    auto ta = tangent_complex(a, p);
    auto tb = tangent_complex(b, q);
    auto l = tangent_map(f, p);
    std::vector<Matrix> comps;
    for (int k = 0; k <= amp + 1; ++k) comps.push_back(amp - k >= 0 ? l[static_cast<std::size_t>(amp - k)] : Matrix(0, 0));
    linalg::ChainMap cm(as_chain_complex(ta, amp), as_chain_complex(tb, amp), std::move(comps));
    auto qi = linalg::is_quasi_iso(cm, amp);
    PointComparison pc{p, q, ta.cohomology(), tb.cohomology(), {}, qi.verdict};
    pc.induced_ranks.resize(static_cast<std::size_t>(amp + 1));
    for (const auto& d : qi.degrees) pc.induced_ranks[static_cast<std::size_t>(amp - d.degree)] = d.induced_rank;
    all_quasi_iso = all_quasi_iso && qi.verdict;
    report.points.push_back(std::move(pc));
  }
  report.verdict = report.bijection && all_quasi_iso;
  return report;
}

bool is_fibration_at(const cdga::AlgebraMap& f, const Point& point) {
  if (!is_classical_point(f.target(), point)) throw PreconditionError("point " + point_str(point) + " is not classical");
  for (const auto& m : tangent_map(f, point))
    if (linalg::rank(m) != m.rows()) return false;
  return true;
}

std::vector<Scalar> rational_roots(const std::vector<Scalar>& coefficients) {
  std::vector<Scalar> c = coefficients;
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  if (c.empty()) throw PreconditionError("the zero polynomial has every number as a root");
  mpz_class lcm = 1;
  for (const auto& x : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& x : c) ints.push_back(x.numerator() * (lcm / x.denominator()));
  std::vector<Scalar> roots;
  std::size_t low = 0;
  while (low < ints.size() && ints[low] == 0) ++low;
  if (low > 0) roots.push_back(0);
  ints.erase(ints.begin(), ints.begin() + static_cast<long>(low));
  if (ints.size() > 1) {
    auto divisors = [](mpz_class n) {
      n = abs(n);
      std::vector<mpz_class> out;
      for (mpz_class d = 1; d * d <= n; ++d)
        if (n % d == 0) {
          out.push_back(d);
          if (d * d != n) out.push_back(n / d);
        }
      return out;
    };
    auto value = [&](const Scalar& t) {
      Scalar acc = 0;
      for (auto it = ints.rbegin(); it != ints.rend(); ++it) acc = acc * t + Scalar(mpq_class(*it));
      return acc;
    };
    for (const auto& p : divisors(ints.front()))
      for (const auto& q : divisors(ints.back()))
        for (int sign : {1, -1}) {
          Scalar t(mpq_class(sign * p, q));
          if (value(t).is_zero()) roots.push_back(t);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::optional<std::vector<Point>> enumerate_classical_points(const FreeCDGA& a) {
  auto xs = generators_of_degree(a, 0);
  std::vector<Polynomial> eqs;
  for (auto i : generators_of_degree(a, 1))
    if (!a.differential_of(i).is_zero()) eqs.push_back(a.differential_of(i));
  for (const auto& e : eqs)
    if (e.terms().size() == 1 && FreeCDGA::length(e.terms().begin()->first) == 0) return std::vector<Point>{};
  auto variables_of = [&](const Polynomial& e) {
    std::set<std::size_t> vars;
    for (const auto& [m, c] : e.terms())
      for (auto i : xs)
        if (m[i] > 0) vars.insert(i);
    return vars;
  };
  bool affine = std::all_of(eqs.begin(), eqs.end(), [](const Polynomial& e) {
    return std::all_of(e.terms().begin(), e.terms().end(), [](const auto& t) { return FreeCDGA::length(t.first) <= 1; });
  });
  if (affine) {
    // Solutions of A v + c = 0 are kernel vectors of [A | c] with last entry 1.
    int m = static_cast<int>(xs.size());
    std::vector<Matrix::Triplet> trip;
    for (std::size_t r = 0; r < eqs.size(); ++r)
      for (const auto& [mono, c] : eqs[r].terms()) {
        int col = m;
        for (int k = 0; k < m; ++k)
          if (mono[xs[static_cast<std::size_t>(k)]] > 0) col = k;
        trip.push_back({static_cast<int>(r), col, c});
      }
    auto ker = linalg::kernel_basis(Matrix::from_triplets(static_cast<int>(eqs.size()), m + 1, trip));
    auto with_t = std::find_if(ker.begin(), ker.end(), [&](const auto& v) { return !v.at(m).is_zero(); });
    if (with_t == ker.end()) return std::vector<Point>{};
    if (ker.size() > 1) return std::nullopt;
    Point p;
    Scalar t = with_t->at(m);
    for (int k = 0; k < m; ++k) p[a.generators()[xs[static_cast<std::size_t>(k)]].name] = with_t->at(k) / t;
    return std::vector<Point>{p};
  }
  std::map<std::size_t, std::vector<Scalar>> roots;
  for (const auto& e : eqs) {
    auto vars = variables_of(e);
    if (vars.size() != 1) return std::nullopt;
    std::size_t v = *vars.begin();
    std::vector<Scalar> coeffs;
    for (const auto& [mono, c] : e.terms()) {
      auto deg = static_cast<std::size_t>(mono[v]);
      if (coeffs.size() <= deg) coeffs.resize(deg + 1);
      coeffs[deg] += c;
    }
    auto r = rational_roots(coeffs);
    if (roots.count(v)) {
      std::vector<Scalar> both;
      std::set_intersection(roots[v].begin(), roots[v].end(), r.begin(), r.end(), std::back_inserter(both));
      roots[v] = both;
    } else {
      roots[v] = r;
    }
  }
  for (auto i : xs)
    if (!roots.count(i)) return std::nullopt;
  std::vector<Point> points{Point{}};
  for (auto i : xs) {
    std::vector<Point> next;
    for (const auto& p : points)
      for (const auto& r : roots[i]) {
        Point q = p;
        q[a.generators()[i].name] = r;
        next.push_back(std::move(q));
      }
    points = std::move(next);
  }
  return points;
}

DifferentialForms differential_forms(const FreeCDGA& a, const std::optional<Point>& origin, int max_degree,
                                     int max_weight) {
  if (!origin) throw PreconditionError("differential forms need a fixed origin");
  if (!is_classical_point(a, *origin)) throw PreconditionError("origin " + point_str(*origin) + " is not classical");
  std::vector<cdga::GeneratorSpec> gens;
  for (const auto& g : a.generators()) gens.push_back({g.name, g.degree, a.weight_graded() ? g.weight : 1});
  DifferentialForms out{FreeCDGA(gens, std::map<std::string, std::string>{}), {}};
  for (int n = 0; n <= max_degree; ++n) {
    out.dims.emplace_back();
    for (int w = 0; w <= max_weight; ++w) out.dims.back().push_back(static_cast<int>(out.algebra.basis(n, w).size()));
  }
  return out;
}

}  // namespace dk::dcart
