#include "dk/cli/run.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "dk/cdga/koszul.hpp"
#include "dk/cli/parallel.hpp"
#include "dk/error.hpp"
#include "dk/scdga/q_functor.hpp"

namespace dk::cli {

namespace {

using cdga::FreeCDGA;
using cdga::Polynomial;
using linalg::ChainComplex;
using linalg::Matrix;
using scdga::SimplicialPolynomialAlgebra;
using simplicial::SimplicialVectorSpace;

const Json& require(const Json& input, const char* key) {
  if (!input.contains(key)) throw ParseError(std::string("input needs field '") + key + "'");
  return input.at(key);
}

int option(const JobSpec& job, const std::optional<int>& flag, const char* key, std::optional<int> fallback = {}) {
  if (flag) return *flag;
  if (job.input.contains(key)) {
    const auto& v = job.input.at(key);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
    return v.get<int>();
  }
  if (fallback) return *fallback;
  throw PreconditionError(std::string("command needs --") + key);
}

/// c cut or zero-padded to degrees 0..top.
ChainComplex truncate(const ChainComplex& c, int top) {
  std::vector<int> dims;
  std::vector<Matrix> ds;
  for (int k = 0; k <= top; ++k) dims.push_back(c.dim(k));
  for (int k = 1; k <= top; ++k)
    ds.push_back(k <= c.top_degree() ? c.differential(k) : Matrix(dims[static_cast<std::size_t>(k - 1)], dims[static_cast<std::size_t>(k)]));
  return ChainComplex(dims, std::move(ds));
}

/// Simplicial vector space from "simplicial", or Gamma of "complex".
std::optional<SimplicialVectorSpace> simplicial_input(const JobSpec& job) {
  if (job.input.contains("simplicial")) return simplicial_from_json(job.input.at("simplicial"));
  if (job.input.contains("complex")) return simplicial::gamma(truncate(complex_from_json(job.input.at("complex")), job.max_degree));
  return std::nullopt;
}

/// Simplicial algebra: Q of "algebra", or the free algebra on the simplicial input.
SimplicialPolynomialAlgebra simplicial_algebra_input(const Json& input, const JobSpec& job) {
  if (input.contains("algebra"))
    return scdga::q_functor(algebra_from_json(input.at("algebra")), job.max_degree, job.max_weight).algebra;
  if (input.contains("simplicial")) return scdga::free_simplicial_algebra(simplicial_from_json(input.at("simplicial")));
  if (input.contains("complex"))
    return scdga::free_simplicial_algebra(
        simplicial::gamma(truncate(complex_from_json(input.at("complex")), job.max_degree)));
  throw ParseError("input needs 'algebra', 'complex' or 'simplicial'");
}

Json matrices(const std::vector<Matrix>& ms) {
  Json out = Json::array();
  for (const auto& m : ms) out.push_back(to_json(m));
  return out;
}

Json points_json(const std::vector<dcart::Point>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(to_json(p));
  return out;
}

std::vector<dcart::Point> points_from(const Json& j) {
  if (!j.is_array()) throw ParseError("point lists are arrays");
  std::vector<dcart::Point> out;
  for (const auto& p : j) out.push_back(point_from_json(p));
  return out;
}

Json dimension_table(const SimplicialPolynomialAlgebra& b, int max_weight) {
  int top = b.top_level();
  if (b.max_weight()) max_weight = std::min(max_weight, *b.max_weight());
  auto normalized = parallel_map<std::vector<int>>(static_cast<std::size_t>(max_weight + 1), [&](std::size_t w) {
    return simplicial::normalized_chains(b.slice_space(static_cast<int>(w))).spaces().dims();
  });
  Json out = Json::array();
  for (int n = 0; n <= top; ++n)
    for (int w = 0; w <= max_weight; ++w)
      out.push_back({{"level", n},
                     {"weight", w},
                     {"dimension", b.quotient_dim(n, w)},
                     {"normalized", normalized[static_cast<std::size_t>(w)][static_cast<std::size_t>(n)]}});
  return out;
}

using Handler = std::function<void(const JobSpec&, Json&)>;

void homology(const JobSpec& job, Json& r) {
  auto a = algebra_from_json(require(job.input, "algebra"));
  int through = option(job, job.degree, "degree", job.max_degree);
  std::vector<std::pair<int, int>> cells;
  for (int n = 0; n <= through; ++n)
    for (int w = 0; w <= job.max_weight; ++w) cells.emplace_back(n, w);
  auto dims = parallel_map<int>(cells.size(), [&](std::size_t i) {
    return a.homology_bigraded(cells[i].first, cells[i].second).dimension;
  });
  Json table = Json::array();
  for (std::size_t i = 0; i < cells.size(); ++i)
    table.push_back({{"degree", cells[i].first}, {"weight", cells[i].second}, {"dimension", dims[i]}});
  r["homology"] = table;
}

void homotopy(const JobSpec& job, Json& r) {
  Json table = Json::array();
  if (auto v = simplicial_input(job)) {
    for (int k = 0; k < v->top_level(); ++k) {
      auto n = simplicial::homotopy_normalized(*v, k);
      auto m = simplicial::homotopy_moore(*v, k);
      if (n.dimension != m.dimension) throw InvariantError("normalized and Moore homotopy disagree");
      table.push_back({{"degree", k}, {"dimension", n.dimension}});
    }
  } else {
    auto b = simplicial_algebra_input(job.input, job);
    for (int k = 0; k < b.top_level(); ++k)
      for (int w = 0; w <= job.max_weight; ++w)
        table.push_back({{"degree", k}, {"weight", w}, {"dimension", scdga::homotopy(b, k, w).dimension}});
  }
  r["homotopy"] = table;
}

void normalize(const JobSpec& job, Json& r) {
  if (auto v = simplicial_input(job)) {
    r["complex"] = to_json(simplicial::normalized_chains(*v));
    return;
  }
  auto b = simplicial_algebra_input(job.input, job);
  Json per_weight = Json::array();
  for (int w = 0; w <= job.max_weight; ++w)
    per_weight.push_back({{"weight", w}, {"complex", to_json(scdga::normalized_algebra_complex(b, w))}});
  r["complexes"] = per_weight;
}

void gamma(const JobSpec& job, Json& r) {
  r["simplicial"] = to_json(simplicial::gamma(truncate(complex_from_json(require(job.input, "complex")), job.max_degree)));
}

void ez_table(const JobSpec& job, Json& r) {
  auto b = simplicial_algebra_input(job.input, job);
  int top = b.top_level();
  int max_weight = b.max_weight() ? std::min(job.max_weight, *b.max_weight()) : job.max_weight;
  // Normalized basis of each slice, as canonical representatives.
  std::vector<std::vector<std::vector<Polynomial>>> basis(static_cast<std::size_t>(max_weight + 1));
  for (int w = 1; w <= max_weight; ++w) {
    auto norm = simplicial::normalize(b.slice_space(w));
    for (int n = 0; n <= top; ++n) {
      basis[static_cast<std::size_t>(w)].emplace_back();
      for (const auto& v : norm.bases[static_cast<std::size_t>(n)])
        basis[static_cast<std::size_t>(w)].back().push_back(b.lift(n, w, v));
    }
  }
  Json products = Json::array();
  for (int p = 0; p <= top; ++p)
    for (int q = 0; p + q <= top; ++q)
      for (int w1 = 1; w1 <= max_weight; ++w1)
        for (int w2 = 1; w1 + w2 <= max_weight; ++w2)
          for (const auto& x : basis[static_cast<std::size_t>(w1)][static_cast<std::size_t>(p)])
            for (const auto& y : basis[static_cast<std::size_t>(w2)][static_cast<std::size_t>(q)]) {
              auto prod = b.ez_product(p, x, q, y);
              auto canonical = b.lift(p + q, w1 + w2, b.reduce(p + q, w1 + w2, prod));
              products.push_back({{"p", p}, {"x", b.str(p, x)}, {"q", q}, {"y", b.str(q, y)}, {"product", b.str(p + q, canonical)}});
            }
  r["dimensions"] = dimension_table(b, job.max_weight);
  r["products"] = products;
}

void attach(const JobSpec& job, Json& r) {
  auto a = algebra_from_json(require(job.input, "algebra"));
  const auto& cell = require(job.input, "cell");
  if (!cell.is_object() || !cell.contains("name") || !cell.contains("degree") || !cell.at("name").is_string() ||
      !cell.at("degree").is_number_integer())
    throw ParseError("cell needs a string 'name' and an integer 'degree'");
  cdga::GeneratorSpec g{cell.at("name").get<std::string>(), cell.at("degree").get<int>(), std::nullopt};
  if (cell.contains("weight")) {
    if (!cell.at("weight").is_number_integer()) throw ParseError("cell weight must be an integer");
    g.weight = cell.at("weight").get<int>();
  }
  Polynomial z;
  if (cell.contains("boundary")) {
    if (!cell.at("boundary").is_string()) throw ParseError("cell boundary must be a polynomial string");
    z = a.parse(cell.at("boundary").get<std::string>());
  }
  r["algebra"] = to_json(cdga::attach_cell(a, g, z));
}

void koszul(const JobSpec& job, Json& r) {
  int m = option(job, job.m, "m");
  if (m < 0) throw PreconditionError("m must be nonnegative");
  auto complexes = cdga::koszul_complex(m, job.max_weight);
  Json table = Json::array();
  bool exact = true;
  for (int w = 0; w <= job.max_weight; ++w)
    for (int k = 0; k <= m; ++k) {
      int dim = linalg::homology(complexes[static_cast<std::size_t>(w)], k).dimension;
      exact = exact && dim == (w == 0 && k == 0 ? 1 : 0);
      table.push_back({{"degree", k}, {"weight", w}, {"dimension", dim}});
    }
  r["algebra"] = to_json(cdga::koszul_algebra(m));
  r["homology"] = table;
  r["verdict"] = exact;
}

void tor(const JobSpec& job, Json& r) {
  int m = option(job, job.m, "m");
  if (m < 0) throw PreconditionError("m must be nonnegative");
  std::vector<int> expected{1};
  for (int j = 1; j <= m; ++j) expected.push_back(expected.back() * (m - j + 1) / j);
  auto dims = cdga::tor_dimensions(m);
  r["tor"] = dims;
  r["binomial"] = expected;
  r["verdict"] = dims == expected;
}

void q_functor(const JobSpec& job, Json& r) {
  auto q = scdga::q_functor(algebra_from_json(require(job.input, "algebra")), job.max_degree, job.max_weight);
  Json levels = Json::array();
  for (int n = 0; n <= q.top_level(); ++n) {
    Json gens = Json::array();
    const auto& level = q.algebra.level(n);
    for (std::size_t g = 0; g < level.generator_count(); ++g)
      gens.push_back({{"name", level.generators()[g].name},
                      {"label", q.algebra.generators(n)[g].label},
                      {"weight", q.algebra.generators(n)[g].weight}});
    levels.push_back({{"level", n}, {"generators", gens}});
  }
  r["levels"] = levels;
  r["dimensions"] = dimension_table(q.algebra, job.max_weight);
}

void beta_check(const JobSpec& job, Json& r) {
  auto q = scdga::q_functor(algebra_from_json(require(job.input, "algebra")), job.max_degree, job.max_weight);
  auto cert = scdga::beta(q);
  Json table = Json::array();
  for (const auto& c : cert.comparisons)
    table.push_back({{"degree", c.degree},
                     {"weight", c.weight},
                     {"source", c.source_dim},
                     {"target", c.target_dim},
                     {"rank", c.induced_rank},
                     {"bijective", c.bijective()}});
  r["through_degree"] = cert.max_degree - 1;
  r["comparisons"] = table;
  r["verdict"] = cert.verdict;
}

void theta(const JobSpec& job, Json& r) {
  auto q = scdga::q_functor(algebra_from_json(require(job.input, "algebra")), job.max_degree, job.max_weight);
  auto b = simplicial_algebra_input(require(job.input, "target"), job);
  if (b.top_level() < q.top_level()) throw PreconditionError("target is truncated below the source");
  const auto& phi = require(job.input, "phi");
  if (!phi.is_object()) throw ParseError("'phi' maps generator names to polynomials");
  std::vector<Polynomial> values;
  for (const auto& g : q.source.generators()) {
    if (!phi.contains(g.name) || !phi.at(g.name).is_string()) throw ParseError("'phi' needs a polynomial for " + g.name);
    if (g.degree > b.top_level()) throw PreconditionError("generator " + g.name + " lies above the truncation");
    values.push_back(b.level(g.degree).parse(phi.at(g.name).get<std::string>()));
  }
  auto map = scdga::induced_theta(q, b, scdga::extend_by_products(q, b, values));
  Json images = Json::array();
  for (int n = 0; n <= q.top_level(); ++n)
    for (std::size_t g = 0; g < map.images[static_cast<std::size_t>(n)].size(); ++g)
      images.push_back({{"level", n},
                        {"generator", q.algebra.generators(n)[g].label},
                        {"image", b.str(n, map.images[static_cast<std::size_t>(n)][g])}});
  r["identity"] = map.is_identity(q.algebra);
  r["images"] = images;
}

void connectivity(const JobSpec& job, Json& r) {
  auto b = simplicial_algebra_input(job.input, job);
  int power = option(job, job.power, "power", 2);
  auto rep = scdga::connectivity_check(b, power, job.max_weight);
  Json table = Json::array();
  for (const auto& e : rep.entries)
    table.push_back({{"degree", e.degree}, {"weight", e.weight}, {"dimension", e.dimension}});
  r["power"] = rep.power;
  r["through_degree"] = rep.through_degree;
  r["homotopy"] = table;
  r["verdict"] = rep.verdict;
}

void kernel_ideal_check(const JobSpec& job, Json& r) {
  int n = option(job, job.sphere, "sphere");
  int k = option(job, job.level, "level");
  int i = option(job, job.face, "face");
  auto rep = scdga::face_kernel_ideal_check(n, k, i, job.max_weight);
  Json table = Json::array();
  for (const auto& e : rep.entries)
    table.push_back({{"weight", e.weight}, {"kernel", e.kernel_dim}, {"span", e.span_dim}, {"contained", e.contained}});
  r["sphere"] = n;
  r["level"] = k;
  r["face"] = i;
  r["entries"] = table;
  r["verdict"] = rep.verdict;
}

void classical_point(const JobSpec& job, Json& r) {
  auto a = algebra_from_json(require(job.input, "algebra"));
  if (job.input.contains("point")) {
    auto p = point_from_json(job.input.at("point"));
    r["point"] = to_json(p);
    r["verdict"] = dcart::is_classical_point(a, p);
    return;
  }
  auto points = dcart::enumerate_classical_points(a);
  r["complete"] = points.has_value();
  r["points"] = points ? points_json(*points) : Json::array();
}

void tangent(const JobSpec& job, Json& r) {
  auto a = algebra_from_json(require(job.input, "algebra"));
  auto p = point_from_json(require(job.input, "point"));
  auto t = dcart::tangent_complex(a, p);
  r["point"] = to_json(p);
  r["generators"] = t.generators;
  r["maps"] = matrices(t.maps);
  r["cohomology"] = t.cohomology();
}

void weq_check(const JobSpec& job, Json& r) {
  auto f = map_from_json(require(job.input, "map"));
  auto supplied = [&](const char* key, const FreeCDGA& a) {
    if (job.input.contains(key)) return points_from(job.input.at(key));
    auto all = dcart::enumerate_classical_points(a);
    if (!all) throw PreconditionError(std::string("classical points of the ") + key + " side cannot be enumerated; supply '" + key + "'");
    return *all;
  };
  // source points live on the geometric source, the spectrum of f.target().
  auto source_points = supplied("source_points", f.target());
  auto target_points = supplied("target_points", f.source());
  auto rep = dcart::is_weak_equivalence(f, source_points, target_points);
  Json per_point = Json::array();
  for (const auto& pc : rep.points)
    per_point.push_back({{"source", to_json(pc.source)},
                         {"target", to_json(pc.target)},
                         {"source_cohomology", pc.source_cohomology},
                         {"target_cohomology", pc.target_cohomology},
                         {"induced_ranks", pc.induced_ranks},
                         {"quasi_iso", pc.quasi_iso}});
  r["source_points"] = points_json(source_points);
  r["target_points"] = points_json(target_points);
  r["scope"] = "relative to the rational points listed";
  r["bijection"] = rep.bijection;
  r["points"] = per_point;
  r["verdict"] = rep.verdict;
}

void fibration_check(const JobSpec& job, Json& r) {
  auto f = map_from_json(require(job.input, "map"));
  auto p = point_from_json(require(job.input, "point"));
  r["point"] = to_json(p);
  r["tangent_maps"] = matrices(dcart::tangent_map(f, p));
  r["verdict"] = dcart::is_fibration_at(f, p);
}

void forms(const JobSpec& job, Json& r) {
  auto a = algebra_from_json(require(job.input, "algebra"));
  std::optional<dcart::Point> origin;
  if (job.input.contains("origin")) origin = point_from_json(job.input.at("origin"));
  auto omega = dcart::differential_forms(a, origin, job.max_degree, job.max_weight);
  Json table = Json::array();
  for (int n = 0; n <= job.max_degree; ++n)
    for (int w = 0; w <= job.max_weight; ++w)
      table.push_back({{"degree", n},
                       {"weight", w},
                       {"dimension", omega.dims[static_cast<std::size_t>(n)][static_cast<std::size_t>(w)]}});
  r["algebra"] = to_json(omega.algebra);
  r["dimensions"] = table;
}

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"homology", homology},
      {"homotopy", homotopy},
      {"normalize", normalize},
      {"gamma", gamma},
      {"ez-table", ez_table},
      {"attach", attach},
      {"koszul", koszul},
      {"tor", tor},
      {"q-functor", q_functor},
      {"beta-check", beta_check},
      {"theta", theta},
      {"connectivity", connectivity},
      {"kernel-ideal-check", kernel_ideal_check},
      {"classical-point", classical_point},
      {"tangent", tangent},
      {"weq-check", weq_check},
      {"fibration-check", fibration_check},
      {"forms", forms},
  };
  return table;
}

// Table rendering: scalars as "key: value", lists of flat records as aligned columns.
bool is_flat_record(const Json& j) {
  return j.is_object() && std::all_of(j.begin(), j.end(), [](const Json& v) { return v.is_primitive(); });
}

std::string cell(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void render_table(const Json& j, int indent, std::ostringstream& out) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : j.items()) {
    if (v.is_primitive()) {
      out << pad << key << ": " << cell(v) << "\n";
    } else if (v.is_array() && !v.empty() && !v.front().empty() && std::all_of(v.begin(), v.end(), is_flat_record)) {
      std::vector<std::string> cols;
      for (const auto& [k, x] : v.front().items()) cols.push_back(k);
      std::vector<std::size_t> width;
      for (const auto& c : cols) width.push_back(c.size());
      for (const auto& row : v)
        for (std::size_t c = 0; c < cols.size(); ++c) width[c] = std::max(width[c], cell(row.value(cols[c], Json())).size());
      out << pad << key << ":\n";
      auto line = [&](const std::function<std::string(std::size_t)>& text) {
        out << pad << " ";
        for (std::size_t c = 0; c < cols.size(); ++c) {
          std::string s = text(c);
          out << " " << std::string(width[c] - s.size(), ' ') << s;
        }
        out << "\n";
      };
      line([&](std::size_t c) { return cols[c]; });
      for (const auto& row : v) line([&](std::size_t c) { return cell(row.value(cols[c], Json())); });
    } else if (v.is_object() && !v.empty()) {
      out << pad << key << ":\n";
      render_table(v, indent + 2, out);
    } else if (v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& x) { return x.is_object(); })) {
      out << pad << key << ":\n";
      for (const auto& item : v) {
        out << pad << "  -\n";
        render_table(item, indent + 4, out);
      }
    } else {
      out << pad << key << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, h] : handlers()) out.push_back(name);
    return out;
  }();
  return names;
}

JobResult run_job(const JobSpec& job) {
  auto it = handlers().find(job.command);
  if (it == handlers().end()) throw ParseError("unknown command '" + job.command + "'");
  if (job.max_degree < 1) throw PreconditionError("T must be at least 1");
  if (job.max_weight < 0) throw PreconditionError("W must be nonnegative");
  JobResult result;
  result.report = Json{{"version", kVersion}, {"command", job.command}, {"max_degree", job.max_degree}, {"max_weight", job.max_weight}};
  try {
    it->second(job, result.report);
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
  if (result.report.contains("verdict") && !result.report.at("verdict").get<bool>()) result.exit_code = 1;
  return result;
}

std::string render(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format == "table") {
    std::ostringstream out;
    render_table(report, 0, out);
    return out.str();
  }
  throw ParseError("unknown format '" + format + "'");
}

}  // namespace dk::cli
