#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "../support/random_cdga.hpp"
#include "dk/dcart/derived_space.hpp"
#include "dk/error.hpp"

using namespace dk::dcart;
using dk::cdga::AlgebraMap;
using dk::cdga::GeneratorSpec;
using dk::linalg::Matrix;

namespace {

FreeCDGA algebra(std::vector<GeneratorSpec> gens, std::map<std::string, std::string> d = {}) {
  return FreeCDGA(std::move(gens), d);
}

const FreeCDGA& point_algebra() {
  static const FreeCDGA k;
  return k;
}

Point origin(const FreeCDGA& a) {
  Point p;
  for (const auto& g : a.generators())
    if (g.degree == 0) p[g.name] = 0;
  return p;
}

// Oracle: the inclusion X -> X (x) (y, z; dz = y) with the cell in degrees (k, k+1).
FreeCDGA with_acyclic_cell(const FreeCDGA& x, int k, int weight) {
  auto a = dk::cdga::attach_cell(x, {"cy", k, weight}, {});
  return dk::cdga::attach_cell(a, {"cz", k + 1, weight}, a.variable("cy"));
}

AlgebraMap inclusion(const FreeCDGA& x, const FreeCDGA& bigger) {
  std::vector<dk::cdga::Polynomial> images;
  for (const auto& g : x.generators()) images.push_back(bigger.variable(g.name));
  return AlgebraMap(x, bigger, images);
}

Scalar random_scalar(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  return Scalar(num(rng), den(rng));
}

}  // namespace

TEST_CASE("classical points") {
  auto lin = algebra({{"x", 0, {}}, {"xi", 1, {}}}, {{"xi", "x"}});
  auto sq = algebra({{"x", 0, {}}, {"xi", 1, {}}}, {{"xi", "x^2"}});
  auto flat = algebra({{"x", 0, {}}, {"y", 0, {}}});
  CHECK(is_classical_point(flat, {{"x", 3}, {"y", Scalar(-1, 2)}}));
  CHECK_FALSE(is_classical_point(lin, {{"x", 1}}));
  CHECK(is_classical_point(sq, {{"x", 0}}));
  CHECK_THROWS_AS(is_classical_point(flat, {{"x", 1}}), dk::PreconditionError);
  CHECK_THROWS_AS(is_classical_point(sq, {{"x", 0}, {"xi", 0}}), dk::PreconditionError);
  CHECK(evaluate(sq, sq.parse("3*x^2 - x + 2"), {{"x", Scalar(1, 3)}}) == Scalar(2));
}

TEST_CASE("tangent complexes") {
  auto lin = algebra({{"x", 0, {}}, {"xi", 1, {}}}, {{"xi", "x"}});
  auto t = tangent_complex(lin, {{"x", 0}});
  CHECK(t.amplitude() == 1);
  CHECK(t.map(0).at(0, 0) == Scalar(1));
  CHECK(t.cohomology() == std::vector<int>{0, 0});

  auto sq = algebra({{"x", 0, {}}, {"xi", 1, {}}}, {{"xi", "x^2"}});
  t = tangent_complex(sq, {{"x", 0}});
  CHECK(t.map(0).is_zero());
  CHECK(t.cohomology() == std::vector<int>{1, 1});
  CHECK_THROWS_AS(tangent_complex(sq, {{"x", 1}}), dk::PreconditionError);

  auto plane = algebra({{"x", 0, {}}, {"y", 0, {}}, {"xi", 1, {}}}, {{"xi", "x"}});
  CHECK(tangent_complex(plane, origin(plane)).cohomology() == std::vector<int>{1, 0});

  // Away from the origin the shift matters: d xi = x^2 - 1 has Jacobian 2x.
  auto two = algebra({{"x", 0, {}}, {"xi", 1, {}}}, {{"xi", "x^2 - 1"}});
  for (int s : {-1, 1}) {
    auto tt = tangent_complex(two, {{"x", s}});
    CHECK(tt.map(0).at(0, 0) == Scalar(2 * s));
    CHECK(tt.cohomology() == std::vector<int>{0, 0});
  }

  CHECK(tangent_complex(point_algebra(), {}).cohomology() == std::vector<int>{0});
}

TEST_CASE("weak equivalences") {
  auto lin = algebra({{"x", 0, {}}, {"xi", 1, {}}}, {{"xi", "x"}});
  auto sq = algebra({{"x", 0, {}}, {"xi", 1, {}}}, {{"xi", "x^2"}});
  auto two = algebra({{"x", 0, {}}, {"xi", 1, {}}}, {{"xi", "x^2 - 1"}});

  CHECK(is_weak_equivalence(AlgebraMap::identity(two), {{{"x", 1}}, {{"x", -1}}}, {{{"x", -1}}, {{"x", 1}}}).verdict);

  auto aug = AlgebraMap(lin, point_algebra(), std::map<std::string, std::string>{});
  auto r = is_weak_equivalence(aug, {Point{}}, {{{"x", 0}}});
  CHECK(r.bijection);
  CHECK(r.verdict);

  auto crit = AlgebraMap(sq, point_algebra(), std::map<std::string, std::string>{});
  r = is_weak_equivalence(crit, {Point{}}, {{{"x", 0}}});
  CHECK(r.bijection);
  CHECK_FALSE(r.verdict);
  REQUIRE(r.points.size() == 1);
  CHECK(r.points[0].source_cohomology == std::vector<int>{0});
  CHECK(r.points[0].target_cohomology == std::vector<int>{1, 1});

  // Both tangent complexes vanish, but one point of the target is missed.
  auto one_side = AlgebraMap(two, point_algebra(), std::map<std::string, std::string>{{"x", "1"}});
  r = is_weak_equivalence(one_side, {Point{}}, {{{"x", 1}}, {{"x", -1}}});
  CHECK_FALSE(r.bijection);
  CHECK_FALSE(r.verdict);
  CHECK(r.points[0].quasi_iso);

  CHECK_THROWS_AS(is_weak_equivalence(aug, {Point{}}, {{{"x", 1}}}), dk::PreconditionError);
}

TEST_CASE("fibrations") {
  auto line = algebra({{"x", 0, {}}});
  auto plane = algebra({{"x", 0, {}}, {"y", 0, {}}});
  CHECK(is_fibration_at(AlgebraMap::identity(plane), {{"x", 2}, {"y", 5}}));
  auto projection = AlgebraMap(line, plane, std::map<std::string, std::string>{{"x", "x"}});
  CHECK(is_fibration_at(projection, {{"x", 3}, {"y", -1}}));
  auto constant = AlgebraMap(line, point_algebra(), std::map<std::string, std::string>{});
  CHECK_FALSE(is_fibration_at(constant, {}));
  // x -> y^2 is a submersion away from y = 0 only.
  auto fold = AlgebraMap(line, plane, std::map<std::string, std::string>{{"x", "y^2"}});
  CHECK(is_fibration_at(fold, {{"x", 0}, {"y", 1}}));
  CHECK_FALSE(is_fibration_at(fold, {{"x", 0}, {"y", 0}}));
}

TEST_CASE("tangent maps are functorial") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-2, 2);
  auto random_map = [&](const FreeCDGA& from, const FreeCDGA& to) {
    std::vector<dk::cdga::Polynomial> images;
    for (std::size_t i = 0; i < from.generator_count(); ++i) {
      dk::cdga::Polynomial p;
      for (int w = 0; w <= 2; ++w)
        for (const auto& m : to.basis(0, w)) p.add(m, coef(rng));
      images.push_back(p);
    }
    return AlgebraMap(from, to, images);
  };
  auto affine = [](int m, const std::string& prefix) {
    std::vector<GeneratorSpec> gens;
    for (int i = 0; i < m; ++i) gens.push_back({prefix + std::to_string(i), 0, 1});
    return FreeCDGA(gens, std::map<std::string, std::string>{});
  };
  for (int trial = 0; trial < 20; ++trial) {
    auto x = affine(1 + trial % 3, "u");
    auto y = affine(1 + (trial / 3) % 3, "v");
    auto z = affine(1 + (trial / 9) % 3, "w");
    auto f = random_map(x, y);
    auto g = random_map(y, z);
    Point p;
    for (const auto& gen : z.generators()) p[gen.name] = random_scalar(rng);
    auto composite = tangent_map(dk::cdga::compose(g, f), p);
    auto tf = tangent_map(f, pullback(g, p));
    auto tg = tangent_map(g, p);
    CHECK(composite[0] == tf[0] * tg[0]);
    CHECK(pullback(dk::cdga::compose(g, f), p) == pullback(f, pullback(g, p)));
  }

  // With positive-degree generators: (x, xi; d xi = x^2) -> (s, t, eta; d eta = s^2 t^2), x -> s t.
  auto crit = algebra({{"x", 0, {}}, {"xi", 1, {}}}, {{"xi", "x^2"}});
  auto big = algebra({{"s", 0, {}}, {"t", 0, {}}, {"eta", 1, {}}}, {{"eta", "s^2*t^2"}});
  auto h = AlgebraMap(crit, big, std::map<std::string, std::string>{{"x", "s*t"}, {"xi", "eta"}});
  auto l = tangent_map(h, {{"s", 0}, {"t", 2}});
  CHECK(l[0].at(0, 0) == Scalar(2));
  CHECK(l[0].at(0, 1) == Scalar(0));
  CHECK(l[1].at(0, 0) == Scalar(1));
}

TEST_CASE("linearized differential squares to zero") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 25; ++trial) {
    auto a = dk::testing::random_cellular_algebra(rng, 2 + trial % 3);
    auto t = tangent_complex(a, origin(a));
    for (int j = 0; j + 1 < t.amplitude(); ++j) CHECK((t.map(j + 1) * t.map(j)).is_zero());
    int euler = 0, dims = 0;
    for (int j = 0; j <= t.amplitude(); ++j) {
      euler += (j % 2 ? -1 : 1) * t.cohomology()[static_cast<std::size_t>(j)];
      dims += (j % 2 ? -1 : 1) * t.dim(j);
    }
    CHECK(euler == dims);
  }
  // At non-origin points of a genuinely curved example.
  auto a = algebra({{"x", 0, {}}, {"y", 0, {}}, {"xi", 1, {}}, {"eta", 1, {}}, {"z", 2, {}}},
                   {{"xi", "x*y - y"}, {"eta", "x*y^2 - y^2"}, {"z", "y*xi - eta"}});
  for (const Point& p : {Point{{"x", 1}, {"y", 7}}, Point{{"x", 3}, {"y", 0}}}) {
    auto t = tangent_complex(a, p);
    CHECK((t.map(1) * t.map(0)).is_zero());
  }
}

TEST_CASE("acyclic cells change no tangent cohomology") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> deg(0, 2), wt(1, 3);
  for (int trial = 0; trial < 20; ++trial) {
    auto x = dk::testing::random_cellular_algebra(rng, 1 + trial % 3);
    int k = deg(rng);
    auto bigger = with_acyclic_cell(x, k, wt(rng));
    auto f = inclusion(x, bigger);
    CHECK(dk::cdga::is_quasi_iso(f, 3, 3).verdict);

    std::vector<Point> points{origin(x)};
    if (auto all = enumerate_classical_points(x)) points = *all;
    std::vector<Point> lifted;
    for (auto p : points) {
      if (k == 0) p["cy"] = 0;
      lifted.push_back(p);
    }
    auto r = is_weak_equivalence(f, lifted, points);
    CHECK(r.verdict);
    for (const auto& pc : r.points) {
      auto a = pc.source_cohomology, b = pc.target_cohomology;
      a.resize(std::max(a.size(), b.size()));
      b.resize(a.size());
      CHECK(a == b);
    }
  }
}

TEST_CASE("rational roots") {
  std::mt19937 rng(3);
  auto times = [](const std::vector<Scalar>& p, const std::vector<Scalar>& q) {
    std::vector<Scalar> out(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    return out;
  };
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Scalar> poly{random_scalar(rng) + 5};  // nonzero leading constant
    std::vector<Scalar> roots;
    for (int r = 0; r < 1 + trial % 3; ++r) {
      roots.push_back(random_scalar(rng));
      poly = times(poly, {-roots.back(), 1});
    }
    if (trial % 2) poly = times(poly, {trial % 4 == 1 ? 1 : -2, 0, 1});  // t^2+1 or t^2-2
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    CHECK(rational_roots(poly) == roots);
  }
  CHECK(rational_roots({5}).empty());
  CHECK_THROWS_AS(rational_roots({0, 0}), dk::PreconditionError);
}

TEST_CASE("classical locus enumeration") {
  auto two = algebra({{"x", 0, {}}, {"xi", 1, {}}}, {{"xi", "x^2 - 1"}});
  auto pts = enumerate_classical_points(two);
  REQUIRE(pts);
  CHECK(*pts == std::vector<Point>{{{"x", -1}}, {{"x", 1}}});

  auto grid = algebra({{"x", 0, {}}, {"y", 0, {}}, {"a", 1, {}}, {"b", 1, {}}, {"c", 1, {}}},
                      {{"a", "x^2 - x"}, {"b", "y^2 - 4"}, {"c", "x^3 - x^2"}});
  pts = enumerate_classical_points(grid);
  REQUIRE(pts);
  CHECK(pts->size() == 4);
  for (const auto& p : *pts) CHECK(is_classical_point(grid, p));

  auto linear = algebra({{"x", 0, {}}, {"y", 0, {}}, {"a", 1, {}}, {"b", 1, {}}}, {{"a", "x + y - 1"}, {"b", "x - y"}});
  pts = enumerate_classical_points(linear);
  REQUIRE(pts);
  CHECK(*pts == std::vector<Point>{{{"x", Scalar(1, 2)}, {"y", Scalar(1, 2)}}});

  auto inconsistent = algebra({{"x", 0, {}}, {"a", 1, {}}, {"b", 1, {}}}, {{"a", "x"}, {"b", "x - 1"}});
  CHECK(enumerate_classical_points(inconsistent)->empty());
  CHECK(enumerate_classical_points(algebra({{"a", 1, {}}}, {{"a", "1"}}))->empty());
  CHECK(*enumerate_classical_points(point_algebra()) == std::vector<Point>{Point{}});

  CHECK_FALSE(enumerate_classical_points(algebra({{"x", 0, {}}})));
  CHECK_FALSE(enumerate_classical_points(algebra({{"x", 0, {}}, {"y", 0, {}}, {"a", 1, {}}}, {{"a", "x*y"}})));
  CHECK_FALSE(enumerate_classical_points(algebra({{"x", 0, {}}, {"y", 0, {}}, {"a", 1, {}}}, {{"a", "x - y"}})));
}

TEST_CASE("differential forms") {
  auto line = algebra({{"x", 0, 1}});
  auto forms = differential_forms(line, origin(line), 2, 3);
  CHECK(forms.dims[0] == std::vector<int>{1, 1, 1, 1});
  CHECK(forms.dims[1] == std::vector<int>{0, 0, 0, 0});

  auto sq = algebra({{"x", 0, {}}, {"xi", 1, {}}}, {{"xi", "x^2"}});
  forms = differential_forms(sq, Point{{"x", 0}}, 2, 3);
  CHECK(forms.algebra.generator_count() == 2);
  CHECK(forms.algebra.differential_of(1).is_zero());
  CHECK(forms.dims[1] == std::vector<int>{0, 1, 1, 1});  // xi, x*xi, x^2*xi
  CHECK(forms.dims[2] == std::vector<int>{0, 0, 0, 0});

  forms = differential_forms(point_algebra(), Point{}, 2, 2);
  CHECK(forms.dims[0] == std::vector<int>{1, 0, 0});

  CHECK_THROWS_AS(differential_forms(line, std::nullopt, 2, 2), dk::PreconditionError);
  CHECK_THROWS_AS(differential_forms(sq, Point{{"x", 1}}, 2, 2), dk::PreconditionError);
}
