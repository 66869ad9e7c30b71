#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

#include "../support/random_cdga.hpp"
#include "../support/random_objects.hpp"
#include "dk/cli/run.hpp"
#include "dk/error.hpp"

using namespace dk::cli;

namespace {

Json doc(Json fields) {
  Json out{{"version", kVersion}};
  for (const auto& [k, v] : fields.items()) out[k] = v;
  return out;
}

Json sphere1() { return Json{{"generators", {{{"name", "a"}, {"degree", 1}, {"weight", 1}}}}}; }

Json disk1() {
  return Json{{"generators", {{{"name", "a"}, {"degree", 0}, {"weight", 1}}, {{"name", "b"}, {"degree", 1}, {"weight", 1}}}},
              {"differential", {{"b", "a"}}}};
}

Json critical() {
  return Json{{"generators", {{{"name", "x"}, {"degree", 0}}, {{"name", "xi"}, {"degree", 1}}}},
              {"differential", {{"xi", "x^2"}}}};
}

JobResult run(const std::string& command, Json input, int t = 4, int w = 4) {
  JobSpec job;
  job.command = command;
  job.input = doc(std::move(input));
  job.max_degree = t;
  job.max_weight = w;
  return run_job(job);
}

int dimension_at(const Json& table, int degree, int weight) {
  for (const auto& row : table)
    if (row["degree"] == degree && row["weight"] == weight) return row["dimension"].get<int>();
  return -1;
}

// One input per command, small enough to run quickly.
std::vector<std::pair<JobSpec, int>> fixtures() {
  Json cx = to_json(dk::linalg::ChainComplex::disk(2, 2));
  Json s1c = to_json(dk::linalg::ChainComplex::sphere(1, 1));
  Json crit = critical();
  Json two = {{"generators", {{{"name", "x"}, {"degree", 0}}, {{"name", "xi"}, {"degree", 1}}}},
              {"differential", {{"xi", "x^2 - 1"}}}};
  Json aug = {{"source", crit}, {"target", {{"generators", Json::array()}}}, {"images", Json::object()}};
  Json inclusion = {{"source", {{"generators", {{{"name", "x"}, {"degree", 0}}}}}},
                    {"target", {{"generators", {{{"name", "x"}, {"degree", 0}}, {{"name", "y"}, {"degree", 0}}}}}},
                    {"images", {{"x", "x"}}}};
  auto job = [](std::string command, Json input, int t = 3, int w = 3) {
    JobSpec j;
    j.command = std::move(command);
    j.input = doc(std::move(input));
    j.max_degree = t;
    j.max_weight = w;
    return j;
  };
  std::vector<std::pair<JobSpec, int>> out{
      {job("homology", {{"algebra", sphere1()}}), 0},
      {job("homotopy", {{"complex", cx}}), 0},
      {job("normalize", {{"complex", cx}}), 0},
      {job("gamma", {{"complex", cx}}), 0},
      {job("ez-table", {{"complex", s1c}}, 3, 2), 0},
      {job("attach", {{"algebra", sphere1()}, {"cell", {{"name", "c"}, {"degree", 3}, {"weight", 2}}}}), 0},
      {job("q-functor", {{"algebra", disk1()}}, 2, 2), 0},
      {job("beta-check", {{"algebra", disk1()}}), 0},
      {job("theta", {{"algebra", sphere1()}, {"target", {{"algebra", sphere1()}}}, {"phi", {{"a", "v000000"}}}}, 3, 2), 0},
      {job("connectivity", {{"complex", s1c}}, 3, 3), 0},
      {job("classical-point", {{"algebra", two}}), 0},
      {job("classical-point", {{"algebra", two}, {"point", {{"x", "2"}}}}), 1},
      {job("tangent", {{"algebra", crit}, {"point", {{"x", "0"}}}}), 0},
      {job("weq-check", {{"map", aug}}), 1},
      {job("fibration-check", {{"map", inclusion}, {"point", {{"x", "1/2"}, {"y", "3"}}}}), 0},
      {job("forms", {{"algebra", crit}, {"origin", {{"x", "0"}}}}), 0},
  };
  JobSpec k = job("koszul", Json::object());
  k.m = 2;
  out.emplace_back(k, 0);
  JobSpec t = job("tor", Json::object());
  t.m = 3;
  out.emplace_back(t, 0);
  JobSpec ki = job("kernel-ideal-check", Json::object());
  ki.sphere = 1;
  ki.level = 2;
  ki.face = 1;
  out.emplace_back(ki, 0);
  return out;
}

int run_binary(const std::string& args) {
  int status = std::system((std::string(DK_BINARY) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("command examples") {
  JobSpec h;
  h.command = "homology";
  h.input = doc({{"algebra", sphere1()}});
  h.degree = 1;
  auto r = run_job(h);
  CHECK(dimension_at(r.report["homology"], 0, 0) == 1);
  CHECK(dimension_at(r.report["homology"], 1, 1) == 1);
  CHECK(dimension_at(r.report["homology"], 1, 0) == 0);
  CHECK(dimension_at(r.report["homology"], 2, 1) == -1);

  auto beta = run("beta-check", {{"algebra", disk1()}}, 3, 3);
  CHECK(beta.report["verdict"] == true);
  CHECK(beta.exit_code == 0);

  auto t = run("tangent", {{"algebra", critical()}, {"point", {{"x", "0"}}}});
  CHECK(t.report["cohomology"] == Json::array({1, 1}));

  auto theta = run("theta", {{"algebra", sphere1()}, {"target", {{"algebra", sphere1()}}}, {"phi", {{"a", "v000000"}}}}, 3, 2);
  CHECK(theta.report["identity"] == true);
}

TEST_CASE("every command runs with the expected exit code") {
  std::set<std::string> covered;
  for (const auto& [job, code] : fixtures()) {
    INFO(job.command);
    auto r = run_job(job);
    CHECK(r.exit_code == code);
    CHECK(r.report["version"] == kVersion);
    CHECK(r.report["command"] == job.command);
    covered.insert(job.command);
    CHECK_FALSE(render(r.report, "table").empty());
  }
  CHECK(covered.size() == command_names().size());
}

TEST_CASE("errors map to their kinds") {
  CHECK_THROWS_AS(parse_document("{"), dk::ParseError);
  CHECK_THROWS_AS(parse_document(R"({"version":"dk/0"})"), dk::ParseError);
  CHECK_THROWS_AS(run("homology", Json::object()), dk::ParseError);
  CHECK_THROWS_AS(run("homology", {{"algebra", {{"generators", {{{"name", "x"}, {"degree", "zero"}}}}}}}), dk::ParseError);
  CHECK_THROWS_AS(run("homology", {{"algebra", {{"generators", Json::array()}, {"differential", {{"q", "1"}}}}}}),
                  dk::PreconditionError);
  CHECK_THROWS_AS(run("tangent", {{"algebra", critical()}, {"point", {{"x", "1"}}}}), dk::PreconditionError);
  CHECK_THROWS_AS(run("forms", {{"algebra", critical()}}), dk::PreconditionError);
  CHECK_THROWS_AS(run("homology", {{"algebra", sphere1()}}, 0), dk::PreconditionError);
  CHECK_THROWS_AS(run("no-such-command", Json::object()), dk::ParseError);
  CHECK_THROWS_AS(run("tangent", {{"algebra", critical()}, {"point", {{"x", "1/0"}}}}), dk::ParseError);
}

TEST_CASE("emitted documents parse back to equal values") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = dk::testing::random_cellular_algebra(rng, 1 + trial % 4);
    CHECK(algebra_from_json(Json::parse(to_json(a).dump())) == a);

    auto c = dk::testing::random_chain_complex(rng, 3, 2);
    CHECK(complex_from_json(Json::parse(to_json(c).dump())) == c);
    auto v = dk::simplicial::gamma(c);
    CHECK(simplicial_from_json(Json::parse(to_json(v).dump())) == v);

    auto m = dk::testing::random_matrix(rng, 1 + trial % 3, 2 + trial % 2);
    CHECK(matrix_from_json(Json::parse(to_json(m).dump())) == m);

    auto f = dk::cdga::AlgebraMap::identity(a);
    auto back = map_from_json(Json::parse(to_json(f).dump()));
    CHECK(back.source() == f.source());
    CHECK(back.images() == f.images());
  }
  dk::dcart::Point p{{"x", dk::linalg::Scalar(-3, 7)}, {"y", 4}};
  CHECK(point_from_json(to_json(p)) == p);

  // Command outputs feed back as inputs.
  auto g = run("gamma", {{"complex", to_json(dk::linalg::ChainComplex::disk(2, 3))}}, 3);
  auto v = simplicial_from_json(g.report["simplicial"]);
  JobSpec n;
  n.command = "normalize";
  n.input = parse_document(render(g.report, "json"));
  n.max_degree = 3;
  auto nr = run_job(n);
  CHECK(complex_from_json(nr.report["complex"]) == dk::linalg::ChainComplex::disk(2, 3));

  auto att = run("attach", {{"algebra", sphere1()}, {"cell", {{"name", "c"}, {"degree", 2}, {"weight", 2}, {"boundary", "0"}}}});
  auto alg = algebra_from_json(att.report["algebra"]);
  CHECK(alg.generator_count() == 2);
  CHECK(algebra_from_json(to_json(alg)) == alg);
}

TEST_CASE("reports are deterministic across runs and thread counts") {
  for (const auto& [job, code] : fixtures()) {
    INFO(job.command);
    setenv("DK_THREADS", "1", 1);
    std::string one = render(run_job(job).report, "json");
    setenv("DK_THREADS", "4", 1);
    std::string four = render(run_job(job).report, "json");
    CHECK(one == four);
    CHECK(render(run_job(job).report, "table") == render(run_job(job).report, "table"));
  }
  unsetenv("DK_THREADS");
}

TEST_CASE("binary exit codes") {
  std::string dir = (std::filesystem::temp_directory_path() / "dk_cli_test_inputs").string();
  std::filesystem::create_directories(dir);
  auto write = [&](const std::string& name, const Json& j) {
    std::ofstream(dir + "/" + name) << j.dump();
    return dir + "/" + name;
  };
  auto d1 = write("d1.json", doc({{"algebra", disk1()}}));
  auto crit = write("crit.json", doc({{"algebra", critical()}, {"point", {{"x", "0"}}}}));
  auto weq = write("weq.json", doc({{"map", {{"source", critical()}, {"target", {{"generators", Json::array()}}}, {"images", Json::object()}}}}));
  auto bad = write("bad.json", Json{{"version", "dk/1"}, {"algebra", 3}});
  CHECK(run_binary("beta-check -T 3 -W 3 --in " + d1) == 0);
  CHECK(run_binary("tangent --format table --in " + crit) == 0);
  CHECK(run_binary("weq-check --in " + weq) == 1);
  CHECK(run_binary("homology --in " + bad) == 2);
  CHECK(run_binary("homology --in " + dir + "/missing.json") == 2);
  CHECK(run_binary("bogus") == 2);
  CHECK(run_binary("forms --in " + crit) == 3);
  CHECK(run_binary("homology -T 0 --in " + d1) == 3);

  auto out = dir + "/report.json";
  REQUIRE(run_binary("tangent --in " + crit + " --out " + out) == 0);
  std::ifstream in(out);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(parse_document(text)["cohomology"] == Json::array({1, 1}));
}
