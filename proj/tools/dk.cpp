#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "dk/cli/run.hpp"
#include "dk/error.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw dk::ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Dold-Kan computations for simplicial and DG commutative algebras"};
  dk::cli::JobSpec job;
  std::string in_path, out_path;
  app.add_option("command", job.command, "Command to run")->required()->check(CLI::IsMember(dk::cli::command_names()));
  app.add_option("-T,--max-degree", job.max_degree, "Truncation degree T")->capture_default_str();
  app.add_option("-W,--max-weight", job.max_weight, "Weight bound W")->capture_default_str();
  app.add_option("--in", in_path, "Input document ('-' for stdin)");
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--format", job.format, "Report format")->check(CLI::IsMember({"json", "table"}))->capture_default_str();
  app.add_option("--degree", job.degree, "homology: highest chain degree");
  app.add_option("--power", job.power, "connectivity: filtration power r");
  app.add_option("-m,--variables", job.m, "koszul, tor: number of variables");
  app.add_option("--sphere", job.sphere, "kernel-ideal-check: sphere dimension");
  app.add_option("--level", job.level, "kernel-ideal-check: simplicial level");
  app.add_option("--face", job.face, "kernel-ideal-check: face index");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    job.input = in_path.empty() ? dk::cli::Json{{"version", dk::cli::kVersion}} : dk::cli::parse_document(read_input(in_path));
    auto result = dk::cli::run_job(job);
    std::string text = dk::cli::render(result.report, job.format);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) throw dk::PreconditionError("cannot write '" + out_path + "'");
      out << text;
    }
    return result.exit_code;
  } catch (const dk::ParseError& e) {
    std::cerr << "dk: parse error: " << e.what() << "\n";
    return 2;
  } catch (const dk::PreconditionError& e) {
    std::cerr << "dk: precondition violated: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "dk: internal error: " << e.what() << "\n";
    return 4;
  }
}
