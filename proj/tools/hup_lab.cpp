// hup-lab: runs verification scenarios and writes transform grids.
//
//   hup-lab run <scenario-file> [--tolerance X] [--quiet]
//   hup-lab grid <scenario-file> --out <path> [--quiet]
//
// Exit status: 0 pass, 1 a check failed, 2 usage or precondition error,
// 3 I/O error.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

#include "hup/scenario.hpp"

namespace {

enum Exit : int { kPass = 0, kCheckFail = 1, kUsage = 2, kIo = 3 };

int run(const std::string& path, const hup::cli::RunOptions& opts, bool quiet) {
  const auto start = std::chrono::steady_clock::now();
  const auto scenario = hup::cli::load_scenario(path);
  const auto report = hup::cli::run_scenario(scenario, opts);
  hup::cli::write_report(std::cout, report);
  if (!quiet) {
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    std::cerr << "elapsed " << dt.count() << " s\n";
  }
  return report.pass() ? kPass : kCheckFail;
}

int grid(const std::string& path, const std::string& out_path, bool quiet) {
  const auto scenario = hup::cli::load_scenario(path);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw hup::cli::IoError("cannot write '" + out_path + "'");
  hup::cli::write_grid_csv(scenario, out);
  out.flush();
  if (!out) throw hup::cli::IoError("write failed for '" + out_path + "'");
  if (!quiet) std::cerr << "wrote " << out_path << '\n';
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heisenberg uniqueness pair laboratory"};
  app.require_subcommand(1);
  bool quiet = false;
  app.add_flag("--quiet", quiet, "Suppress progress output on stderr");

  std::string run_file;
  std::optional<double> tolerance;
  auto* run_cmd = app.add_subcommand("run", "Run a scenario and print its report");
  run_cmd->add_option("scenario", run_file, "Scenario file")->required();
  run_cmd->add_option("--tolerance", tolerance, "Override the scenario's vanishing tolerance");
  run_cmd->add_flag("--quiet", quiet, "Suppress progress output on stderr");

  std::string grid_file;
  std::string out_path;
  auto* grid_cmd = app.add_subcommand("grid", "Write the transform grid of an ft_grid scenario as CSV");
  grid_cmd->add_option("scenario", grid_file, "Scenario file")->required();
  grid_cmd->add_option("--out", out_path, "CSV output path")->required();
  grid_cmd->add_flag("--quiet", quiet, "Suppress progress output on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*run_cmd) return run(run_file, hup::cli::RunOptions{tolerance}, quiet);
    return grid(grid_file, out_path, quiet);
  } catch (const hup::cli::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const hup::Error& e) {
    std::cout << "status: ERROR\nerror: " << e.what() << '\n';
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
}
