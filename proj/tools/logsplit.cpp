// Command-line front end: classify, c1, sweep, selftest.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "logsplit/commands.hpp"

namespace {

// Opens `path`, or returns std::cin for "-" / empty.
std::istream* open_input(const std::string& path, std::ifstream& file) {
  if (path.empty() || path == "-") return &std::cin;
  file.open(path);
  if (!file) return nullptr;
  return &file;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Splitting types of canonically extended logarithmic connections on the punctured projective line"};
  app.require_subcommand(1);

  std::string input_path;
  double tol = 0.0;
  double integrality_tol = 0.0;
  int steps = 0;
  bool corrupt_golden = false;

  const auto add_tolerances = [&](CLI::App* cmd) {
    cmd->add_option("--tol", tol, "clustering / branch snapping / parallelism tolerance (default 1e-9)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--integrality-tol", integrality_tol, "allowed distance of the q-sum from an integer (default 1e-6)")
        ->check(CLI::PositiveNumber);
  };

  auto* classify = app.add_subcommand("classify", "classify an input document (file or stdin)");
  classify->add_option("input", input_path, "input JSON path, '-' for stdin");
  add_tolerances(classify);

  auto* c1 = app.add_subcommand("c1", "print the first Chern class and diagnostics");
  c1->add_option("input", input_path, "input JSON path, '-' for stdin");
  add_tolerances(c1);

  auto* sweep = app.add_subcommand("sweep", "CSV of character roots over the lattice (i/steps, j/steps)");
  sweep->add_option("--steps", steps, "lattice steps per axis")->required();

  auto* selftest = app.add_subcommand("selftest", "run the embedded golden checks");
  add_tolerances(selftest);
  selftest->add_flag("--corrupt-golden", corrupt_golden, "test hook: perturb one embedded golden entry")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : logsplit::exit_code::kInvalid;
  }

  logsplit::CommandOptions options;
  for (auto* cmd : {classify, c1, selftest}) {
    if (cmd->parsed() && cmd->count("--tol")) options.tol = tol;
    if (cmd->parsed() && cmd->count("--integrality-tol")) options.integrality_tol = integrality_tol;
  }

  if (sweep->parsed()) return logsplit::cmd_sweep(steps, std::cout, std::cerr);

  if (selftest->parsed()) {
    logsplit::SelftestOptions self;
    if (options.tol) self.tolerances.tol = *options.tol;
    if (options.integrality_tol) self.tolerances.integrality = *options.integrality_tol;
    self.corrupt_golden = corrupt_golden;
    return logsplit::cmd_selftest(std::cout, self);
  }

  std::ifstream file;
  std::istream* in = open_input(input_path, file);
  if (!in) {
    std::cerr << "error: cannot open " << input_path << "\n";
    return logsplit::exit_code::kInvalid;
  }
  if (classify->parsed()) return logsplit::cmd_classify(*in, std::cout, std::cerr, options);
  return logsplit::cmd_c1(*in, std::cout, std::cerr, options);
}
