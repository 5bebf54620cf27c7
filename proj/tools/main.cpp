#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "commands.hpp"
#include "config.hpp"

namespace {

enum ExitCode : int {
  kSuccess = 0,
  kConfigError = 1,
  kNumericalFailure = 2,
  kDegenerateFrame = 3,
};

}  // namespace

int main(int argc, char** argv) {
  using namespace se2frame;
  using namespace se2frame::cli;

  CLI::App app{"Frame analysis for shifted-lattice samplings of the SE(2) wavelet transform"};
  app.require_subcommand(1, 1);

  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<int> threads;
  std::optional<int> grid;
  std::optional<int> reps;
  std::optional<std::uint64_t> seed;
  bool png = false;
  bool progress = false;

  app.add_option("-c,--config", config_path, "JSON experiment config")->required();
  app.add_option("-o,--out", out_dir, "Output directory (overrides output_dir)");
  app.add_option("-j,--threads", threads, "Worker threads, 0 = all cores")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--png", png, "Also write log-scale PNG heatmaps");
  app.add_option("--grid", grid, "Grid points per axis (overrides grid)")
      ->check(CLI::PositiveNumber);
  app.add_option("--reps", reps, "Shift repetitions (overrides repetitions)")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "RNG seed for the shifts (overrides seed)");
  app.add_flag("--progress", progress, "Report sweep progress on stderr");

  const std::pair<const char*, const char*> commands[] = {
      {"analyze", "Sweep the dual Gramian spectrum and report frame bounds"},
      {"calderon", "Semidiscrete Calderon function on a grid over B(0, rho)"},
      {"covering", "Disc covering multiplicities and the resulting frame bounds"},
      {"oracle", "Compare sampled wavelet energy with the Gramian quadratic form"},
      {"gramian", "Dump the dual Gramian and its spectrum at one frequency"},
      {"count", "Count lattice points of the dual lattice in the sampling ball"},
  };
  for (const auto& [name, help] : commands) {
    app.add_subcommand(name, help)->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kConfigError;
  }

  try {
    ExperimentConfig cfg = load_config(config_path);
    if (out_dir) cfg.output_dir = *out_dir;
    if (grid) cfg.grid = *grid;
    if (reps) cfg.repetitions = *reps;
    if (seed) cfg.seed = *seed;

    CommandOptions opts;
    opts.out_dir = cfg.output_dir;
    opts.threads = threads.value_or(0);
    opts.png = png;
    opts.progress = progress;

    const std::string command = app.get_subcommands().front()->get_name();
    if (command == "analyze") {
      const AnalyzeResult r = cmd_analyze(cfg, opts, std::cout);
      return r.report.degenerate ? kDegenerateFrame : kSuccess;
    }
    if (command == "calderon") cmd_calderon(cfg, opts, std::cout);
    if (command == "covering") cmd_covering(cfg, opts, std::cout);
    if (command == "oracle") cmd_oracle(cfg, opts, std::cout);
    if (command == "gramian") cmd_gramian(cfg, opts, std::cout);
    if (command == "count") cmd_count(cfg, opts, std::cout);
    return kSuccess;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const Overflow& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kNumericalFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
}
