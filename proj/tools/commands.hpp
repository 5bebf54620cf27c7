#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <vector>

#include "config.hpp"
#include "se2frame/cutoff.hpp"
#include "se2frame/framefield.hpp"
#include "se2frame/gramian.hpp"
#include "se2frame/oracle.hpp"

namespace se2frame::cli {

struct CommandOptions {
  std::filesystem::path out_dir = "se2frame_out";
  int threads = 0;
  bool png = false;
  bool progress = false;  // periodic progress lines on stderr
};

struct AnalyzeResult {
  FrameReport report;
  SpectralField field;
};

struct CountResult {
  CountField field;
  std::vector<Vec2> omegas;
};

struct CalderonResult {
  int points = 0;        // per axis
  double min_inside = 0.0;   // min of C_ψ over grid points with |ξ| < ρ
  double max_reciprocal = 0.0;
};

struct CoveringResult {
  CoveringCount count;
  CutoffBounds bounds;
  HeuristicReport heuristic;
  double L = 0.0;
};

struct OracleResult {
  LatticeSum energy;
  GridIntegral quadratic_form;
  double relative_error = 0.0;
  double norm_squared = 0.0;
};

struct GramianResult {
  DualGramian closed_form;
  double hermitian_defect = 0.0;
  double route_difference = 0.0;  // max |closed form − product form|
  Spectrum spectrum;
};

// Each command writes its artefacts below opts.out_dir and a human-readable
// summary to `out`.
AnalyzeResult cmd_analyze(const ExperimentConfig& cfg, const CommandOptions& opts,
                          std::ostream& out);
CountResult cmd_count(const ExperimentConfig& cfg, const CommandOptions& opts, std::ostream& out);
CalderonResult cmd_calderon(const ExperimentConfig& cfg, const CommandOptions& opts,
                            std::ostream& out);
CoveringResult cmd_covering(const ExperimentConfig& cfg, const CommandOptions& opts,
                            std::ostream& out);
OracleResult cmd_oracle(const ExperimentConfig& cfg, const CommandOptions& opts,
                        std::ostream& out);
GramianResult cmd_gramian(const ExperimentConfig& cfg, const CommandOptions& opts,
                          std::ostream& out);

void print_report(const FrameReport& report, std::ostream& out);

}  // namespace se2frame::cli
