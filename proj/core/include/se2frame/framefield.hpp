#pragma once

#include <atomic>
#include <cstdint>
#include <vector>

#include "se2frame/lattice.hpp"
#include "se2frame/sampling.hpp"
#include "se2frame/types.hpp"

namespace se2frame {

struct SweepConfig {
  int grid_size = 256;    // the fundamental cell is sampled on an M×M grid
  int repetitions = 20;   // independent shift draws (ignored when shifts are fixed)
  std::uint64_t seed = 0;
  int threads = 0;        // 0 = hardware concurrency
};

// Cell-centred grid ω_{ij} = center + basis·((i+½)/M − ½, (j+½)/M − ½),
// stored with i (first coordinate) as the slow index.
std::vector<Vec2> omega_grid(const FundamentalCell& cell, int grid_size);

// Counter-based uniform draw in the open interval (0, 1). A pure function of
// its four keys, so results do not depend on evaluation order.
double uniform_open(std::uint64_t seed, std::uint64_t repetition, std::uint64_t index,
                    std::uint64_t coordinate);

// N shifts with both coordinates uniform in (0, 1).
std::vector<Vec2> draw_shifts(std::uint64_t seed, int repetition, int count);

// Per-cell extremal eigenvalues over all repetitions. Cells whose index set
// is empty carry NaN eigenvalues and are skipped by every aggregate.
struct SpectralField {
  int grid_size = 0;
  int repetitions = 0;
  std::vector<Vec2> omegas;
  std::vector<int> counts;               // n(ω) per cell
  std::vector<double> lambda_min;        // [repetition * cells() + cell]
  std::vector<double> lambda_max;
  std::vector<double> mean_lambda_min;   // per cell, averaged over repetitions
  std::vector<double> mean_lambda_max;

  std::size_t cells() const { return omegas.size(); }
  int max_count() const;
  double min_at(int repetition, std::size_t cell) const {
    return lambda_min[static_cast<std::size_t>(repetition) * cells() + cell];
  }
  double max_at(int repetition, std::size_t cell) const {
    return lambda_max[static_cast<std::size_t>(repetition) * cells() + cell];
  }
};

// Builds G(ω) on every grid cell of the dual lattice's centred cell for every
// repetition, recording extremal eigenvalues. Output is bit-identical for a
// given (spec, cfg) regardless of cfg.threads. NoConvergence errors carry ω
// and the repetition.
SpectralField sweep(const SamplingSpec& spec, const SweepConfig& cfg,
                    std::atomic<std::size_t>* progress = nullptr);

// Ratio at or below which A/B is reported as a degenerate frame.
inline constexpr double kDegenerateRatio = 1e-14;

struct FrameReport {
  double covolume = 1.0;  // |Ω|
  int num_angles = 0;
  int max_n = 0;

  // Pooled extremes over all cells and repetitions.
  double A = 0.0;
  double B = 0.0;
  double kappa = 0.0;

  // From the repetition-averaged fields: max mean λ_max / min mean λ_min.
  double A_mean_field = 0.0;
  double B_mean_field = 0.0;
  double kappa_mean_field = 0.0;

  std::vector<double> kappa_per_repetition;
  double kappa_repetition_mean = 0.0;
  double kappa_repetition_std = 0.0;

  bool feasible = false;    // N >= max n(ω)
  bool degenerate = false;  // A <= 1e-14 B

  bool is_frame() const { return feasible && !degenerate; }
};

// κ values are +inf whenever the corresponding lower bound is <= 0.
FrameReport frame_report(const SpectralField& field, double covol, int num_angles);

// Fraction of (repetition, cell) records with non-empty V and
// λ_min <= rel_tol · λ_max.
double singular_fraction(const SpectralField& field, double rel_tol);

}  // namespace se2frame
