#pragma once

#include <span>
#include <string>
#include <vector>

#include "se2frame/types.hpp"

namespace se2frame {

// Multiplicity of the discs B(p(cosθ_k, sinθ_k), L/2) over B(0, ρ), sampled
// on a cell-centred polar grid (radius slow, angle fast).
struct MultiplicityField {
  int resolution = 0;
  std::vector<double> radii;   // (i + ½)ρ/res
  std::vector<double> phases;  // 2π(j + ½)/res
  std::vector<int> counts;     // [i * res + j]

  Vec2 point(std::size_t i, std::size_t j) const;
};

// Essential min/max multiplicity, up to grid resolution.
struct CoveringCount {
  int m = 0;
  int M = 0;
  int resolution = 0;
};

struct CutoffBounds {
  double lower = 0.0;        // m L² e^{-L²π²σ²}
  double upper = 0.0;        // M L²
  double kappa_bound = 0.0;  // (M/m) e^{L²π²σ²}; +inf when degenerate
  bool degenerate = false;   // m == 0: no lower frame bound
};

struct HeuristicReport {
  bool origin_covered = false;  // L >= 2p
  bool rim_covered = false;     // ρ < p + L/2
  std::string explanation;
};

inline constexpr int kDefaultCoveringResolution = 512;

MultiplicityField multiplicity_field(double p, double L, double rho,
                                     std::span<const double> angles,
                                     int resolution = kDefaultCoveringResolution);

CoveringCount covering_counts(double p, double L, double rho, std::span<const double> angles,
                              int resolution = kDefaultCoveringResolution);

CutoffBounds cutoff_frame_bounds(const CoveringCount& count, double L, double sigma);

HeuristicReport heuristic_check(double p, double L, double rho);

}  // namespace se2frame
