#pragma once

#include <span>
#include <vector>

#include "se2frame/lattice.hpp"
#include "se2frame/types.hpp"
#include "se2frame/wavelet.hpp"

namespace se2frame {

// Sampling set Λ = ⊔_k (Γ + α_k), with angle θ_k on the k-th coset, used to
// sample the wavelet transform of functions band-limited to B(0, rho).
struct SamplingSpec {
  WaveletParams wavelet;
  Lattice2D lattice{Mat2::Identity()};
  double rho = 1.0;
  std::vector<double> angles;
  // Empty means "draw fresh shifts for every repetition" (see draw_shifts).
  std::vector<Vec2> shifts;

  // Validates rho > 0, angles pairwise distinct modulo 2π and, when present,
  // shifts in pairwise distinct cosets of the lattice. Angles are reduced to
  // [0, 2π). Throws InvalidArgument.
  static SamplingSpec make(const WaveletParams& wavelet, const Lattice2D& lattice, double rho,
                           std::vector<double> angles, std::vector<Vec2> shifts = {});

  int num_angles() const { return static_cast<int>(angles.size()); }
  bool has_shifts() const { return !shifts.empty(); }
  Lattice2D dual() const { return annihilator(lattice); }
};

// Tolerance on fractional lattice coordinates when testing coset disjointness.
inline constexpr double kCosetTolerance = 1e-9;

void validate_angles(std::span<const double> angles);
void validate_shifts(std::span<const Vec2> shifts, const Lattice2D& lattice);

}  // namespace se2frame
