#pragma once

#include <span>
#include <vector>

#include "se2frame/types.hpp"

namespace se2frame {

// Modulated Gaussian ψ(x) = (2πσ²)⁻¹ e^{2πi p x₁} e^{-|x|²/(2σ²)}.
struct WaveletParams {
  double p = 0.0;      // modulation frequency, cycles per unit length
  double sigma = 0.0;  // spatial standard deviation

  // Throws InvalidArgument unless p > 0 and sigma > 0.
  static WaveletParams make(double p, double sigma);

  friend bool operator==(const WaveletParams&, const WaveletParams&) = default;
};

// ψ rotated by theta and translated by alpha: φ̂ = e_α · ψ̂_θ.
struct Generator {
  WaveletParams params;
  double theta = 0.0;
  Vec2 alpha = Vec2::Zero();

  // Reduces theta to [0, 2π).
  static Generator make(const WaveletParams& params, double theta, const Vec2& alpha);
};

// Reduces an angle to [0, 2π).
double reduce_angle(double theta);

// θ_k = 2πk/N, k = 0..N-1.
std::vector<double> equally_spaced_angles(int count);

// e_x(ξ) = e^{-2πi x·ξ}.
Complex fourier_character(const Vec2& x, const Vec2& xi);

Complex psi_spatial(const Vec2& x, const WaveletParams& w);

// ψ̂(ξ) = exp(-2π²σ²|ξ - (p,0)|²).
double psi_hat(const Vec2& xi, const WaveletParams& w);

// ψ̂(r_{-θ}ξ) = exp(-2π²σ²|ξ - p(cosθ, sinθ)|²).
double psi_hat_rotated(const Vec2& xi, double theta, const WaveletParams& w);

Complex phi_hat(const Vec2& xi, const Generator& g);

// ∫_{S¹} |ψ̂_θ(ξ)|² dθ = 2π e^{-4π²σ²(|ξ|²+p²)} I₀(8π²σ²p|ξ|), evaluated in
// the overflow-free form 2π e^{-4π²σ²(|ξ|-p)²} · e^{-y} I₀(y).
double calderon_continuous(const Vec2& xi, const WaveletParams& w);

// Σ_k |ψ̂_{θ_k}(ξ)|².
double calderon_semidiscrete(const Vec2& xi, const WaveletParams& w,
                             std::span<const double> angles);

}  // namespace se2frame
