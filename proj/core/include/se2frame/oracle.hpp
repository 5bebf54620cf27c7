#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "se2frame/lattice.hpp"
#include "se2frame/sampling.hpp"
#include "se2frame/types.hpp"
#include "se2frame/wavelet.hpp"

namespace se2frame {

// c · exp(1 − 1/(1 − t)), t = |ξ − center|² / radius², zero for t >= 1.
struct Bump {
  Vec2 center = Vec2::Zero();
  double radius = 1.0;
  Complex coefficient = 1.0;

  Complex value(const Vec2& xi) const;
};

// A band-limited function given by its Fourier transform, a finite sum of
// smooth compactly supported bumps.
class BandLimitedTestFunction {
 public:
  BandLimitedTestFunction() = default;

  // Throws InvalidArgument unless every radius is positive and every support
  // lies strictly inside B(0, rho).
  static BandLimitedTestFunction make(std::vector<Bump> bumps, double rho);

  const std::vector<Bump>& bumps() const { return bumps_; }

  // f̂(ξ).
  Complex value(const Vec2& xi) const;

  // max_j |ξ_j| + r_j; f̂ vanishes outside B(0, support_radius()).
  double support_radius() const;

  BandLimitedTestFunction scaled(Complex factor) const;

 private:
  explicit BandLimitedTestFunction(std::vector<Bump> bumps) : bumps_(std::move(bumps)) {}

  std::vector<Bump> bumps_;
};

inline constexpr double kCoefficientTolerance = 1e-10;

// Evaluates W_ψ f(x, θ) = ⟨f̂, e_x ψ̂_θ⟩ = ∫ f̂(ξ) ψ̂_θ(ξ) e^{2πi x·ξ} dξ for a
// fixed (f, θ) at many positions x. Each bump is integrated over its bounding
// square with tensor composite Gauss–Legendre; panel counts double until two
// levels agree to kCoefficientTolerance relative to max(|W|, ∫|f̂ ψ̂_θ|).
// Integrand samples are cached per level, so repeated calls are cheap.
// Not thread-safe.
class CoefficientEvaluator {
 public:
  CoefficientEvaluator(const BandLimitedTestFunction& f, double theta, const WaveletParams& w);
  ~CoefficientEvaluator();
  CoefficientEvaluator(CoefficientEvaluator&&) noexcept;
  CoefficientEvaluator& operator=(CoefficientEvaluator&&) noexcept;

  // Throws QuadratureStall after 12 doublings.
  Complex operator()(const Vec2& x);

  // ∫ |f̂ ψ̂_θ|, the absolute scale of every coefficient.
  double scale() const { return scale_; }

 private:
  struct Level;
  const Level& level(int index);
  Complex evaluate(const Level& lv, const Vec2& x) const;

  BandLimitedTestFunction f_;
  double theta_;
  WaveletParams w_;
  std::vector<Level> levels_;
  double scale_ = 0.0;
  int start_level_ = 0;
};

Complex wavelet_coefficient(const BandLimitedTestFunction& f, const Vec2& x, double theta,
                            const WaveletParams& w);

struct LatticeSum {
  double value = 0.0;
  int radius = 0;  // last shell ‖γ‖∞ summed
  std::size_t terms = 0;
};

inline constexpr int kMaxLatticeRadius = 64;

// I_ψ(f) = Σ_k Σ_{γ∈Γ} |W_ψ f(γ + α_k, θ_k)|², summed over growing shells of
// integer coordinates ‖·‖∞ = R until a shell adds < tail_tol × the running
// sum. Requires explicit shifts. Throws TailNotConverged past R = 64.
LatticeSum energy_sum(const BandLimitedTestFunction& f, const SamplingSpec& spec,
                      double tail_tol);

struct GridIntegral {
  double value = 0.0;
  int grid_size = 0;  // grid at which the refinement stopped
};

inline constexpr double kGridRefinementTolerance = 1e-4;
inline constexpr int kMaxOracleGrid = 1024;

// |Ω| · mean over an M×M grid of the centred dual cell of zᵀ G(ω) z̄, with
// z_ν = f̂(ω+ν) over V_ρ(ω) and G from the closed-form builder. M doubles from
// grid_size until two grids agree to 1e-4 relative. Requires explicit shifts
// and f's support inside B(0, spec.rho). Throws NoConvergence past M = 1024.
GridIntegral quadratic_form_integral(const BandLimitedTestFunction& f, const SamplingSpec& spec,
                                     int grid_size);

// z_ν = f̂(ω+ν) over the given index set.
Eigen::VectorXcd fiber_vector(const BandLimitedTestFunction& f, const Vec2& omega,
                              const IndexSet& indices);

// [f, φ]_Γ(ω) = Σ_{ν∈Γ⊥} f̂(ω+ν) conj(φ̂(ω+ν)), truncated exactly to the ν with
// ω+ν inside f's support ball.
Complex bracket(const BandLimitedTestFunction& f, const Generator& g, const Vec2& omega,
                const Lattice2D& lattice);

// Midpoint-rule integral of [f, f]_Γ over the centred dual cell, M×M grid.
double bracket_self_integral(const BandLimitedTestFunction& f, const Lattice2D& lattice,
                             int grid_size);

// ‖f̂‖² by adaptive tensor Gauss–Legendre over the bounding box of the supports.
double norm_squared(const BandLimitedTestFunction& f);

}  // namespace se2frame
