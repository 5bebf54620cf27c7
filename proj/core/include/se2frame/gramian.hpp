#pragma once

#include <optional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "se2frame/lattice.hpp"
#include "se2frame/sampling.hpp"
#include "se2frame/types.hpp"

namespace se2frame {

// Dual Gramian G(ω) over the index set V_ρ(ω). Rows and columns follow the
// order of indices.points. A 0×0 matrix marks an empty index set.
struct DualGramian {
  Vec2 omega = Vec2::Zero();
  IndexSet indices;
  Eigen::MatrixXcd entries;

  Eigen::Index dim() const { return entries.rows(); }
  bool empty() const { return entries.rows() == 0; }
};

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending

  std::size_t size() const { return eigenvalues.size(); }
  bool empty() const { return eigenvalues.empty(); }
};

struct SpectralBounds {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

// Phase convention. Both builders produce
//
//   G(ω)_{ν,ν'} = Σ_k conj(φ̂_k(ω+ν)) φ̂_k(ω+ν'),   φ̂_k = e_{α_k} ψ̂_{θ_k},
//
// whose phase is e_{α_k}(ν' − ν). This is the complex conjugate (equivalently
// the transpose) of the closed form with e_{α_k}(ν − ν'); the spectrum is the
// same either way.

// Closed Gaussian form:
//   e^{-π²σ²|ν−ν'|²} Σ_k e_{α_k}(ν'−ν) e^{-4π²σ²|ω + (ν+ν')/2 − p(cosθ_k, sinθ_k)|²}.
// The one-argument overload requires spec.shifts; throws InvalidArgument
// otherwise.
DualGramian build_gramian(const Vec2& omega, const SamplingSpec& spec);
DualGramian build_gramian(const Vec2& omega, const SamplingSpec& spec,
                          std::span<const Vec2> shifts);

// Product form Φᴴ Φ with Φ_{k,ν} = φ̂_k(ω+ν). Independent of the closed form;
// the two are linked by |a|² + |b|² = 2|(a+b)/2|² + |a−b|²/2.
DualGramian build_gramian_direct(const Vec2& omega, const SamplingSpec& spec);
DualGramian build_gramian_direct(const Vec2& omega, const SamplingSpec& spec,
                                 std::span<const Vec2> shifts);

// N × |V| analysis matrix Φ_{k,ν} = φ̂_k(ω+ν).
Eigen::MatrixXcd analysis_matrix(const Vec2& omega, const IndexSet& indices,
                                 const SamplingSpec& spec, std::span<const Vec2> shifts);

// max |G − Gᴴ| / max |G| (0 for the zero or empty matrix).
double hermitian_defect(const Eigen::MatrixXcd& m);

inline constexpr double kHermitianTolerance = 1e-13;
inline constexpr double kResidualTolerance = 1e-10;

// Full ascending spectrum of a Hermitian matrix. Every eigenpair is checked
// against ‖Gv − λv‖ <= 1e-10 ‖G‖. Throws InvalidArgument when the input is
// not Hermitian and NoConvergence when the solver fails.
Spectrum spectrum(const DualGramian& g);
Spectrum spectrum(const Eigen::MatrixXcd& m);

// Eigenvalues only, ascending, no residual check. Used on the hot path of
// the sweep.
Spectrum eigenvalues(const Eigen::MatrixXcd& m);

// nullopt for an empty index set.
std::optional<SpectralBounds> spectral_bounds(const DualGramian& g);

// Σ_{ν,ν'} z_ν G_{ν,ν'} conj(z_{ν'}); real for Hermitian G.
double quadratic_form(const Eigen::MatrixXcd& g, const Eigen::VectorXcd& z);

}  // namespace se2frame
