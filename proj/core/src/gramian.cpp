#include "se2frame/gramian.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "se2frame/error.hpp"
#include "se2frame/wavelet.hpp"

namespace se2frame {
namespace {

void require_shift_count(const SamplingSpec& spec, std::span<const Vec2> shifts) {
  if (shifts.size() != spec.angles.size()) {
    std::ostringstream msg;
    msg << "gramian: " << shifts.size() << " shifts for " << spec.angles.size() << " angles";
    throw InvalidArgument(msg.str());
  }
}

std::span<const Vec2> explicit_shifts(const SamplingSpec& spec) {
  if (!spec.has_shifts()) {
    throw InvalidArgument("gramian: sampling spec has no explicit shifts");
  }
  return spec.shifts;
}

Spectrum solve(const Eigen::MatrixXcd& m, const Vec2* omega) {
  Spectrum out;
  if (m.rows() == 0) return out;
  if (m.rows() != m.cols()) throw InvalidArgument("spectrum: matrix is not square");
  const double defect = hermitian_defect(m);
  if (!(defect <= kHermitianTolerance)) {
    std::ostringstream msg;
    msg << "spectrum: matrix is not Hermitian (relative defect " << defect << ")";
    throw InvalidArgument(msg.str());
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::ComputeEigenvectors);
  auto fail = [&](const char* what) {
    std::ostringstream msg;
    msg << "spectrum: " << what << " (dimension " << m.rows();
    if (omega != nullptr) msg << ", omega = (" << omega->x() << ", " << omega->y() << ")";
    msg << ")";
    throw NoConvergence(msg.str());
  };
  if (solver.info() != Eigen::Success) fail("eigensolver did not converge");

  const Eigen::VectorXd& values = solver.eigenvalues();
  const double norm = std::max(std::abs(values(0)), std::abs(values(values.size() - 1)));
  const Eigen::MatrixXcd residual =
      m * solver.eigenvectors() - solver.eigenvectors() * values.asDiagonal();
  for (Eigen::Index j = 0; j < residual.cols(); ++j) {
    if (residual.col(j).norm() > kResidualTolerance * std::max(norm, 1e-300)) {
      fail("eigenpair residual above tolerance");
    }
  }
  out.eigenvalues.assign(values.data(), values.data() + values.size());
  return out;
}

}  // namespace

Eigen::MatrixXcd analysis_matrix(const Vec2& omega, const IndexSet& indices,
                                 const SamplingSpec& spec, std::span<const Vec2> shifts) {
  require_shift_count(spec, shifts);
  const auto n = static_cast<Eigen::Index>(indices.size());
  const auto count = static_cast<Eigen::Index>(spec.angles.size());
  Eigen::MatrixXcd phi(count, n);
  for (Eigen::Index k = 0; k < count; ++k) {
    const Generator g{spec.wavelet, spec.angles[k], shifts[k]};
    for (Eigen::Index j = 0; j < n; ++j) {
      phi(k, j) = phi_hat(omega + indices.points[j], g);
    }
  }
  return phi;
}

DualGramian build_gramian(const Vec2& omega, const SamplingSpec& spec) {
  return build_gramian(omega, spec, explicit_shifts(spec));
}

DualGramian build_gramian(const Vec2& omega, const SamplingSpec& spec,
                          std::span<const Vec2> shifts) {
  require_shift_count(spec, shifts);
  DualGramian g{omega, enumerate_V(omega, spec.rho, spec.dual()), {}};
  const auto n = static_cast<Eigen::Index>(g.indices.size());
  g.entries.resize(n, n);

  const double s2 = spec.wavelet.sigma * spec.wavelet.sigma;
  const double pi2s2 = kPi * kPi * s2;
  std::vector<Vec2> peaks;
  peaks.reserve(spec.angles.size());
  for (double theta : spec.angles) {
    peaks.emplace_back(spec.wavelet.p * std::cos(theta), spec.wavelet.p * std::sin(theta));
  }

  const auto& nu = g.indices.points;
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a; b < n; ++b) {
      const Vec2 diff = nu[a] - nu[b];
      const Vec2 mid = omega + 0.5 * (nu[a] + nu[b]);
      Complex sum = 0.0;
      for (std::size_t k = 0; k < peaks.size(); ++k) {
        const double gauss = std::exp(-4.0 * pi2s2 * (mid - peaks[k]).squaredNorm());
        sum += fourier_character(shifts[k], -diff) * gauss;
      }
      const Complex value = std::exp(-pi2s2 * diff.squaredNorm()) * sum;
      if (a == b) {
        g.entries(a, a) = Complex(value.real(), 0.0);
      } else {
        g.entries(a, b) = value;
        g.entries(b, a) = std::conj(value);
      }
    }
  }
  return g;
}

DualGramian build_gramian_direct(const Vec2& omega, const SamplingSpec& spec) {
  return build_gramian_direct(omega, spec, explicit_shifts(spec));
}

DualGramian build_gramian_direct(const Vec2& omega, const SamplingSpec& spec,
                                 std::span<const Vec2> shifts) {
  DualGramian g{omega, enumerate_V(omega, spec.rho, spec.dual()), {}};
  const Eigen::MatrixXcd phi = analysis_matrix(omega, g.indices, spec, shifts);
  g.entries = phi.adjoint() * phi;
  // Exact Hermitian symmetry; the product is Hermitian up to rounding only.
  g.entries = 0.5 * (g.entries + g.entries.adjoint()).eval();
  return g;
}

double hermitian_defect(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  const double scale = m.cwiseAbs().maxCoeff();
  if (scale == 0.0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() / scale;
}

Spectrum spectrum(const DualGramian& g) { return solve(g.entries, &g.omega); }

Spectrum spectrum(const Eigen::MatrixXcd& m) { return solve(m, nullptr); }

Spectrum eigenvalues(const Eigen::MatrixXcd& m) {
  Spectrum out;
  if (m.rows() == 0) return out;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    std::ostringstream msg;
    msg << "eigenvalues: solver did not converge (dimension " << m.rows() << ")";
    throw NoConvergence(msg.str());
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  out.eigenvalues.assign(values.data(), values.data() + values.size());
  return out;
}

std::optional<SpectralBounds> spectral_bounds(const DualGramian& g) {
  if (g.empty()) return std::nullopt;
  const Spectrum s = spectrum(g);
  return SpectralBounds{s.eigenvalues.front(), s.eigenvalues.back()};
}

double quadratic_form(const Eigen::MatrixXcd& g, const Eigen::VectorXcd& z) {
  if (g.rows() != z.size() || g.cols() != z.size()) {
    throw InvalidArgument("quadratic_form: dimension mismatch");
  }
  // zᵀ G z̄
  return (z.transpose() * g * z.conjugate()).value().real();
}

}  // namespace se2frame
