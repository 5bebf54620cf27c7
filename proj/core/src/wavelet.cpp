#include "se2frame/wavelet.hpp"

#include <cmath>
#include <sstream>

#include "se2frame/bessel.hpp"
#include "se2frame/error.hpp"

namespace se2frame {

WaveletParams WaveletParams::make(double p, double sigma) {
  if (!(p > 0.0) || !std::isfinite(p)) {
    std::ostringstream msg;
    msg << "wavelet: p must be positive, got " << p;
    throw InvalidArgument(msg.str());
  }
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    std::ostringstream msg;
    msg << "wavelet: sigma must be positive, got " << sigma;
    throw InvalidArgument(msg.str());
  }
  return WaveletParams{p, sigma};
}

Generator Generator::make(const WaveletParams& params, double theta, const Vec2& alpha) {
  return Generator{WaveletParams::make(params.p, params.sigma), reduce_angle(theta), alpha};
}

double reduce_angle(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

std::vector<double> equally_spaced_angles(int count) {
  if (count < 1) throw InvalidArgument("equally_spaced_angles: count must be >= 1");
  std::vector<double> angles(static_cast<std::size_t>(count));
  for (int k = 0; k < count; ++k) angles[k] = kTwoPi * k / count;
  return angles;
}

Complex fourier_character(const Vec2& x, const Vec2& xi) {
  return std::polar(1.0, -kTwoPi * x.dot(xi));
}

Complex psi_spatial(const Vec2& x, const WaveletParams& w) {
  const double s2 = w.sigma * w.sigma;
  const double envelope = std::exp(-x.squaredNorm() / (2.0 * s2)) / (kTwoPi * s2);
  return std::polar(envelope, kTwoPi * w.p * x.x());
}

double psi_hat(const Vec2& xi, const WaveletParams& w) {
  return psi_hat_rotated(xi, 0.0, w);
}

double psi_hat_rotated(const Vec2& xi, double theta, const WaveletParams& w) {
  const Vec2 peak(w.p * std::cos(theta), w.p * std::sin(theta));
  return std::exp(-2.0 * kPi * kPi * w.sigma * w.sigma * (xi - peak).squaredNorm());
}

Complex phi_hat(const Vec2& xi, const Generator& g) {
  return fourier_character(g.alpha, xi) * psi_hat_rotated(xi, g.theta, g.params);
}

double calderon_continuous(const Vec2& xi, const WaveletParams& w) {
  const double a = 4.0 * kPi * kPi * w.sigma * w.sigma;
  const double r = xi.norm();
  const double y = 2.0 * a * w.p * r;
  return kTwoPi * std::exp(-a * (r - w.p) * (r - w.p)) * bessel_i0_scaled(y);
}

double calderon_semidiscrete(const Vec2& xi, const WaveletParams& w,
                             std::span<const double> angles) {
  if (angles.empty()) throw InvalidArgument("calderon_semidiscrete: no angles");
  double sum = 0.0;
  for (double theta : angles) {
    const double v = psi_hat_rotated(xi, theta, w);
    sum += v * v;
  }
  return sum;
}

}  // namespace se2frame
