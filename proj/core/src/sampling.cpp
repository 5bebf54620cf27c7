#include "se2frame/sampling.hpp"

#include <cmath>
#include <sstream>

#include "se2frame/error.hpp"

namespace se2frame {

void validate_angles(std::span<const double> angles) {
  if (angles.empty()) throw InvalidArgument("sampling: at least one angle is required");
  for (std::size_t i = 0; i < angles.size(); ++i) {
    if (!std::isfinite(angles[i])) throw InvalidArgument("sampling: angle is not finite");
    for (std::size_t j = 0; j < i; ++j) {
      double d = std::abs(reduce_angle(angles[i]) - reduce_angle(angles[j]));
      d = std::min(d, kTwoPi - d);
      if (d < 1e-12) {
        std::ostringstream msg;
        msg << "sampling: angles " << j << " and " << i << " coincide modulo 2pi";
        throw InvalidArgument(msg.str());
      }
    }
  }
}

void validate_shifts(std::span<const Vec2> shifts, const Lattice2D& lattice) {
  for (std::size_t i = 0; i < shifts.size(); ++i) {
    if (!shifts[i].allFinite()) throw InvalidArgument("sampling: shift is not finite");
    for (std::size_t j = 0; j < i; ++j) {
      const Vec2 frac = lattice.inverse() * (shifts[i] - shifts[j]);
      const double d0 = std::abs(frac.x() - std::round(frac.x()));
      const double d1 = std::abs(frac.y() - std::round(frac.y()));
      if (d0 < kCosetTolerance && d1 < kCosetTolerance) {
        std::ostringstream msg;
        msg << "sampling: shifts " << j << " and " << i << " lie in the same lattice coset";
        throw InvalidArgument(msg.str());
      }
    }
  }
}

SamplingSpec SamplingSpec::make(const WaveletParams& wavelet, const Lattice2D& lattice,
                                double rho, std::vector<double> angles,
                                std::vector<Vec2> shifts) {
  if (!(rho > 0.0) || !std::isfinite(rho)) throw InvalidArgument("sampling: rho must be positive");
  validate_angles(angles);
  for (double& theta : angles) theta = reduce_angle(theta);
  if (!shifts.empty()) {
    if (shifts.size() != angles.size()) {
      std::ostringstream msg;
      msg << "sampling: " << shifts.size() << " shifts given for " << angles.size() << " angles";
      throw InvalidArgument(msg.str());
    }
    validate_shifts(shifts, lattice);
  }
  SamplingSpec spec{WaveletParams::make(wavelet.p, wavelet.sigma), lattice, rho,
                    std::move(angles), std::move(shifts)};
  return spec;
}

}  // namespace se2frame
