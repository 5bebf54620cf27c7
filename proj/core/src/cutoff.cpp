#include "se2frame/cutoff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "se2frame/error.hpp"

namespace se2frame {
namespace {

void require_positive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    std::ostringstream msg;
    msg << "cutoff: " << name << " must be positive, got " << value;
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

Vec2 MultiplicityField::point(std::size_t i, std::size_t j) const {
  return radii[i] * Vec2(std::cos(phases[j]), std::sin(phases[j]));
}

MultiplicityField multiplicity_field(double p, double L, double rho,
                                     std::span<const double> angles, int resolution) {
  require_positive(p, "p");
  require_positive(L, "L");
  require_positive(rho, "rho");
  if (resolution < 1) throw InvalidArgument("cutoff: resolution must be >= 1");

  MultiplicityField field;
  field.resolution = resolution;
  const auto res = static_cast<std::size_t>(resolution);
  field.radii.resize(res);
  field.phases.resize(res);
  for (std::size_t i = 0; i < res; ++i) {
    field.radii[i] = rho * (static_cast<double>(i) + 0.5) / resolution;
    field.phases[i] = kTwoPi * (static_cast<double>(i) + 0.5) / resolution;
  }

  std::vector<Vec2> centers;
  centers.reserve(angles.size());
  for (double theta : angles) centers.emplace_back(p * std::cos(theta), p * std::sin(theta));
  // Open discs: a point at exactly L/2 is outside.
  const double r2 = 0.25 * L * L;

  field.counts.resize(res * res);
  for (std::size_t i = 0; i < res; ++i) {
    for (std::size_t j = 0; j < res; ++j) {
      const Vec2 xi = field.point(i, j);
      int count = 0;
      for (const Vec2& c : centers) count += (xi - c).squaredNorm() < r2 ? 1 : 0;
      field.counts[i * res + j] = count;
    }
  }
  return field;
}

CoveringCount covering_counts(double p, double L, double rho, std::span<const double> angles,
                              int resolution) {
  const MultiplicityField field = multiplicity_field(p, L, rho, angles, resolution);
  const auto [lo, hi] = std::minmax_element(field.counts.begin(), field.counts.end());
  return CoveringCount{*lo, *hi, resolution};
}

CutoffBounds cutoff_frame_bounds(const CoveringCount& count, double L, double sigma) {
  require_positive(L, "L");
  require_positive(sigma, "sigma");
  if (count.m < 0 || count.m > count.M) {
    throw InvalidArgument("cutoff: covering count must satisfy 0 <= m <= M");
  }
  const double spread = L * L * kPi * kPi * sigma * sigma;
  CutoffBounds b;
  b.lower = count.m * L * L * std::exp(-spread);
  b.upper = count.M * L * L;
  b.degenerate = count.m == 0;
  b.kappa_bound = b.degenerate ? std::numeric_limits<double>::infinity()
                               : static_cast<double>(count.M) / count.m * std::exp(spread);
  return b;
}

HeuristicReport heuristic_check(double p, double L, double rho) {
  require_positive(p, "p");
  require_positive(L, "L");
  require_positive(rho, "rho");
  HeuristicReport r;
  r.origin_covered = L >= 2.0 * p;
  r.rim_covered = rho < p + 0.5 * L;
  std::ostringstream text;
  text << "origin: " << (r.origin_covered ? "covered" : "NOT covered") << " (L = " << L
       << (r.origin_covered ? " >= " : " < ") << "2p = " << 2.0 * p << "); ";
  text << "rim |xi| = rho: " << (r.rim_covered ? "reachable" : "NOT reachable") << " (rho = "
       << rho << (r.rim_covered ? " < " : " >= ") << "p + L/2 = " << p + 0.5 * L << ")";
  r.explanation = text.str();
  return r;
}

}  // namespace se2frame
