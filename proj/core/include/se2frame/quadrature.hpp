#pragma once

#include <cmath>
#include <complex>
#include <sstream>
#include <vector>

#include "se2frame/error.hpp"
#include "se2frame/types.hpp"

namespace se2frame {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// 20-point Gauss–Legendre rule repeated on `panels` equal sub-intervals.
QuadratureRule composite_gauss_legendre(double a, double b, int panels);

inline constexpr int kMaxQuadratureDoublings = 12;

template <typename T>
struct BoxIntegral {
  T value{};
  double l1 = 0.0;  // ∫|f|, the scale used by the stopping rule
  int level = 0;    // panels per axis = 2^level
};

// Tensor composite Gauss–Legendre over [lo, hi], doubling the panel count per
// axis until two successive levels differ by <= rel_tol · max(|I|, ∫|f|).
// Throws QuadratureStall after kMaxQuadratureDoublings doublings.
template <typename F>
auto integrate_box(F&& f, const Vec2& lo, const Vec2& hi, double rel_tol)
    -> BoxIntegral<decltype(f(Vec2{}))> {
  using T = decltype(f(Vec2{}));
  auto at_level = [&](int level) {
    const int panels = 1 << level;
    const QuadratureRule rx = composite_gauss_legendre(lo.x(), hi.x(), panels);
    const QuadratureRule ry = composite_gauss_legendre(lo.y(), hi.y(), panels);
    BoxIntegral<T> out;
    out.level = level;
    for (std::size_t a = 0; a < rx.nodes.size(); ++a) {
      for (std::size_t b = 0; b < ry.nodes.size(); ++b) {
        const T v = f(Vec2(rx.nodes[a], ry.nodes[b]));
        const double w = rx.weights[a] * ry.weights[b];
        out.value += w * v;
        out.l1 += w * std::abs(v);
      }
    }
    return out;
  };
  BoxIntegral<T> prev = at_level(0);
  for (int level = 1; level <= kMaxQuadratureDoublings; ++level) {
    BoxIntegral<T> next = at_level(level);
    const double scale = std::max(std::abs(next.value), next.l1);
    if (std::abs(next.value - prev.value) <= rel_tol * scale) return next;
    prev = next;
  }
  std::ostringstream msg;
  msg << "integrate_box: no convergence after " << kMaxQuadratureDoublings << " doublings";
  throw QuadratureStall(msg.str());
}

}  // namespace se2frame
