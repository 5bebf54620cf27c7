#include <gtest/gtest.h>

#include <cmath>

#include "se2frame/quadrature.hpp"

namespace se2frame {
namespace {

TEST(CompositeGaussLegendre, WeightsSumToLength) {
  for (int panels : {1, 3, 8}) {
    const QuadratureRule r = composite_gauss_legendre(-1.5, 2.0, panels);
    ASSERT_EQ(r.nodes.size(), static_cast<std::size_t>(20 * panels));
    double sum = 0.0;
    for (double w : r.weights) sum += w;
    EXPECT_NEAR(sum, 3.5, 1e-14);
    for (double x : r.nodes) {
      EXPECT_GT(x, -1.5);
      EXPECT_LT(x, 2.0);
    }
  }
}

TEST(CompositeGaussLegendre, ExactForDegree39Polynomials) {
  const QuadratureRule r = composite_gauss_legendre(0.0, 1.0, 1);
  for (int k : {0, 1, 10, 39}) {
    double sum = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i) sum += r.weights[i] * std::pow(r.nodes[i], k);
    EXPECT_NEAR(sum, 1.0 / (k + 1), 1e-15);
  }
}

TEST(IntegrateBox, GaussianIntegral) {
  const auto r = integrate_box([](const Vec2& x) { return std::exp(-x.squaredNorm()); },
                               Vec2(-8, -8), Vec2(8, 8), 1e-13);
  EXPECT_NEAR(r.value, M_PI, 1e-12);
}

TEST(IntegrateBox, ComplexIntegrand) {
  // ∫∫_{[0,1]²} e^{2πi(x+2y)} · x dx dy = 0 because of the y-integral.
  const auto r = integrate_box(
      [](const Vec2& x) { return std::polar(x.x(), 2 * M_PI * (x.x() + 2 * x.y())); },
      Vec2(0, 0), Vec2(1, 1), 1e-12);
  EXPECT_LT(std::abs(r.value), 1e-12);
}

TEST(IntegrateBox, StallsOnDiscontinuousIntegrand) {
  EXPECT_THROW(integrate_box([](const Vec2& x) { return x.norm() < 0.3 ? 1.0 : 0.0; },
                             Vec2(-1, -1), Vec2(1, 1), 1e-15),
               QuadratureStall);
}

}  // namespace
}  // namespace se2frame
