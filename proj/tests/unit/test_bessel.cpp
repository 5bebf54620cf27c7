#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "se2frame/bessel.hpp"
#include "se2frame/error.hpp"

namespace se2frame {
namespace {

// Σ_{m<terms} (x/2)^{2m} / (m!)², accumulated term by term.
double series_oracle(double x, int terms) {
  double term = 1.0;
  double sum = 1.0;
  const double q = 0.25 * x * x;
  for (int m = 1; m < terms; ++m) {
    term *= q / (static_cast<double>(m) * m);
    sum += term;
  }
  return sum;
}

// e^{-x} I₀(x) ≈ (2πx)^{-1/2} Σ_k ((2k-1)!!)² / (k! (8x)^k).
double asymptotic_oracle(double x, int terms) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < terms; ++k) {
    term *= (2.0 * k - 1.0) * (2.0 * k - 1.0) / (k * 8.0 * x);
    sum += term;
  }
  return sum / std::sqrt(2.0 * M_PI * x);
}

TEST(BesselI0, ValueAtZeroIsOne) { EXPECT_EQ(bessel_i0(0.0), 1.0); }

TEST(BesselI0, ValueAtOneMatchesSeries) {
  const double oracle = series_oracle(1.0, 30);
  EXPECT_NEAR(oracle, 1.26606587775, 1e-11);
  EXPECT_NEAR(bessel_i0(1.0), oracle, 1e-12 * oracle);
}

TEST(BesselI0, ScaledValueAtFiftyMatchesAsymptotics) {
  const double oracle = asymptotic_oracle(50.0, 12);
  EXPECT_NEAR(bessel_i0_scaled(50.0), oracle, 1e-8 * oracle);
  // Two leading terms; the first omitted term is 9/(2·400²) ≈ 2.8e-5.
  const double leading = (1.0 + 1.0 / 400.0) / std::sqrt(2.0 * M_PI * 50.0);
  EXPECT_NEAR(bessel_i0_scaled(50.0), leading, 4e-5 * leading);
}

TEST(BesselI0, AgreesWithStandardLibrary) {
  for (double x = 0.0; x <= 700.0; x += (x < 20 ? 0.37 : 13.1)) {
    const double ref = std::cyl_bessel_i(0.0, x);
    EXPECT_NEAR(bessel_i0(x), ref, 1e-12 * ref) << "x = " << x;
    EXPECT_NEAR(bessel_i0_scaled(x), std::exp(-x) * ref, 1e-12 * std::exp(-x) * ref)
        << "x = " << x;
  }
}

TEST(BesselI0, SeriesAndAsymptoticBranchesMeetAtSplit) {
  for (double x : {14.9, 14.999, 15.0, 15.001, 15.1}) {
    const double oracle = series_oracle(x, 80);
    EXPECT_NEAR(bessel_i0(x), oracle, 1e-12 * oracle) << "x = " << x;
  }
}

TEST(BesselI0, ScaledVariantIsFiniteAtLargeArgument) {
  for (double x : {1e3, 1e5, 1e8}) {
    const double v = bessel_i0_scaled(x);
    EXPECT_TRUE(std::isfinite(v));
    EXPECT_NEAR(v, asymptotic_oracle(x, 6), 1e-12 * v);
  }
}

TEST(BesselI0, OverflowAndDomainErrors) {
  EXPECT_THROW(bessel_i0(800.0), Overflow);
  EXPECT_THROW(bessel_i0(-1.0), InvalidArgument);
  EXPECT_THROW(bessel_i0_scaled(-1.0), InvalidArgument);
}

TEST(BesselI0, MonotoneAndAtLeastOne) {
  double prev = 0.0;
  for (double x = 0.0; x < 100.0; x += 0.25) {
    const double v = bessel_i0(x);
    EXPECT_GE(v, 1.0);
    EXPECT_GT(v, prev);
    prev = v;
  }
}

}  // namespace
}  // namespace se2frame
