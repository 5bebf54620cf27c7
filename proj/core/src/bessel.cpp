#include "se2frame/bessel.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "se2frame/error.hpp"
#include "se2frame/types.hpp"

namespace se2frame {
namespace {

constexpr double kSeriesLimit = 15.0;

// Σ (x/2)^{2m} / (m!)², all terms positive.
double i0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m < 200; ++m) {
    term *= q / (static_cast<double>(m) * m);
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum;
}

// e^{-x} I₀(x) ~ (2πx)^{-1/2} Σ_k [(2k-1)!!]² / (k! 8^k x^k), truncated at
// the smallest term.
double i0_scaled_asymptotic(double x) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 100; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * odd * odd / (8.0 * k * x);
    if (next >= term) break;
    term = next;
    sum += term;
    if (term < sum * 1e-17) break;
  }
  return sum / std::sqrt(kTwoPi * x);
}

void check_domain(double x) {
  if (!(x >= 0.0)) {
    std::ostringstream msg;
    msg << "bessel_i0: argument must be nonnegative, got " << x;
    throw InvalidArgument(msg.str());
  }
}

}  // namespace

double bessel_i0_scaled(double x) {
  check_domain(x);
  if (x <= kSeriesLimit) return std::exp(-x) * i0_series(x);
  return i0_scaled_asymptotic(x);
}

double bessel_i0(double x) {
  check_domain(x);
  if (x <= kSeriesLimit) return i0_series(x);
  const double scaled = i0_scaled_asymptotic(x);
  // log I₀(x) = x + log(scaled)
  if (x + std::log(scaled) >= std::log(std::numeric_limits<double>::max())) {
    std::ostringstream msg;
    msg << "bessel_i0: I0(" << x << ") overflows double; use bessel_i0_scaled";
    throw Overflow(msg.str());
  }
  return std::exp(x) * scaled;
}

}  // namespace se2frame
