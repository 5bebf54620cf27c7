#pragma once

namespace se2frame {

// Modified Bessel function of the first kind, order zero. Power series up to
// x = 15, asymptotic expansion beyond. Relative accuracy ~1e-13.
//
// Throws InvalidArgument for x < 0 and Overflow when e^x is not representable.
double bessel_i0(double x);

// e^{-x} I₀(x); finite for every x >= 0.
double bessel_i0_scaled(double x);

}  // namespace se2frame
