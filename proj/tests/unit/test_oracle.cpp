#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "se2frame/error.hpp"
#include "se2frame/framefield.hpp"
#include "se2frame/gramian.hpp"
#include "se2frame/oracle.hpp"
#include "se2frame/quadrature.hpp"

namespace se2frame {
namespace {

const WaveletParams kSim1 = WaveletParams::make(0.5, 2.0 / M_PI);
const Lattice2D kZ2 = make_lattice(Mat2::Identity());

BandLimitedTestFunction one_bump(Complex c = 1.0) {
  return BandLimitedTestFunction::make({Bump{Vec2(0.2, -0.1), 0.6, c}}, 1.0);
}

BandLimitedTestFunction two_bumps() {
  return BandLimitedTestFunction::make(
      {Bump{Vec2(0.2, 0.1), 0.6, 1.0}, Bump{Vec2(-0.3, 0.4), 0.5, Complex(0.4, -0.7)}}, 1.2);
}

SamplingSpec spec_with(double rho, std::vector<double> angles, std::vector<Vec2> shifts) {
  return SamplingSpec::make(kSim1, kZ2, rho, std::move(angles), std::move(shifts));
}

TEST(Bump, ProfileValues) {
  const Bump b{Vec2(0.1, 0.0), 0.5, Complex(2.0, 0.0)};
  EXPECT_NEAR(b.value(Vec2(0.1, 0.0)).real(), 2.0, 1e-15);
  EXPECT_EQ(b.value(Vec2(0.6, 0.0)), Complex(0.0));
  EXPECT_EQ(b.value(Vec2(1.0, 1.0)), Complex(0.0));
  // t = 1/4: e^{1 − 4/3}.
  EXPECT_NEAR(b.value(Vec2(0.35, 0.0)).real(), 2.0 * std::exp(1.0 - 4.0 / 3.0), 1e-15);
}

TEST(BandLimitedTestFunction, RejectsSupportOutsideBall) {
  EXPECT_THROW(BandLimitedTestFunction::make({Bump{Vec2(0.5, 0), 0.5, 1.0}}, 1.0),
               InvalidArgument);
  EXPECT_THROW(BandLimitedTestFunction::make({Bump{Vec2(0.0, 0), -0.1, 1.0}}, 1.0),
               InvalidArgument);
  EXPECT_NO_THROW(BandLimitedTestFunction::make({Bump{Vec2(0.5, 0), 0.49, 1.0}}, 1.0));
}

TEST(WaveletCoefficient, ZeroFunctionGivesZero) {
  const auto f = one_bump(0.0);
  EXPECT_EQ(wavelet_coefficient(f, Vec2(0.3, 0.1), 0.5, kSim1), Complex(0.0));
}

TEST(WaveletCoefficient, Linear) {
  const auto f = two_bumps();
  const Complex c(0.3, -1.7);
  for (const Vec2& x : {Vec2(0, 0), Vec2(1.5, -2.0), Vec2(-3.2, 0.4)}) {
    const Complex a = wavelet_coefficient(f, x, 1.1, kSim1);
    const Complex b = wavelet_coefficient(f.scaled(c), x, 1.1, kSim1);
    EXPECT_LE(std::abs(b - c * a), 1e-12 * std::abs(c) * std::max(std::abs(a), 1e-3));
  }
}

// Composite midpoint rule on the bump's bounding square, doubled until two
// levels agree to 1e-13; the integrand is C^∞ with compact support, so the
// rule converges faster than any power of h.
Complex midpoint_coefficient(const Bump& b, const Vec2& x, double theta, const WaveletParams& w) {
  auto level = [&](int n) {
    const double h = 2 * b.radius / n;
    Complex sum = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Vec2 xi = b.center + Vec2(-b.radius + (i + 0.5) * h, -b.radius + (j + 0.5) * h);
        sum += b.value(xi) * psi_hat_rotated(xi, theta, w) * std::conj(fourier_character(x, xi));
      }
    }
    return sum * h * h;
  };
  Complex prev = level(32);
  for (int n = 64; n <= 4096; n *= 2) {
    const Complex next = level(n);
    if (std::abs(next - prev) <= 1e-13 * std::abs(next)) return next;
    prev = next;
  }
  return prev;
}

TEST(WaveletCoefficient, MatchesMidpointRule) {
  const Bump bump{Vec2(0.3, 0.0), 0.1, 1.0};
  const auto f = BandLimitedTestFunction::make({bump}, 1.0);
  const Complex gl = wavelet_coefficient(f, Vec2::Zero(), 0.0, kSim1);
  const Complex mid = midpoint_coefficient(bump, Vec2::Zero(), 0.0, kSim1);
  EXPECT_LE(std::abs(gl - mid), 1e-8 * std::abs(mid));
  // Off-origin positions exercise the phase factor.
  for (const Vec2& x : {Vec2(1, 0), Vec2(-2, 3), Vec2(0.37, 0.81)}) {
    const Complex a = wavelet_coefficient(f, x, 0.0, kSim1);
    const Complex b = midpoint_coefficient(bump, x, 0.0, kSim1);
    EXPECT_LE(std::abs(a - b), 1e-8 * std::abs(mid));
  }
}

TEST(CoefficientEvaluator, AgreesWithOneShotEvaluation) {
  const auto f = two_bumps();
  CoefficientEvaluator eval(f, 2.0, kSim1);
  for (const Vec2& x : {Vec2(0, 0), Vec2(4, -1), Vec2(0.5, 0.5)}) {
    const Complex a = eval(x);
    const Complex b = wavelet_coefficient(f, x, 2.0, kSim1);
    EXPECT_LE(std::abs(a - b), 1e-10 * eval.scale());
  }
}

TEST(EnergySum, ZeroFunctionGivesZero) {
  const SamplingSpec spec = spec_with(1.0, {0.0, M_PI}, {Vec2(0.1, 0.2), Vec2(0.6, 0.7)});
  EXPECT_EQ(energy_sum(one_bump(0.0), spec, 1e-8).value, 0.0);
}

TEST(EnergySum, QuadraticScaling) {
  const SamplingSpec spec = spec_with(1.0, {0.0, M_PI}, {Vec2(0.1, 0.2), Vec2(0.6, 0.7)});
  const double base = energy_sum(one_bump(), spec, 1e-8).value;
  const Complex c(-1.5, 2.0);
  const double scaled = energy_sum(one_bump(c), spec, 1e-8).value;
  EXPECT_NEAR(scaled, std::norm(c) * base, 1e-9 * std::norm(c) * base);
}

TEST(EnergySum, RequiresShiftsAndPositiveTolerance) {
  const SamplingSpec no_shifts =
      SamplingSpec::make(kSim1, kZ2, 1.0, equally_spaced_angles(2));
  EXPECT_THROW(energy_sum(one_bump(), no_shifts, 1e-8), InvalidArgument);
  const SamplingSpec spec = spec_with(1.0, {0.0}, {Vec2(0.1, 0.2)});
  EXPECT_THROW(energy_sum(one_bump(), spec, 0.0), InvalidArgument);
}

TEST(EnergySum, UnreachableToleranceReportsTail) {
  const SamplingSpec spec = spec_with(1.0, {0.0}, {Vec2(0.1, 0.2)});
  EXPECT_THROW(energy_sum(one_bump(), spec, 1e-300), TailNotConverged);
}

TEST(EnergySum, ParsevalForSupportInsideOneCell) {
  // f̂ψ̂_θ lives in a translate of the unit cell, so the coefficients over
  // Γ + α are its Fourier coefficients and their energy is its L² norm.
  const auto f = BandLimitedTestFunction::make({Bump{Vec2(0.3, 0.0), 0.45, 1.0}}, 1.0);
  for (double theta : {0.0, 1.0, 2.5}) {
    const SamplingSpec spec = spec_with(1.0, {theta}, {Vec2(0.37, 0.61)});
    const double energy = energy_sum(f, spec, 1e-10).value;
    const double cell = integrate_box(
                            [&](const Vec2& xi) {
                              return std::norm(f.value(xi) * psi_hat_rotated(xi, theta, kSim1));
                            },
                            Vec2(-0.15, -0.45), Vec2(0.75, 0.45), 1e-12)
                            .value;
    EXPECT_NEAR(energy, cell, 1e-4 * cell) << "theta = " << theta;
  }
}

TEST(QuadraticFormIntegral, ZeroFunctionGivesZero) {
  const SamplingSpec spec = spec_with(1.0, {0.0, M_PI}, {Vec2(0.1, 0.2), Vec2(0.6, 0.7)});
  EXPECT_EQ(quadratic_form_integral(one_bump(0.0), spec, 8).value, 0.0);
}

TEST(QuadraticFormIntegral, PointwiseRealAndNonnegative) {
  const auto f = two_bumps();
  const SamplingSpec spec = spec_with(1.2, equally_spaced_angles(3),
                                      {Vec2(0.13, 0.71), Vec2(0.52, 0.28), Vec2(0.87, 0.44)});
  for (const Vec2& omega : omega_grid(centered_cell(kZ2), 12)) {
    const DualGramian g = build_gramian(omega, spec);
    if (g.empty()) continue;
    const Eigen::VectorXcd z = fiber_vector(f, omega, g.indices);
    const Complex q = (z.transpose() * g.entries * z.conjugate()).value();
    EXPECT_GE(q.real(), -1e-14);
    EXPECT_LE(std::abs(q.imag()), 1e-13 * std::max(1.0, q.real()));
  }
}

TEST(QuadraticFormIntegral, QuadraticScaling) {
  const SamplingSpec spec = spec_with(1.0, {0.0, M_PI}, {Vec2(0.1, 0.2), Vec2(0.6, 0.7)});
  const double base = quadratic_form_integral(one_bump(), spec, 16).value;
  const double scaled = quadratic_form_integral(one_bump(Complex(0, 3)), spec, 16).value;
  EXPECT_NEAR(scaled, 9 * base, 1e-12 * 9 * base);
}

TEST(QuadraticFormIntegral, AgreesWithEnergySumForOneBumpTwoAngles) {
  const SamplingSpec spec = spec_with(1.0, {0.4, 2.9}, {Vec2(0.15, 0.35), Vec2(0.7, 0.55)});
  const auto f = one_bump();
  const double energy = energy_sum(f, spec, 1e-8).value;
  const double form = quadratic_form_integral(f, spec, 16).value;
  EXPECT_NEAR(energy, form, 1e-3 * form);
}

TEST(QuadraticFormIntegral, AgreesWithEnergySumOnRandomInstances) {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0, 1);
  for (int t = 0; t < 5; ++t) {
    const double rho = 0.8 + 0.7 * u(rng);
    const int n = 1 + static_cast<int>(4 * u(rng));
    std::vector<double> angles(n);
    std::vector<Vec2> shifts(n);
    for (int k = 0; k < n; ++k) {
      angles[k] = 2 * M_PI * (k + 0.8 * u(rng)) / n;
      shifts[k] = Vec2(u(rng), u(rng));
    }
    const WaveletParams w = WaveletParams::make(0.3 + 0.7 * u(rng), 0.2 + 0.5 * u(rng));
    const SamplingSpec spec = SamplingSpec::make(w, kZ2, rho, angles, shifts);

    std::vector<Bump> bumps;
    const int nb = 1 + (t % 2);
    for (int j = 0; j < nb; ++j) {
      const double r = (0.35 + 0.25 * u(rng)) * rho;
      const double reach = (rho - r) * 0.9 * u(rng);
      const double phi = 2 * M_PI * u(rng);
      bumps.push_back(Bump{reach * Vec2(std::cos(phi), std::sin(phi)), r,
                           std::polar(0.5 + u(rng), 2 * M_PI * u(rng))});
    }
    const auto f = BandLimitedTestFunction::make(bumps, rho);
    const double energy = energy_sum(f, spec, 1e-8).value;
    const double form = quadratic_form_integral(f, spec, 16).value;
    EXPECT_NEAR(energy, form, 1e-3 * form) << "instance " << t;
  }
}

TEST(Bracket, DisjointSupportGivesZero) {
  const auto f = BandLimitedTestFunction::make({Bump{Vec2(0.1, 0.1), 0.1, 1.0}}, 0.5);
  const Generator g = Generator::make(kSim1, 0.3, Vec2(0.2, 0.4));
  // ω + ℤ² never meets B((0.1, 0.1), 0.1) for ω = (0.5, 0.5).
  EXPECT_EQ(bracket(f, g, Vec2(0.5, 0.5), kZ2), Complex(0.0));
}

TEST(Bracket, SumOfSquaresIsTheGramianQuadraticForm) {
  const auto f = two_bumps();
  const std::vector<Vec2> shifts{Vec2(0.13, 0.71), Vec2(0.52, 0.28), Vec2(0.87, 0.44)};
  const SamplingSpec spec = spec_with(1.2, equally_spaced_angles(3), shifts);
  for (const Vec2& omega : omega_grid(centered_cell(kZ2), 7)) {
    const DualGramian g = build_gramian(omega, spec);
    const Eigen::VectorXcd z = fiber_vector(f, omega, g.indices);
    double lhs = 0.0;
    for (int k = 0; k < 3; ++k) {
      lhs += std::norm(bracket(f, Generator::make(kSim1, spec.angles[k], shifts[k]), omega, kZ2));
    }
    const double rhs = g.empty() ? 0.0 : quadratic_form(g.entries, z);
    EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, rhs));
  }
}

TEST(Bracket, SelfBracketIntegratesToNorm) {
  const auto f = two_bumps();
  const double cell = bracket_self_integral(f, kZ2, 256);
  const double norm = norm_squared(f);
  EXPECT_NEAR(cell, norm, 1e-4 * norm);
}

TEST(Bracket, HomogeneousOfDegreeOne) {
  const auto f = two_bumps();
  const Generator g = Generator::make(kSim1, 1.0, Vec2(0.3, 0.3));
  const Complex c(2.0, -0.5);
  const Vec2 omega(0.1, -0.2);
  EXPECT_LE(std::abs(bracket(f.scaled(c), g, omega, kZ2) - c * bracket(f, g, omega, kZ2)),
            1e-14 * std::abs(c) * (1.0 + std::abs(bracket(f, g, omega, kZ2))));
}

}  // namespace
}  // namespace se2frame
