#include "se2frame/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "se2frame/error.hpp"
#include "se2frame/framefield.hpp"
#include "se2frame/gramian.hpp"
#include "se2frame/quadrature.hpp"

namespace se2frame {

Complex Bump::value(const Vec2& xi) const {
  const double t = (xi - center).squaredNorm() / (radius * radius);
  if (t >= 1.0) return 0.0;
  return coefficient * std::exp(1.0 - 1.0 / (1.0 - t));
}

BandLimitedTestFunction BandLimitedTestFunction::make(std::vector<Bump> bumps, double rho) {
  for (std::size_t j = 0; j < bumps.size(); ++j) {
    const Bump& b = bumps[j];
    std::ostringstream msg;
    if (!(b.radius > 0.0) || !std::isfinite(b.radius)) {
      msg << "test function: bump " << j << " radius must be positive";
      throw InvalidArgument(msg.str());
    }
    if (!(b.center.norm() + b.radius < rho)) {
      msg << "test function: bump " << j << " support is not inside B(0, " << rho << ")";
      throw InvalidArgument(msg.str());
    }
  }
  return BandLimitedTestFunction(std::move(bumps));
}

Complex BandLimitedTestFunction::value(const Vec2& xi) const {
  Complex sum = 0.0;
  for (const Bump& b : bumps_) sum += b.value(xi);
  return sum;
}

double BandLimitedTestFunction::support_radius() const {
  double r = 0.0;
  for (const Bump& b : bumps_) r = std::max(r, b.center.norm() + b.radius);
  return r;
}

BandLimitedTestFunction BandLimitedTestFunction::scaled(Complex factor) const {
  std::vector<Bump> out = bumps_;
  for (Bump& b : out) b.coefficient *= factor;
  return BandLimitedTestFunction(std::move(out));
}

// Weighted integrand samples of one quadrature level, one block per bump.
struct CoefficientEvaluator::Level {
  struct Block {
    std::vector<double> nx;
    std::vector<double> ny;
    Eigen::MatrixXcd weighted;  // w_a w_b f̂_j(ξ_ab) ψ̂_θ(ξ_ab)
  };
  std::vector<Block> blocks;
};

CoefficientEvaluator::CoefficientEvaluator(const BandLimitedTestFunction& f, double theta,
                                           const WaveletParams& w)
    : f_(f), theta_(theta), w_(w) {
  const Level& lv = level(2);
  for (const auto& block : lv.blocks) scale_ += block.weighted.cwiseAbs().sum();
}

CoefficientEvaluator::~CoefficientEvaluator() = default;
CoefficientEvaluator::CoefficientEvaluator(CoefficientEvaluator&&) noexcept = default;
CoefficientEvaluator& CoefficientEvaluator::operator=(CoefficientEvaluator&&) noexcept = default;

const CoefficientEvaluator::Level& CoefficientEvaluator::level(int index) {
  while (static_cast<int>(levels_.size()) <= index) {
    const int panels = 1 << levels_.size();
    Level lv;
    for (const Bump& b : f_.bumps()) {
      const QuadratureRule rx =
          composite_gauss_legendre(b.center.x() - b.radius, b.center.x() + b.radius, panels);
      const QuadratureRule ry =
          composite_gauss_legendre(b.center.y() - b.radius, b.center.y() + b.radius, panels);
      Level::Block block{rx.nodes, ry.nodes, Eigen::MatrixXcd(rx.nodes.size(), ry.nodes.size())};
      for (std::size_t a = 0; a < rx.nodes.size(); ++a) {
        for (std::size_t c = 0; c < ry.nodes.size(); ++c) {
          const Vec2 xi(rx.nodes[a], ry.nodes[c]);
          block.weighted(a, c) = rx.weights[a] * ry.weights[c] * b.value(xi) *
                                 psi_hat_rotated(xi, theta_, w_);
        }
      }
      lv.blocks.push_back(std::move(block));
    }
    levels_.push_back(std::move(lv));
  }
  return levels_[static_cast<std::size_t>(index)];
}

Complex CoefficientEvaluator::evaluate(const Level& lv, const Vec2& x) const {
  Complex sum = 0.0;
  for (const auto& block : lv.blocks) {
    Eigen::VectorXcd ex(block.nx.size());
    Eigen::VectorXcd ey(block.ny.size());
    for (std::size_t a = 0; a < block.nx.size(); ++a) ex(a) = std::polar(1.0, kTwoPi * x.x() * block.nx[a]);
    for (std::size_t c = 0; c < block.ny.size(); ++c) ey(c) = std::polar(1.0, kTwoPi * x.y() * block.ny[c]);
    sum += (ex.transpose() * block.weighted * ey).value();
  }
  return sum;
}

Complex CoefficientEvaluator::operator()(const Vec2& x) {
  if (f_.bumps().empty()) return 0.0;
  int l = start_level_;
  Complex prev = evaluate(level(l), x);
  for (int doublings = 1; doublings <= kMaxQuadratureDoublings; ++doublings) {
    ++l;
    const Complex next = evaluate(level(l), x);
    if (std::abs(next - prev) <= kCoefficientTolerance * std::max(std::abs(next), scale_)) {
      start_level_ = l - 1;
      return next;
    }
    prev = next;
  }
  std::ostringstream msg;
  msg << "wavelet_coefficient: quadrature did not converge at x = (" << x.x() << ", " << x.y()
      << ")";
  throw QuadratureStall(msg.str());
}

Complex wavelet_coefficient(const BandLimitedTestFunction& f, const Vec2& x, double theta,
                            const WaveletParams& w) {
  CoefficientEvaluator eval(f, theta, w);
  return eval(x);
}

LatticeSum energy_sum(const BandLimitedTestFunction& f, const SamplingSpec& spec,
                      double tail_tol) {
  if (!spec.has_shifts()) throw InvalidArgument("energy_sum: spec needs explicit shifts");
  if (!(tail_tol > 0.0)) throw InvalidArgument("energy_sum: tail tolerance must be positive");

  std::vector<CoefficientEvaluator> evals;
  evals.reserve(spec.angles.size());
  for (double theta : spec.angles) evals.emplace_back(f, theta, spec.wavelet);

  LatticeSum out;
  for (int radius = 0; radius <= kMaxLatticeRadius; ++radius) {
    double shell = 0.0;
    for (std::size_t k = 0; k < evals.size(); ++k) {
      auto add = [&](int a, int b) {
        const Vec2 x = spec.lattice.point(IVec2(a, b)) + spec.shifts[k];
        shell += std::norm(evals[k](x));
        ++out.terms;
      };
      if (radius == 0) {
        add(0, 0);
        continue;
      }
      for (int a = -radius; a <= radius; ++a) {
        add(a, -radius);
        add(a, radius);
      }
      for (int b = -radius + 1; b <= radius - 1; ++b) {
        add(-radius, b);
        add(radius, b);
      }
    }
    out.value += shell;
    out.radius = radius;
    if (radius >= 2 && shell <= tail_tol * out.value) return out;
  }
  std::ostringstream msg;
  msg << "energy_sum: lattice tail above " << tail_tol << " at radius " << kMaxLatticeRadius;
  throw TailNotConverged(msg.str());
}

Eigen::VectorXcd fiber_vector(const BandLimitedTestFunction& f, const Vec2& omega,
                              const IndexSet& indices) {
  Eigen::VectorXcd z(static_cast<Eigen::Index>(indices.size()));
  for (std::size_t j = 0; j < indices.size(); ++j) z(j) = f.value(omega + indices.points[j]);
  return z;
}

GridIntegral quadratic_form_integral(const BandLimitedTestFunction& f, const SamplingSpec& spec,
                                     int grid_size) {
  if (!spec.has_shifts()) {
    throw InvalidArgument("quadratic_form_integral: spec needs explicit shifts");
  }
  if (grid_size < 1) throw InvalidArgument("quadratic_form_integral: grid size must be >= 1");
  if (!(f.support_radius() < spec.rho)) {
    throw InvalidArgument("quadratic_form_integral: f is not band-limited to B(0, rho)");
  }
  const Lattice2D dual = spec.dual();
  const FundamentalCell cell = centered_cell(dual);

  auto integrate = [&](int m) {
    double sum = 0.0;
    for (const Vec2& omega : omega_grid(cell, m)) {
      const DualGramian g = build_gramian(omega, spec);
      if (g.empty()) continue;
      sum += quadratic_form(g.entries, fiber_vector(f, omega, g.indices));
    }
    return cell.area() * sum / (static_cast<double>(m) * m);
  };

  GridIntegral out{integrate(grid_size), grid_size};
  for (int m = 2 * grid_size; m <= kMaxOracleGrid; m *= 2) {
    const double next = integrate(m);
    const double change = std::abs(next - out.value);
    out = GridIntegral{next, m};
    if (change <= kGridRefinementTolerance * std::abs(next)) return out;
  }
  std::ostringstream msg;
  msg << "quadratic_form_integral: grid refinement did not settle by M = " << kMaxOracleGrid;
  throw NoConvergence(msg.str());
}

Complex bracket(const BandLimitedTestFunction& f, const Generator& g, const Vec2& omega,
                const Lattice2D& lattice) {
  const double reach = f.support_radius();
  if (reach <= 0.0) return 0.0;
  const IndexSet v = enumerate_V(omega, reach, annihilator(lattice));
  Complex sum = 0.0;
  for (const Vec2& nu : v.points) {
    const Vec2 xi = omega + nu;
    sum += f.value(xi) * std::conj(phi_hat(xi, g));
  }
  return sum;
}

double bracket_self_integral(const BandLimitedTestFunction& f, const Lattice2D& lattice,
                             int grid_size) {
  const double reach = f.support_radius();
  if (reach <= 0.0) return 0.0;
  const Lattice2D dual = annihilator(lattice);
  const FundamentalCell cell = centered_cell(dual);
  double sum = 0.0;
  for (const Vec2& omega : omega_grid(cell, grid_size)) {
    for (const Vec2& nu : enumerate_V(omega, reach, dual).points) sum += std::norm(f.value(omega + nu));
  }
  return cell.area() * sum / (static_cast<double>(grid_size) * grid_size);
}

double norm_squared(const BandLimitedTestFunction& f) {
  if (f.bumps().empty()) return 0.0;
  Vec2 lo = f.bumps().front().center;
  Vec2 hi = lo;
  for (const Bump& b : f.bumps()) {
    lo = lo.cwiseMin(b.center - Vec2::Constant(b.radius));
    hi = hi.cwiseMax(b.center + Vec2::Constant(b.radius));
  }
  return integrate_box([&](const Vec2& xi) { return std::norm(f.value(xi)); }, lo, hi, 1e-10)
      .value;
}

}  // namespace se2frame
