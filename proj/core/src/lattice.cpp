#include "se2frame/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/SVD>

#include "se2frame/error.hpp"

namespace se2frame {

Lattice2D::Lattice2D(const Mat2& basis) : basis_(basis) {
  const double scale = basis.cwiseAbs().maxCoeff();
  const double det = basis.determinant();
  if (!std::isfinite(det) || scale == 0.0 || std::abs(det) <= 1e-12 * scale * scale) {
    std::ostringstream msg;
    msg << "lattice basis is singular (det = " << det << ")";
    throw SingularBasis(msg.str());
  }
  inverse_ = basis.inverse();
}

bool FundamentalCell::contains(const Vec2& x) const {
  const Vec2 uv = basis.inverse() * (x - center);
  return uv.x() >= -0.5 && uv.x() < 0.5 && uv.y() >= -0.5 && uv.y() < 0.5;
}

Lattice2D make_lattice(const Mat2& basis) { return Lattice2D(basis); }

Lattice2D annihilator(const Lattice2D& lattice) {
  return Lattice2D(lattice.inverse().transpose());
}

double covolume(const Lattice2D& lattice) { return std::abs(lattice.basis().determinant()); }

FundamentalCell centered_cell(const Lattice2D& lattice) {
  return FundamentalCell{Vec2::Zero(), lattice.basis()};
}

IndexSet enumerate_V(const Vec2& omega, double rho, const Lattice2D& dual) {
  if (!(rho > 0.0)) throw InvalidArgument("enumerate_V: rho must be positive");

  IndexSet out;
  out.omega = omega;
  out.rho = rho;

  // Box of half-width rho + ‖B‖₂ around -ω, pulled back to integer
  // coordinates through B⁻¹ row by row.
  const Mat2& inv = dual.inverse();
  const double opnorm = dual.basis().jacobiSvd().singularValues()(0);
  const double half = rho + opnorm;
  const Vec2 center = inv * (-omega);
  int lo[2];
  int hi[2];
  for (int i = 0; i < 2; ++i) {
    const double reach = half * (std::abs(inv(i, 0)) + std::abs(inv(i, 1)));
    lo[i] = static_cast<int>(std::floor(center(i) - reach));
    hi[i] = static_cast<int>(std::ceil(center(i) + reach));
  }

  const double limit = rho - kBoundaryTolerance;
  for (int a = lo[0]; a <= hi[0]; ++a) {
    for (int b = lo[1]; b <= hi[1]; ++b) {
      const IVec2 n(a, b);
      const Vec2 nu = dual.point(n);
      if ((nu + omega).norm() < limit) {
        out.coords.push_back(n);
        out.points.push_back(nu);
      }
    }
  }
  // Loop order already yields lexicographic order on (a, b).
  return out;
}

CountField count_field(std::span<const Vec2> grid, double rho, const Lattice2D& dual) {
  if (grid.empty()) throw InvalidArgument("count_field: grid is empty");
  CountField field;
  field.counts.reserve(grid.size());
  for (const Vec2& omega : grid) {
    field.counts.push_back(static_cast<int>(enumerate_V(omega, rho, dual).size()));
  }
  const auto [mn, mx] = std::minmax_element(field.counts.begin(), field.counts.end());
  field.min = *mn;
  field.max = *mx;
  return field;
}

}  // namespace se2frame
