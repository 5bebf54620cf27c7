#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "se2frame/types.hpp"

namespace se2frame {

// Full-rank planar lattice B·ℤ². Columns of the basis are the generators.
class Lattice2D {
 public:
  // Throws SingularBasis when |det| <= 1e-12 * (largest |entry|)^2.
  explicit Lattice2D(const Mat2& basis);

  const Mat2& basis() const { return basis_; }
  const Mat2& inverse() const { return inverse_; }

  Vec2 point(const IVec2& coords) const { return basis_ * coords.cast<double>(); }

 private:
  Mat2 basis_;
  Mat2 inverse_;
};

// center + basis·[-1/2, 1/2)^2.
struct FundamentalCell {
  Vec2 center = Vec2::Zero();
  Mat2 basis = Mat2::Identity();

  double area() const { return std::abs(basis.determinant()); }
  Vec2 at(double u, double v) const { return center + basis * Vec2(u, v); }
  bool contains(const Vec2& x) const;
};

// The lattice points ν with |ν + ω| < ρ, sorted lexicographically by their
// integer coordinates.
struct IndexSet {
  Vec2 omega = Vec2::Zero();
  double rho = 0.0;
  std::vector<IVec2> coords;
  std::vector<Vec2> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

struct CountField {
  std::vector<int> counts;
  int max = 0;
  int min = 0;
};

// Absolute slack under which |ν + ω| is treated as lying on the sphere, and
// therefore outside the open ball.
inline constexpr double kBoundaryTolerance = 1e-12;

Lattice2D make_lattice(const Mat2& basis);

// Γ⊥ = (Aᵗ)⁻¹ ℤ².
Lattice2D annihilator(const Lattice2D& lattice);

double covolume(const Lattice2D& lattice);

FundamentalCell centered_cell(const Lattice2D& lattice);

IndexSet enumerate_V(const Vec2& omega, double rho, const Lattice2D& dual);

CountField count_field(std::span<const Vec2> grid, double rho, const Lattice2D& dual);

}  // namespace se2frame
