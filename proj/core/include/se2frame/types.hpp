#pragma once

#include <complex>

#include <Eigen/Core>
#include <Eigen/LU>

namespace se2frame {

using Complex = std::complex<double>;
using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;
using IVec2 = Eigen::Vector2i;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

}  // namespace se2frame
