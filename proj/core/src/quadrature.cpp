#include "se2frame/quadrature.hpp"

#include <boost/math/quadrature/gauss.hpp>

namespace se2frame {

QuadratureRule composite_gauss_legendre(double a, double b, int panels) {
  if (panels < 1) throw InvalidArgument("quadrature: panels must be >= 1");
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();

  QuadratureRule rule;
  rule.nodes.reserve(20 * static_cast<std::size_t>(panels));
  rule.weights.reserve(20 * static_cast<std::size_t>(panels));
  const double width = (b - a) / panels;
  const double half = 0.5 * width;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * width;
    // 20 is even: abscissa() lists the ten positive nodes.
    for (std::size_t i = 0; i < x.size(); ++i) {
      rule.nodes.push_back(mid - half * x[i]);
      rule.weights.push_back(half * w[i]);
      rule.nodes.push_back(mid + half * x[i]);
      rule.weights.push_back(half * w[i]);
    }
  }
  return rule;
}

}  // namespace se2frame
