#include "lissa/quadrature.hpp"

namespace lissa {

double integrate(const QuadratureRule& rule, const std::function<double(double, double)>& f) {
  double sum = 0.0;
  for (const Node& node : rule.nodes->nodes) {
    sum += node.weight * f(node.x, node.y);
  }
  return sum;
}

double curve_integral(const LissajousParams& params,
                      const std::function<double(double, double)>& f) {
  double sum = 0.0;
  for (int k = 1; k <= params.sample_count(); ++k) {
    const Point2 pt = curve_point(params, sample_time(params, k));
    sum += f(pt.x, pt.y);
  }
  return sum / params.sample_count();
}

double reference_integral(int i, int j) { return (i == 0 && j == 0) ? 1.0 : 0.0; }

}  // namespace lissa
