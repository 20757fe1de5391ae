#pragma once

#include <functional>

#include "lissa/nodes.hpp"

namespace lissa {

/// Node-sum quadrature for (1/pi^2) of f over [-1,1]^2 against the product
/// Chebyshev weight 1/sqrt((1-x^2)(1-y^2)).
struct QuadratureRule {
  explicit QuadratureRule(const NodeSet& ns) : nodes(&ns) {}

  const NodeSet* nodes;  // non-owning
};

/// sum_A w_A f(x_A, y_A) in canonical node order.
double integrate(const QuadratureRule& rule, const std::function<double(double, double)>& f);

/// Trapezoidal sum along the curve: (1/(4n(n+p))) sum_k f(gamma(t_k)).
/// Agrees with integrate() for every f: each interior node is hit by exactly
/// two sample times and each boundary node by one.
double curve_integral(const LissajousParams& params,
                      const std::function<double(double, double)>& f);

/// Exact value of (1/pi^2) iint T_i(x) T_j(y) dx dy / sqrt((1-x^2)(1-y^2)):
/// 1 at (i, j) = (0, 0), else 0.
double reference_integral(int i, int j);

}  // namespace lissa
