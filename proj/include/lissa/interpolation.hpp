#pragma once

#include <functional>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "lissa/index_set.hpp"
#include "lissa/nodes.hpp"

namespace lissa {

/// Function values over the node set, canonical order.
struct SampleVector {
  LissajousParams params;
  Eigen::VectorXd values;  // length node_count()
};

/// Chebyshev coefficients c_ij of a polynomial from the interpolation space;
/// row i = x-degree in [0, 2(n+p)), column j = y-degree in [0, 2n].
struct CoefficientMatrix {
  LissajousParams params;
  Eigen::MatrixXd entries;  // 2(n+p) x (2n+1)
};

SampleVector sample_function(const NodeSet& nodes,
                             const std::function<double(double, double)>& f);

/// Coefficients of the unique interpolant: accumulates the rank-1 updates
/// w_A f_A That(x_A) That(y_A)^T in canonical node order, then applies the
/// mask entrywise (which carries the 1/2 at (0, 2n)).
CoefficientMatrix interpolate(const NodeSet& nodes, const SampleVector& samples);

/// Value of the polynomial at (x, y); Clenshaw summation along each axis.
double evaluate(const CoefficientMatrix& coeffs, double x, double y);

/// Reproducing kernel of the interpolation space, with the row structure of
/// Gamma^L cached at construction.
class LKernel {
public:
  explicit LKernel(const LissajousParams& params);

  /// K^L(a; b) = sum over Gamma^L of That_i(x_a)That_i(x_b)That_j(y_a)That_j(y_b).
  double operator()(Point2 a, Point2 b) const;

  [[nodiscard]] const LissajousParams& params() const { return params_; }
  [[nodiscard]] const std::vector<int>& row_max() const { return row_max_; }

private:
  LissajousParams params_;
  std::vector<int> row_max_;
};

/// Lagrange basis polynomial of the given node, evaluated at (x, y):
/// w_A (K^L(x, y; A) - 1/2 That_{2n}(y) That_{2n}(y_A)).
double lagrange_basis(const NodeSet& nodes, const LKernel& kernel, int node, double x,
                      double y);

/// Image of That_i(x) That_j(y) along the curve, as a function of t.
/// Requires (i, j) in Gamma^L.
double trig_basis_e(const LissajousParams& params, int i, int j, double t);

/// Dirichlet kernel D(t) = sin(2n(n+p) t) cos(t/2) / (4n(n+p) sin(t/2)), with
/// the removable singularity at t = 0 (mod 2 pi) filled with 1.
double dirichlet_kernel(const LissajousParams& params, double t);

/// l_A(t) = sum of D(t - t_k) over the sample indices k of the node.
/// Coincides with the node's Lagrange polynomial along the curve.
double dirichlet_lagrange(const NodeSet& nodes, int node, double t);

/// Strict agreement tolerance for the two curve samples of an interior node.
inline constexpr double curve_sample_agree_tol = 1e-9;

struct ReducedSamples {
  SampleVector samples;
  int mismatch_count = 0;      // interior nodes disagreeing beyond the strict tolerance
  double max_mismatch = 0.0;   // largest disagreement seen
};

/// Folds 4n(n+p) curve-ordered values u_k = f(gamma(t_k)) onto the nodes,
/// averaging the two values of each interior node. Disagreement beyond `slack`
/// raises Error(inconsistent_samples); disagreement beyond the strict
/// curve_sample_agree_tol is only counted, for the caller to warn about.
ReducedSamples reduce_curve_samples(const NodeSet& nodes,
                                    std::span<const double> curve_values, double slack);

}  // namespace lissa
