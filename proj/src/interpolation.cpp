#include "lissa/interpolation.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lissa/chebyshev.hpp"
#include "lissa/error.hpp"

namespace lissa {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double sqrt2 = std::numbers::sqrt2;

void check_sample_length(const NodeSet& nodes, const SampleVector& samples) {
  if (samples.values.size() != nodes.params.node_count()) {
    fail(Errc::length_mismatch,
         "sample vector has " + std::to_string(samples.values.size()) +
             " values, node set has " + std::to_string(nodes.params.node_count()));
  }
}

}  // namespace

SampleVector sample_function(const NodeSet& nodes,
                             const std::function<double(double, double)>& f) {
  SampleVector samples{nodes.params,
                       Eigen::VectorXd(static_cast<Eigen::Index>(nodes.nodes.size()))};
  for (std::size_t a = 0; a < nodes.nodes.size(); ++a) {
    samples.values[static_cast<Eigen::Index>(a)] = f(nodes.nodes[a].x, nodes.nodes[a].y);
  }
  return samples;
}

CoefficientMatrix interpolate(const NodeSet& nodes, const SampleVector& samples) {
  check_sample_length(nodes, samples);
  const LissajousParams& params = nodes.params;
  Eigen::MatrixXd c = Eigen::MatrixXd::Zero(params.coeff_rows(), params.coeff_cols());
  for (std::size_t a = 0; a < nodes.nodes.size(); ++a) {
    const Node& node = nodes.nodes[a];
    const std::vector<double> tx = cheb_vector(Axis::x, params, node.x);
    const std::vector<double> ty = cheb_vector(Axis::y, params, node.y);
    const double scale = node.weight * samples.values[static_cast<Eigen::Index>(a)];
    for (int j = 0; j < params.coeff_cols(); ++j) {
      const double sy = scale * ty[static_cast<std::size_t>(j)];
      for (int i = 0; i < params.coeff_rows(); ++i) {
        c(i, j) += sy * tx[static_cast<std::size_t>(i)];
      }
    }
  }
  const Mask mask = build_mask(params);
  c.array() *= mask.entries.array();
  return CoefficientMatrix{params, std::move(c)};
}

double evaluate(const CoefficientMatrix& coeffs, double x, double y) {
  const int cols = coeffs.params.coeff_cols();
  std::vector<double> column_values(static_cast<std::size_t>(cols));
  for (int j = 0; j < cols; ++j) {
    const auto& col = coeffs.entries.col(j);
    column_values[static_cast<std::size_t>(j)] =
        clenshaw_that(std::span<const double>(col.data(), static_cast<std::size_t>(col.size())), x);
  }
  return clenshaw_that(column_values, y);
}

LKernel::LKernel(const LissajousParams& params)
    : params_(params), row_max_(gamma_l_row_max(params)) {}

double LKernel::operator()(Point2 a, Point2 b) const {
  const std::vector<double> ax = cheb_vector(Axis::x, params_, a.x);
  const std::vector<double> bx = cheb_vector(Axis::x, params_, b.x);
  const std::vector<double> ay = cheb_vector(Axis::y, params_, a.y);
  const std::vector<double> by = cheb_vector(Axis::y, params_, b.y);
  double sum = 0.0;
  for (std::size_t i = 0; i < row_max_.size(); ++i) {
    double row_sum = 0.0;
    for (int j = 0; j <= row_max_[i]; ++j) {
      row_sum += ay[static_cast<std::size_t>(j)] * by[static_cast<std::size_t>(j)];
    }
    sum += ax[i] * bx[i] * row_sum;
  }
  return sum;
}

double lagrange_basis(const NodeSet& nodes, const LKernel& kernel, int node, double x,
                      double y) {
  const Node& a = nodes.nodes[static_cast<std::size_t>(node)];
  const int top = 2 * nodes.params.n;
  const double correction =
      0.5 * cheb_that(top, y) * cheb_that(top, a.y);
  return a.weight * (kernel({x, y}, {a.x, a.y}) - correction);
}

double trig_basis_e(const LissajousParams& params, int i, int j, double t) {
  if (!in_gamma_l(params, i, j)) {
    fail(Errc::index_not_in_gamma_l, "index (" + std::to_string(i) + ", " +
                                         std::to_string(j) + ") outside Gamma^L");
  }
  const double cx = std::cos(i * params.n * t - i * pi / 2.0);
  const double cy = std::cos(j * (params.n + params.p) * t - j * pi / 2.0);
  if (i == 0 && j == 0) return 1.0;
  if (j == 0) return sqrt2 * cx;
  if (i == 0) return sqrt2 * cy;
  return 2.0 * cx * cy;
}

double dirichlet_kernel(const LissajousParams& params, double t) {
  const double two_m = params.sample_count();  // 4n(n+p)
  double tau = std::remainder(t, 2.0 * pi);
  if (std::abs(tau) < 1e-12) return 1.0;
  return std::sin(two_m / 2.0 * tau) * std::cos(tau / 2.0) / (two_m * std::sin(tau / 2.0));
}

double dirichlet_lagrange(const NodeSet& nodes, int node, double t) {
  double sum = 0.0;
  for (const int k : nodes.nodes[static_cast<std::size_t>(node)].sample_indices) {
    sum += dirichlet_kernel(nodes.params, t - sample_time(nodes.params, k));
  }
  return sum;
}

ReducedSamples reduce_curve_samples(const NodeSet& nodes,
                                    std::span<const double> curve_values, double slack) {
  if (static_cast<int>(curve_values.size()) != nodes.params.sample_count()) {
    fail(Errc::length_mismatch,
         "curve-ordered input has " + std::to_string(curve_values.size()) +
             " values, expected " + std::to_string(nodes.params.sample_count()));
  }
  ReducedSamples result{
      SampleVector{nodes.params,
                   Eigen::VectorXd(static_cast<Eigen::Index>(nodes.nodes.size()))},
      0, 0.0};
  for (std::size_t a = 0; a < nodes.nodes.size(); ++a) {
    const Node& node = nodes.nodes[a];
    double sum = 0.0;
    double lo = 0.0, hi = 0.0;
    for (std::size_t s = 0; s < node.sample_indices.size(); ++s) {
      const double v = curve_values[static_cast<std::size_t>(node.sample_indices[s] - 1)];
      sum += v;
      lo = s == 0 ? v : std::min(lo, v);
      hi = s == 0 ? v : std::max(hi, v);
    }
    const double mismatch = hi - lo;
    if (mismatch > slack) {
      fail(Errc::inconsistent_samples,
           "curve samples of node " + std::to_string(a) + " disagree by " +
               std::to_string(mismatch) + ", beyond slack " + std::to_string(slack));
    }
    if (mismatch > curve_sample_agree_tol) {
      ++result.mismatch_count;
    }
    result.max_mismatch = std::max(result.max_mismatch, mismatch);
    result.samples.values[static_cast<Eigen::Index>(a)] =
        sum / static_cast<double>(node.sample_indices.size());
  }
  return result;
}

}  // namespace lissa
