#include "lissa/analysis.hpp"

#include <cmath>
#include <numbers>

#include "lissa/error.hpp"
#include "lissa/interpolation.hpp"

namespace lissa {

double lebesgue_fit_padua(int n) {
  const double t = (2.0 / std::numbers::pi) * std::log(2.0 * n + 1.0) + 1.1;
  return t * t;
}

double lebesgue_fit_xu(int n) {
  const double t = (2.0 / std::numbers::pi) * std::log(2.0 * n + 2.0);
  return t * t;
}

double franke_function(int id, double x, double y) {
  switch (id) {
    case 1:
      return 0.75 * std::exp(-((9.0 * x - 2.0) * (9.0 * x - 2.0) +
                               (9.0 * y - 2.0) * (9.0 * y - 2.0)) /
                             4.0) +
             0.75 * std::exp(-(9.0 * x + 1.0) * (9.0 * x + 1.0) / 49.0 -
                             (9.0 * y + 1.0) / 10.0) +
             0.5 * std::exp(-((9.0 * x - 7.0) * (9.0 * x - 7.0) +
                              (9.0 * y - 3.0) * (9.0 * y - 3.0)) /
                            4.0) -
             0.2 * std::exp(-(9.0 * x - 4.0) * (9.0 * x - 4.0) -
                            (9.0 * y - 7.0) * (9.0 * y - 7.0));
    case 2:
      return (std::tanh(9.0 * (y - x)) + 1.0) / 9.0;
    case 3:
      return (1.25 + std::cos(5.4 * y)) /
             (6.0 + 6.0 * (3.0 * x - 1.0) * (3.0 * x - 1.0));
    case 4:
      return std::exp(-5.0625 * ((x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5))) / 3.0;
    case 5:
      return std::exp(-20.25 * ((x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5))) / 3.0;
    case 6:
      return std::sqrt(64.0 - 81.0 * ((x - 0.5) * (x - 0.5) + (y - 0.5) * (y - 0.5))) /
                 9.0 -
             0.5;
    case 7:
      return 2.0 * std::cos(10.0 * x) * std::sin(10.0 * y) + std::sin(10.0 * x * y);
    case 8: {
      const double t3 = std::exp(-0.5 * (5.0 - 10.0 * x) * (5.0 - 10.0 * x));
      const double t4 = std::exp(-0.5 * (5.0 - 10.0 * y) * (5.0 - 10.0 * y));
      return t3 + 0.75 * t4 * (1.0 + t3);
    }
    case 9: {
      const double t1 = std::exp((10.0 - 20.0 * x) / 3.0);
      const double t2 = std::exp((10.0 - 20.0 * y) / 3.0);
      const double t3 = 1.0 / (1.0 + t1);
      const double t4 = 1.0 / (1.0 + t2);
      const double b1 = t3 * (1.0 - t3);
      const double b2 = t4 * (1.0 - t4);
      return 6.4e5 * std::pow(t1 * t2, 0.25) * (t3 - 0.5) * b1 * b1 * (t4 - 0.5) * b2 * b2;
    }
    case 10: {
      const double t1 = std::sqrt((80.0 * x - 40.0) * (80.0 * x - 40.0) +
                                  (90.0 * y - 45.0) * (90.0 * y - 45.0));
      return std::exp(-0.04 * t1) * std::cos(0.15 * t1);
    }
    default:
      fail(Errc::unknown_id, "test function id must be in 1..10, got " + std::to_string(id));
  }
}

double error_experiment(const NodeSet& nodes, int id, int eval_nx, int eval_ny) {
  const SampleVector samples = sample_function(nodes, [id](double x, double y) {
    return franke_function(id, 0.5 * (x + 1.0), 0.5 * (y + 1.0));
  });
  const CoefficientMatrix coeffs = interpolate(nodes, samples);
  GridSpec grid;
  grid.nx = eval_nx;
  grid.ny = eval_ny;
  const std::vector<double> xs = grid.xs();
  const std::vector<double> ys = grid.ys();
  const Eigen::MatrixXd values = evaluate_grid(coeffs, xs, ys);
  double worst = 0.0;
  for (std::size_t a = 0; a < xs.size(); ++a) {
    const double u = 0.5 * (xs[a] + 1.0);
    for (std::size_t b = 0; b < ys.size(); ++b) {
      const double v = 0.5 * (ys[b] + 1.0);
      const double diff = std::abs(values(static_cast<Eigen::Index>(a),
                                          static_cast<Eigen::Index>(b)) -
                                   franke_function(id, u, v));
      worst = std::max(worst, diff);
    }
  }
  return worst;
}

ErrorTable build_error_table(std::span<const int> degrees, int p, int eval_nx,
                             int eval_ny) {
  ErrorTable table;
  table.errors.resize(static_cast<Eigen::Index>(degrees.size()), 10);
  for (std::size_t row = 0; row < degrees.size(); ++row) {
    const NodeSet nodes = build_node_set(validate_params(degrees[row], p));
    table.degrees.push_back(degrees[row]);
    table.node_counts.push_back(static_cast<int>(nodes.nodes.size()));
    for (int id = 1; id <= 10; ++id) {
      table.errors(static_cast<Eigen::Index>(row), id - 1) =
          error_experiment(nodes, id, eval_nx, eval_ny);
    }
  }
  return table;
}

}  // namespace lissa
