#pragma once

#include <span>
#include <vector>

#include <Eigen/Core>

#include "lissa/interpolation.hpp"

namespace lissa {

/// Worker thread count: OpenMP's maximum, capped by the LISSA_THREADS
/// environment variable when set. 1 without OpenMP.
int thread_count();

struct GridSpec {
  int nx = 500;
  int ny = 500;
  double x0 = -1.0, x1 = 1.0;
  double y0 = -1.0, y1 = 1.0;

  [[nodiscard]] std::vector<double> xs() const;
  [[nodiscard]] std::vector<double> ys() const;
};

/// Polynomial values on the tensor grid; entry (a, b) = P(xs[a], ys[b]).
/// Two matrix products over precomputed basis tables, OpenMP over rows.
Eigen::MatrixXd evaluate_grid(const CoefficientMatrix& coeffs, std::span<const double> xs,
                              std::span<const double> ys);

/// Same values, one Clenshaw evaluation per point, serial. Kept as the
/// reference implementation for testing.
Eigen::MatrixXd evaluate_grid_reference(const CoefficientMatrix& coeffs,
                                        std::span<const double> xs,
                                        std::span<const double> ys);

/// Matrix of Lagrange basis values over node pairs: entry (a, b) = L_{A_a}(B_b).
/// OpenMP over evaluation nodes.
Eigen::MatrixXd delta_matrix(const NodeSet& nodes);

struct LebesgueRecord {
  LissajousParams params;
  double lambda = 0.0;  // max over the grid of sum_A |L_A(B)|
  double argmax_x = 0.0;
  double argmax_y = 0.0;
};

/// Fast scan for the Lebesgue constant: per grid point, the Lagrange values of
/// all nodes come from two small matrix products over the black/white tensor
/// grids; OpenMP over grid rows. The Lebesgue function is even in x and in y
/// separately (the node set and mask are negation-symmetric), so only the
/// closed positive quadrant of the grid is scanned; the reported argmax is the
/// representative with x >= 0, y >= 0.
LebesgueRecord lebesgue_scan(const NodeSet& nodes, const GridSpec& grid);

/// Direct double loop over grid points and nodes via lagrange_basis, full grid,
/// serial; ties resolved by first occurrence in row-major (y-outer) order.
/// Kept as the reference implementation for testing.
LebesgueRecord lebesgue_scan_reference(const NodeSet& nodes, const GridSpec& grid);

}  // namespace lissa
