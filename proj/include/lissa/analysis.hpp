#pragma once

#include <span>
#include <vector>

#include "lissa/kernels.hpp"

namespace lissa {

/// Least-squares growth fit for the Lebesgue constant of the degree-2n Padua
/// points: ((2/pi) ln(2n+1) + 1.1)^2. Natural logarithm.
double lebesgue_fit_padua(int n);

/// Same for the odd-degree Xu points: ((2/pi) ln(2n+2))^2.
double lebesgue_fit_xu(int n);

/// Test functions 1..10 on [0,1]^2: Franke's functions as extended by
/// Renka and Brown. Formulas and citation in docs/formats.md.
double franke_function(int id, double x, double y);

/// Max interpolation error for franke_function(id): nodes are mapped to
/// [0,1]^2 by u = (x+1)/2, the function is sampled there, and the interpolant
/// is compared with the function on a uniform eval_nx x eval_ny grid over
/// [0,1]^2 (grid points mapped back to [-1,1]^2 for evaluation).
double error_experiment(const NodeSet& nodes, int id, int eval_nx, int eval_ny);

struct ErrorTable {
  std::vector<int> degrees;      // n per row
  std::vector<int> node_counts;  // |nodes| per row
  Eigen::MatrixXd errors;        // one column per test function id 1..10
};

ErrorTable build_error_table(std::span<const int> degrees, int p, int eval_nx,
                             int eval_ny);

}  // namespace lissa
