#include "lissa/index_set.hpp"

namespace lissa {

bool in_gamma_q(const LissajousParams& params, long long i, long long j) {
  if (i < 0 || j < 0) return false;
  const long long n = params.n;
  const long long p = params.p;
  const long long s = i + j;
  if (s <= 4 * n - 1) return true;
  const long long m = s - 4 * n;
  return m <= 4 * p - 1 && j * p < n * (4 * p - m);
}

bool in_gamma_l(const LissajousParams& params, long long i, long long j) {
  if (i < 0 || j < 0) return false;
  const long long n = params.n;
  const long long p = params.p;
  const long long s = i + j;
  if (s <= 2 * n) return true;
  const long long m = s - 2 * n;
  return m <= 2 * p - 1 && j * p < n * (2 * p - m);
}

bool IndexSet::contains(int i, int j) const {
  return kind == Kind::quadrature ? in_gamma_q(params, i, j) : in_gamma_l(params, i, j);
}

IndexSet gamma_q(const LissajousParams& params) {
  IndexSet set{IndexSet::Kind::quadrature, params, {}};
  for (int i = 0; i < 4 * (params.n + params.p); ++i) {
    for (int j = 0; j < 4 * params.n; ++j) {
      if (in_gamma_q(params, i, j)) set.pairs.push_back({i, j});
    }
  }
  return set;
}

IndexSet gamma_l(const LissajousParams& params) {
  IndexSet set{IndexSet::Kind::interpolation, params, {}};
  for (int i = 0; i < params.coeff_rows(); ++i) {
    for (int j = 0; j < params.coeff_cols(); ++j) {
      if (in_gamma_l(params, i, j)) set.pairs.push_back({i, j});
    }
  }
  return set;
}

std::vector<int> gamma_l_row_max(const LissajousParams& params) {
  std::vector<int> row_max(static_cast<std::size_t>(params.coeff_rows()), -1);
  for (int i = 0; i < params.coeff_rows(); ++i) {
    for (int j = params.coeff_cols() - 1; j >= 0; --j) {
      if (in_gamma_l(params, i, j)) {
        row_max[static_cast<std::size_t>(i)] = j;
        break;
      }
    }
  }
  return row_max;
}

Mask build_mask(const LissajousParams& params) {
  Mask mask{params, Eigen::MatrixXd::Zero(params.coeff_rows(), params.coeff_cols())};
  for (int i = 0; i < params.coeff_rows(); ++i) {
    for (int j = 0; j < params.coeff_cols(); ++j) {
      if (in_gamma_l(params, i, j)) mask.entries(i, j) = 1.0;
    }
  }
  mask.entries(0, 2 * params.n) = 0.5;
  return mask;
}

}  // namespace lissa
