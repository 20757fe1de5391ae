#pragma once

#include <vector>

#include <Eigen/Core>

#include "lissa/params.hpp"

namespace lissa {

struct IndexPair {
  int i = 0;
  int j = 0;

  friend bool operator==(IndexPair a, IndexPair b) { return a.i == b.i && a.j == b.j; }
};

/// Membership predicates, exact integer arithmetic only.
/// Gamma^Q(n,p) = {i+j <= 4n-1} plus the slabs i+j = 4n+m, 0 <= m <= 4p-1, with
/// j*p < n*(4p-m); equivalently i*n + j*(n+p) < 4n(n+p).
bool in_gamma_q(const LissajousParams& params, long long i, long long j);
/// Gamma^L(n,p) = {i+j <= 2n} plus the slabs i+j = 2n+m, 1 <= m <= 2p-1, with
/// j*p < n*(2p-m).
bool in_gamma_l(const LissajousParams& params, long long i, long long j);

/// Exponent index set spanning the quadrature space (kind quadrature) or the
/// interpolation space (kind interpolation).
struct IndexSet {
  enum class Kind { quadrature, interpolation };

  Kind kind = Kind::quadrature;
  LissajousParams params;
  std::vector<IndexPair> pairs;  // enumerated lexicographically by (i, j)

  [[nodiscard]] bool contains(int i, int j) const;
};

IndexSet gamma_q(const LissajousParams& params);
IndexSet gamma_l(const LissajousParams& params);

/// row_max[i] = largest j with (i, j) in Gamma^L, for i in [0, 2(n+p)).
/// Rows of Gamma^L are contiguous: (i, j) is a member iff 0 <= j <= row_max[i].
std::vector<int> gamma_l_row_max(const LissajousParams& params);

/// Interpolation mask over x-degrees i (rows) and y-degrees j (columns):
/// 1 on Gamma^L except 1/2 at (0, 2n), 0 outside.
struct Mask {
  LissajousParams params;
  Eigen::MatrixXd entries;  // 2(n+p) x (2n+1)
};

Mask build_mask(const LissajousParams& params);

}  // namespace lissa
