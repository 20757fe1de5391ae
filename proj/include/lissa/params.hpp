#pragma once

namespace lissa {

/// Frequency parameters (n, n+p) of the Lissajous curve
/// gamma(t) = (sin(n t), sin((n+p) t)), with p odd and gcd(n, n+p) = 1 so the
/// curve is non-degenerate.
struct LissajousParams {
  int n = 0;
  int p = 0;

  /// Number of curve samples, 4n(n+p).
  [[nodiscard]] int sample_count() const { return 4 * n * (n + p); }
  /// Number of distinct curve points, 2n(n+p) + 2n + p.
  [[nodiscard]] int node_count() const { return 2 * n * (n + p) + 2 * n + p; }
  [[nodiscard]] int black_count() const { return (n + 1) * (n + p); }
  [[nodiscard]] int white_count() const { return n * (n + p + 1); }
  [[nodiscard]] int interior_count() const { return 2 * n * (n + p) - 2 * n - p; }
  [[nodiscard]] int boundary_count() const { return 4 * n + 2 * p; }
  /// Row count of coefficient matrices: x-degrees 0 .. 2(n+p)-1.
  [[nodiscard]] int coeff_rows() const { return 2 * (n + p); }
  /// Column count of coefficient matrices: y-degrees 0 .. 2n.
  [[nodiscard]] int coeff_cols() const { return 2 * n + 1; }
};

/// Checks n >= 1, p >= 1, p odd, gcd(n, n+p) = 1. Throws Error otherwise.
LissajousParams validate_params(int n, int p);

}  // namespace lissa
