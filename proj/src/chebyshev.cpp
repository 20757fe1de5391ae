#include "lissa/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lissa/error.hpp"

namespace lissa {

namespace {

double clamp_to_domain(double x) {
  if (std::abs(x) > 1.0 + cheb_domain_slack) {
    fail(Errc::domain_error, "argument " + std::to_string(x) + " outside [-1, 1]");
  }
  return std::clamp(x, -1.0, 1.0);
}

}  // namespace

double cheb_t(int i, double x) {
  x = clamp_to_domain(x);
  if (i == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int k = 1; k < i; ++k) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double cheb_that(int i, double x) {
  const double t = cheb_t(i, x);
  return i == 0 ? t : std::numbers::sqrt2 * t;
}

std::vector<double> cheb_vector(Axis axis, const LissajousParams& params, double coord) {
  coord = clamp_to_domain(coord);
  const int len = axis == Axis::x ? params.coeff_rows() : params.coeff_cols();
  std::vector<double> values(static_cast<std::size_t>(len));
  values[0] = 1.0;
  if (len == 1) return values;
  values[1] = std::numbers::sqrt2 * coord;
  double prev = 1.0;
  double cur = coord;
  for (int k = 2; k < len; ++k) {
    const double next = 2.0 * coord * cur - prev;
    prev = cur;
    cur = next;
    values[static_cast<std::size_t>(k)] = std::numbers::sqrt2 * next;
  }
  return values;
}

double clenshaw_that(std::span<const double> coeffs, double x) {
  x = clamp_to_domain(x);
  if (coeffs.empty()) return 0.0;
  double b1 = 0.0;
  double b2 = 0.0;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 1; --k) {
    const double bk = std::numbers::sqrt2 * coeffs[static_cast<std::size_t>(k)] +
                      2.0 * x * b1 - b2;
    b2 = b1;
    b1 = bk;
  }
  return coeffs[0] + x * b1 - b2;
}

}  // namespace lissa
