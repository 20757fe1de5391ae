#pragma once

#include <span>
#include <vector>

#include "lissa/params.hpp"

namespace lissa {

/// Inputs may overshoot [-1, 1] by at most this much before cheb_t reports a
/// domain error; overshoot within the slack is clamped.
inline constexpr double cheb_domain_slack = 1e-12;

/// Chebyshev polynomial T_i(x) by the three-term recurrence.
double cheb_t(int i, double x);

/// Normalized Chebyshev polynomial: That_0 = 1, That_i = sqrt(2) T_i for i >= 1.
double cheb_that(int i, double x);

enum class Axis { x, y };

/// Basis values [That_0(c), ..., That_{d-1}(c)] with d = 2(n+p) on the x axis
/// and d = 2n+1 on the y axis.
std::vector<double> cheb_vector(Axis axis, const LissajousParams& params, double coord);

/// sum_i coeffs[i] * That_i(x) by Clenshaw's recurrence.
double clenshaw_that(std::span<const double> coeffs, double x);

}  // namespace lissa
