#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include <Eigen/Core>

#include "lissa/chebyshev.hpp"
#include "lissa/error.hpp"
#include "lissa/index_set.hpp"
#include "lissa/interpolation.hpp"
#include "lissa/nodes.hpp"
#include "lissa/params.hpp"

using namespace lissa;

namespace {

// (1/pi^2) iint f w dx dy by tensor Gauss-Chebyshev, exact for polynomial
// degree < 2M per axis.
double gauss_chebyshev_2d(const std::function<double(double, double)>& f, int m = 64) {
  double sum = 0.0;
  for (int k = 1; k <= m; ++k) {
    const double x = std::cos((2.0 * k - 1.0) * std::numbers::pi / (2.0 * m));
    for (int l = 1; l <= m; ++l) {
      const double y = std::cos((2.0 * l - 1.0) * std::numbers::pi / (2.0 * m));
      sum += f(x, y);
    }
  }
  return sum / (static_cast<double>(m) * m);
}

CoefficientMatrix random_coefficients(const LissajousParams& params, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  CoefficientMatrix coeffs{params,
                           Eigen::MatrixXd::Zero(params.coeff_rows(), params.coeff_cols())};
  for (const IndexPair& pair : gamma_l(params).pairs) {
    coeffs.entries(pair.i, pair.j) = dist(rng);
  }
  return coeffs;
}

}  // namespace

TEST_CASE("kernel is symmetric with a known value at the origin") {
  const LissajousParams params = validate_params(2, 1);
  const LKernel kernel(params);
  CHECK(kernel(Point2{0.0, 0.0}, Point2{0.0, 0.0}) == doctest::Approx(13.0).epsilon(1e-13));
  const Point2 a{0.37, -0.81};
  const Point2 b{-0.95, 0.12};
  CHECK(kernel(a, b) == doctest::Approx(kernel(b, a)).epsilon(1e-13));
  CHECK(kernel.row_max() == gamma_l_row_max(params));
}

TEST_CASE("kernel reproduces the interpolation space") {
  const LissajousParams params = validate_params(2, 1);
  const LKernel kernel(params);
  const std::vector<IndexPair> degrees = {{0, 0}, {1, 1}, {2, 1}, {0, 4}, {4, 1}, {5, 0}};
  const std::vector<Point2> points = {{0.0, 0.0}, {0.3, -0.7}, {1.0, 1.0}, {-0.62, 0.44}};
  for (const IndexPair& d : degrees) {
    REQUIRE(in_gamma_l(params, d.i, d.j));
    for (const Point2& b : points) {
      const double projected = gauss_chebyshev_2d([&](double x, double y) {
        return cheb_that(d.i, x) * cheb_that(d.j, y) * kernel(Point2{x, y}, b);
      });
      CHECK(std::abs(projected - cheb_that(d.i, b.x) * cheb_that(d.j, b.y)) <= 1e-10);
    }
  }
}

TEST_CASE("lagrange basis is a delta on the nodes") {
  for (auto [n, p] : {std::pair{2, 1}, {2, 3}}) {
    const LissajousParams params = validate_params(n, p);
    const NodeSet nodes = build_node_set(params);
    const LKernel kernel(params);
    for (std::size_t a = 0; a < nodes.nodes.size(); ++a) {
      for (std::size_t b = 0; b < nodes.nodes.size(); ++b) {
        const double value = lagrange_basis(nodes, kernel, static_cast<int>(a),
                                            nodes.nodes[b].x, nodes.nodes[b].y);
        CHECK(std::abs(value - (a == b ? 1.0 : 0.0)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("constants interpolate to the constant coefficient") {
  const NodeSet nodes = build_node_set(validate_params(3, 1));
  const SampleVector samples = sample_function(nodes, [](double, double) { return 1.0; });
  const CoefficientMatrix coeffs = interpolate(nodes, samples);
  CHECK(coeffs.entries(0, 0) == doctest::Approx(1.0).epsilon(1e-13));
  CHECK((coeffs.entries.cwiseAbs().sum() - std::abs(coeffs.entries(0, 0))) <= 1e-12);
  for (double x : {-1.0, -0.3, 0.5}) {
    CHECK(evaluate(coeffs, x, 0.25) == doctest::Approx(1.0).epsilon(1e-13));
  }
}

TEST_CASE("a pure product mode interpolates to a unit coefficient") {
  const NodeSet nodes = build_node_set(validate_params(2, 1));
  const SampleVector samples =
      sample_function(nodes, [](double x, double y) { return 2.0 * x * y; });
  const CoefficientMatrix coeffs = interpolate(nodes, samples);
  for (int i = 0; i < coeffs.entries.rows(); ++i) {
    for (int j = 0; j < coeffs.entries.cols(); ++j) {
      const double expected = (i == 1 && j == 1) ? 1.0 : 0.0;
      CHECK(std::abs(coeffs.entries(i, j) - expected) <= 1e-13);
    }
  }
}

TEST_CASE("coefficients match the direct masked node sums") {
  const LissajousParams params = validate_params(2, 3);
  const NodeSet nodes = build_node_set(params);
  const SampleVector samples = sample_function(
      nodes, [](double x, double y) { return std::sin(3.0 * x - 1.0) * std::exp(y); });
  const CoefficientMatrix coeffs = interpolate(nodes, samples);
  const Mask mask = build_mask(params);
  for (int i = 0; i < coeffs.entries.rows(); ++i) {
    for (int j = 0; j < coeffs.entries.cols(); ++j) {
      double direct = 0.0;
      for (std::size_t a = 0; a < nodes.nodes.size(); ++a) {
        const Node& node = nodes.nodes[a];
        direct += node.weight * samples.values(static_cast<Eigen::Index>(a)) *
                  cheb_that(i, node.x) * cheb_that(j, node.y);
      }
      direct *= mask.entries(i, j);
      CHECK(std::abs(coeffs.entries(i, j) - direct) <= 1e-12);
    }
  }
}

TEST_CASE("seeded polynomials from the interpolation space round trip") {
  for (auto [n, p] : {std::pair{2, 1}, {2, 3}}) {
    const LissajousParams params = validate_params(n, p);
    const NodeSet nodes = build_node_set(params);
    for (unsigned seed : {11u, 59u, 2026u}) {
      const CoefficientMatrix truth = random_coefficients(params, seed);
      const SampleVector samples = sample_function(
          nodes, [&](double x, double y) { return evaluate(truth, x, y); });
      const CoefficientMatrix back = interpolate(nodes, samples);
      CHECK((back.entries - truth.entries).cwiseAbs().maxCoeff() <= 1e-12);
      std::mt19937_64 rng(seed + 7);
      std::uniform_real_distribution<double> dist(-1.0, 1.0);
      for (int trial = 0; trial < 25; ++trial) {
        const double x = dist(rng);
        const double y = dist(rng);
        CHECK(std::abs(evaluate(back, x, y) - evaluate(truth, x, y)) <= 1e-10);
      }
    }
  }
}

TEST_CASE("coefficient evaluation equals the Lagrange sum") {
  const LissajousParams params = validate_params(3, 1);
  const NodeSet nodes = build_node_set(params);
  const LKernel kernel(params);
  const SampleVector samples = sample_function(
      nodes, [](double x, double y) { return std::cos(2.0 * x + y) + x * y * y; });
  const CoefficientMatrix coeffs = interpolate(nodes, samples);
  for (double x : {-0.9, -0.25, 0.0, 0.4, 1.0}) {
    for (double y : {-1.0, -0.5, 0.1, 0.75}) {
      double lagrange_sum = 0.0;
      for (std::size_t a = 0; a < nodes.nodes.size(); ++a) {
        lagrange_sum += samples.values(static_cast<Eigen::Index>(a)) *
                        lagrange_basis(nodes, kernel, static_cast<int>(a), x, y);
      }
      CHECK(std::abs(evaluate(coeffs, x, y) - lagrange_sum) <= 1e-10);
    }
  }
}

TEST_CASE("trig_basis_e is the Chebyshev product along the curve") {
  const LissajousParams params = validate_params(2, 3);
  CHECK(trig_basis_e(params, 0, 0, 0.77) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(trig_basis_e(params, 1, 0, 0.3) ==
        doctest::Approx(std::sqrt(2.0) * std::sin(2.0 * 0.3)).epsilon(1e-13));
  CHECK(trig_basis_e(params, 0, 1, 0.3) ==
        doctest::Approx(std::sqrt(2.0) * std::sin(5.0 * 0.3)).epsilon(1e-13));
  for (const IndexPair& pair : gamma_l(params).pairs) {
    for (int step = 0; step < 17; ++step) {
      const double t = 2.0 * std::numbers::pi * step / 17.0;
      const Point2 pt = curve_point(params, t);
      CHECK(std::abs(trig_basis_e(params, pair.i, pair.j, t) -
                     cheb_that(pair.i, pt.x) * cheb_that(pair.j, pt.y)) <= 1e-11);
    }
  }
}

TEST_CASE("trig_basis_e rejects degrees outside the interpolation set") {
  const LissajousParams params = validate_params(2, 1);
  try {
    trig_basis_e(params, 5, 4, 0.1);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::index_not_in_gamma_l);
  }
  CHECK_THROWS_AS(trig_basis_e(params, 6, 0, 0.1), Error);
  CHECK_THROWS_AS(trig_basis_e(params, 0, 5, 0.1), Error);
}

TEST_CASE("trig basis is discretely orthonormal except the top alias") {
  const LissajousParams params = validate_params(2, 1);
  const std::vector<double> times = sample_times(params);
  const std::vector<IndexPair>& pairs = gamma_l(params).pairs;
  for (std::size_t a = 0; a < pairs.size(); ++a) {
    for (std::size_t b = a; b < pairs.size(); ++b) {
      double inner = 0.0;
      for (double t : times) {
        inner += trig_basis_e(params, pairs[a].i, pairs[a].j, t) *
                 trig_basis_e(params, pairs[b].i, pairs[b].j, t);
      }
      inner /= static_cast<double>(times.size());
      double expected = a == b ? 1.0 : 0.0;
      if (a == b && pairs[a].i == 0 && pairs[a].j == 2 * params.n) expected = 2.0;
      CAPTURE(pairs[a].i);
      CAPTURE(pairs[a].j);
      CAPTURE(pairs[b].i);
      CAPTURE(pairs[b].j);
      CHECK(std::abs(inner - expected) <= 1e-11);
    }
  }
}

TEST_CASE("dirichlet kernel interpolates the sample times") {
  const LissajousParams params = validate_params(2, 1);
  CHECK(dirichlet_kernel(params, 0.0) == 1.0);
  CHECK(dirichlet_kernel(params, 1e-13) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(dirichlet_kernel(params, 2.0 * std::numbers::pi) == doctest::Approx(1.0).epsilon(1e-9));
  for (int k = 1; k < params.sample_count(); ++k) {
    CHECK(std::abs(dirichlet_kernel(params, sample_time(params, k))) <= 1e-12);
  }
  for (double t : {0.17, 1.3, 2.9}) {
    CHECK(dirichlet_kernel(params, t + 2.0 * std::numbers::pi) ==
          doctest::Approx(dirichlet_kernel(params, t)).epsilon(1e-11));
  }
}

TEST_CASE("dirichlet lagrange matches the kernel lagrange along the curve") {
  const LissajousParams params = validate_params(2, 1);
  const NodeSet nodes = build_node_set(params);
  const LKernel kernel(params);
  for (int step = 0; step < 101; ++step) {
    const double t = 2.0 * std::numbers::pi * step / 101.0 + 0.013;
    const Point2 pt = curve_point(params, t);
    for (std::size_t a = 0; a < nodes.nodes.size(); ++a) {
      CHECK(std::abs(dirichlet_lagrange(nodes, static_cast<int>(a), t) -
                     lagrange_basis(nodes, kernel, static_cast<int>(a), pt.x, pt.y)) <= 1e-9);
    }
  }
}

TEST_CASE("reduce_curve_samples folds exact curve values") {
  const LissajousParams params = validate_params(2, 3);
  const NodeSet nodes = build_node_set(params);
  const auto f = [](double x, double y) { return std::exp(x - 0.5 * y); };
  std::vector<double> curve_values(static_cast<std::size_t>(params.sample_count()));
  for (int k = 1; k <= params.sample_count(); ++k) {
    const Point2 pt = curve_point(params, sample_time(params, k));
    curve_values[static_cast<std::size_t>(k - 1)] = f(pt.x, pt.y);
  }
  const ReducedSamples reduced = reduce_curve_samples(nodes, curve_values, 1e-9);
  CHECK(reduced.mismatch_count == 0);
  CHECK(reduced.max_mismatch <= 1e-9);
  const SampleVector direct = sample_function(nodes, f);
  CHECK((reduced.samples.values - direct.values).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("reduce_curve_samples counts disagreements within the slack") {
  const LissajousParams params = validate_params(2, 1);
  const NodeSet nodes = build_node_set(params);
  std::vector<double> curve_values(static_cast<std::size_t>(params.sample_count()), 1.0);

  std::size_t interior = 0;
  while (nodes.nodes[interior].location != NodeLocation::interior) ++interior;
  const int k = nodes.nodes[interior].sample_indices[0];
  curve_values[static_cast<std::size_t>(k - 1)] = 1.0 + 1e-6;

  const ReducedSamples reduced = reduce_curve_samples(nodes, curve_values, 1e-3);
  CHECK(reduced.mismatch_count == 1);
  CHECK(reduced.max_mismatch == doctest::Approx(1e-6).epsilon(1e-9));
  CHECK(reduced.samples.values(static_cast<Eigen::Index>(interior)) ==
        doctest::Approx(1.0 + 5e-7).epsilon(1e-12));

  curve_values[static_cast<std::size_t>(k - 1)] = 1.0 + 2e-3;
  try {
    reduce_curve_samples(nodes, curve_values, 1e-3);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::inconsistent_samples);
  }
}

TEST_CASE("reduce_curve_samples rejects the wrong sample count") {
  const NodeSet nodes = build_node_set(validate_params(2, 1));
  const std::vector<double> short_values(10, 0.0);
  try {
    reduce_curve_samples(nodes, short_values, 1e-9);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::length_mismatch);
  }
}
