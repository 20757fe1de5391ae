#include "lissa/nodes.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lissa/error.hpp"

namespace lissa {

namespace {

constexpr double pi = std::numbers::pi;

// Nearest Gauss-Lobatto index for a coordinate, or -1 if the coordinate is not
// within node_match_tol of that lattice point.
int lattice_index(double coord, int m) {
  const double theta = std::acos(std::clamp(coord, -1.0, 1.0));
  const int k = static_cast<int>(std::lround(theta * m / pi));
  if (std::abs(gauss_lobatto(k, m) - coord) > node_match_tol) return -1;
  return k;
}

}  // namespace

double gauss_lobatto(int k, int m) {
  int r = k % (2 * m);
  if (r < 0) r += 2 * m;
  if (r > m) r = 2 * m - r;
  if (r == 0) return 1.0;
  if (r == m) return -1.0;
  return std::cos(r * pi / m);
}

Point2 curve_point(const LissajousParams& params, double t) {
  return {std::sin(params.n * t), std::sin((params.n + params.p) * t)};
}

double sample_time(const LissajousParams& params, int k) {
  return 2.0 * pi * k / params.sample_count();
}

std::vector<double> sample_times(const LissajousParams& params) {
  std::vector<double> times(static_cast<std::size_t>(params.sample_count()));
  for (int k = 1; k <= params.sample_count(); ++k) {
    times[static_cast<std::size_t>(k - 1)] = sample_time(params, k);
  }
  return times;
}

NodeSet build_node_set(const LissajousParams& params) {
  const int n = params.n;
  const int p = params.p;
  const double w_boundary = 1.0 / params.sample_count();
  const double w_interior = 2.0 / params.sample_count();

  NodeSet set;
  set.params = params;
  set.nodes.reserve(static_cast<std::size_t>(params.node_count()));

  set.black_x.resize(static_cast<std::size_t>(n + p));
  for (int gi = 0; gi < n + p; ++gi) {
    set.black_x[static_cast<std::size_t>(gi)] = gauss_lobatto(2 * gi + 1, 2 * (n + p));
  }
  set.black_y.resize(static_cast<std::size_t>(n + 1));
  for (int gj = 0; gj <= n; ++gj) {
    set.black_y[static_cast<std::size_t>(gj)] = gauss_lobatto(2 * gj, 2 * n);
  }
  set.white_x.resize(static_cast<std::size_t>(n + p + 1));
  for (int gi = 0; gi <= n + p; ++gi) {
    set.white_x[static_cast<std::size_t>(gi)] = gauss_lobatto(2 * gi, 2 * (n + p));
  }
  set.white_y.resize(static_cast<std::size_t>(n));
  for (int gj = 0; gj < n; ++gj) {
    set.white_y[static_cast<std::size_t>(gj)] = gauss_lobatto(2 * gj + 1, 2 * n);
  }

  for (int gi = 0; gi < n + p; ++gi) {
    for (int gj = 0; gj <= n; ++gj) {
      Node node;
      node.x = set.black_x[static_cast<std::size_t>(gi)];
      node.y = set.black_y[static_cast<std::size_t>(gj)];
      node.color = NodeColor::black;
      node.location = (gj == 0 || gj == n) ? NodeLocation::boundary : NodeLocation::interior;
      node.weight = node.location == NodeLocation::boundary ? w_boundary : w_interior;
      node.grid_index = {gi, gj};
      set.nodes.push_back(std::move(node));
    }
  }
  for (int gi = 0; gi <= n + p; ++gi) {
    for (int gj = 0; gj < n; ++gj) {
      Node node;
      node.x = set.white_x[static_cast<std::size_t>(gi)];
      node.y = set.white_y[static_cast<std::size_t>(gj)];
      node.color = NodeColor::white;
      node.location =
          (gi == 0 || gi == n + p) ? NodeLocation::boundary : NodeLocation::interior;
      node.weight = node.location == NodeLocation::boundary ? w_boundary : w_interior;
      node.grid_index = {gi, gj};
      set.nodes.push_back(std::move(node));
    }
  }

  for (int k = 1; k <= params.sample_count(); ++k) {
    const Point2 pt = curve_point(params, sample_time(params, k));
    const int ix = lattice_index(pt.x, 2 * (n + p));
    const int iy = lattice_index(pt.y, 2 * n);
    if (ix < 0 || iy < 0) {
      fail(Errc::ambiguous_match,
           "curve sample k=" + std::to_string(k) + " matches no node within tolerance");
    }
    int node_index = -1;
    if (ix % 2 == 1 && iy % 2 == 0) {
      node_index = set.black_index((ix - 1) / 2, iy / 2);
    } else if (ix % 2 == 0 && iy % 2 == 1) {
      node_index = set.white_index(ix / 2, (iy - 1) / 2);
    } else {
      fail(Errc::ambiguous_match,
           "curve sample k=" + std::to_string(k) + " falls on both node lattices");
    }
    set.nodes[static_cast<std::size_t>(node_index)].sample_indices.push_back(k);
  }

  for (std::size_t a = 0; a < set.nodes.size(); ++a) {
    const Node& node = set.nodes[a];
    const std::size_t expected = node.location == NodeLocation::interior ? 2 : 1;
    if (node.sample_indices.size() != expected) {
      fail(Errc::ambiguous_match,
           "node " + std::to_string(a) + " collected " +
               std::to_string(node.sample_indices.size()) + " curve samples, expected " +
               std::to_string(expected));
    }
  }

  return set;
}

std::vector<int> equivalence_classes(const NodeSet& nodes) {
  std::vector<int> classes(static_cast<std::size_t>(nodes.params.sample_count()), -1);
  for (std::size_t a = 0; a < nodes.nodes.size(); ++a) {
    for (const int k : nodes.nodes[a].sample_indices) {
      classes[static_cast<std::size_t>(k - 1)] = static_cast<int>(a);
    }
  }
  return classes;
}

std::vector<Point2> padua_points(int n) {
  std::vector<Point2> points;
  points.reserve(static_cast<std::size_t>((n + 1) * (2 * n + 1)));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      points.push_back({gauss_lobatto(2 * i + 1, 2 * n + 1), gauss_lobatto(2 * j, 2 * n)});
    }
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j < n; ++j) {
      points.push_back({gauss_lobatto(2 * i, 2 * n + 1), gauss_lobatto(2 * j + 1, 2 * n)});
    }
  }
  return points;
}

std::vector<Point2> xu_points_odd(int n) {
  std::vector<Point2> points;
  points.reserve(static_cast<std::size_t>(2 * (n + 1) * (n + 1)));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      points.push_back({gauss_lobatto(2 * i, 2 * n + 1), gauss_lobatto(2 * j, 2 * n + 1)});
    }
  }
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      points.push_back(
          {gauss_lobatto(2 * i + 1, 2 * n + 1), gauss_lobatto(2 * j + 1, 2 * n + 1)});
    }
  }
  return points;
}

}  // namespace lissa
