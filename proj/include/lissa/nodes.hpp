#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "lissa/params.hpp"

namespace lissa {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

/// Gauss-Lobatto point z_k^m = cos(k pi / m), exact +-1.0 at k = 0 and k = m
/// (modulo the 2m-periodicity of the index).
double gauss_lobatto(int k, int m);

/// Curve point gamma(t) = (sin(n t), sin((n+p) t)).
Point2 curve_point(const LissajousParams& params, double t);

/// Sample time t_k = 2 pi k / (4n(n+p)), k in [1, 4n(n+p)].
double sample_time(const LissajousParams& params, int k);
std::vector<double> sample_times(const LissajousParams& params);

/// Absolute per-coordinate tolerance for matching curve samples to nodes.
inline constexpr double node_match_tol = 1e-9;

enum class NodeColor : std::uint8_t { black, white };
enum class NodeLocation : std::uint8_t { interior, boundary };

struct Node {
  double x = 0.0;
  double y = 0.0;
  NodeColor color = NodeColor::black;
  NodeLocation location = NodeLocation::interior;
  double weight = 0.0;              // 2/(4n(n+p)) interior, 1/(4n(n+p)) boundary
  std::array<int, 2> grid_index{};  // (i', j') within the color's tensor grid
  std::vector<int> sample_indices;  // k with gamma(t_k) = node; 2 interior, 1 boundary
};

/// The distinct points of the sampled Lissajous curve, in canonical order:
/// black nodes first, then white, each block lexicographic in (i', j').
/// Black: (z^{2(n+p)}_{2i'+1}, z^{2n}_{2j'}), i' in [0, n+p), j' in [0, n];
/// boundary when j' is 0 or n. White: (z^{2(n+p)}_{2i'}, z^{2n}_{2j'+1}),
/// i' in [0, n+p], j' in [0, n); boundary when i' is 0 or n+p.
struct NodeSet {
  LissajousParams params;
  std::vector<Node> nodes;
  std::vector<double> black_x, black_y;  // tensor axes, sizes (n+p) and (n+1)
  std::vector<double> white_x, white_y;  // sizes (n+p+1) and n

  [[nodiscard]] int black_count() const { return params.black_count(); }
  [[nodiscard]] int white_count() const { return params.white_count(); }
  [[nodiscard]] int black_index(int gi, int gj) const { return gi * (params.n + 1) + gj; }
  [[nodiscard]] int white_index(int gi, int gj) const {
    return black_count() + gi * params.n + gj;
  }
};

/// Builds the nodes with weights, locations, and curve-sample equivalence
/// classes (each gamma(t_k) matched to its node within node_match_tol).
NodeSet build_node_set(const LissajousParams& params);

/// result[k-1] = index of the node gamma(t_k) lands on, k in [1, 4n(n+p)].
std::vector<int> equivalence_classes(const NodeSet& nodes);

/// Padua points of even degree 2n: (z^{2n+1}_{2i+1}, z^{2n}_{2j}) for
/// 0 <= i <= n, 0 <= j <= n, plus (z^{2n+1}_{2i}, z^{2n}_{2j+1}) for
/// 0 <= i <= n, 0 <= j <= n-1; (n+1)(2n+1) points.
std::vector<Point2> padua_points(int n);

/// Xu points of odd degree 2n+1: (z^{2n+1}_{2i}, z^{2n+1}_{2j}) and
/// (z^{2n+1}_{2i+1}, z^{2n+1}_{2j+1}) for 0 <= i, j <= n; 2(n+1)^2 points.
std::vector<Point2> xu_points_odd(int n);

}  // namespace lissa
