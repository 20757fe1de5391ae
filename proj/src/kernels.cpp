#include "lissa/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lissa/chebyshev.hpp"

namespace lissa {

namespace {

// Basis tables over the node tensor axes, row-major [axis_index][degree] for
// the x tables and [degree][axis_index] for the transposed y tables, so the
// innermost loops below run over contiguous memory.
struct ScanTables {
  int rows = 0;  // x-degrees, 2(n+p)
  int cols = 0;  // y-degrees, 2n+1
  int nbx = 0, nby = 0, nwx = 0, nwy = 0;
  std::vector<double> ub, uw;        // [a][i], sizes nbx*rows and nwx*rows
  std::vector<double> vbt, vwt;      // [j][b], sizes cols*nby and cols*nwy
  std::vector<double> wb, ww;        // black weight by j' (nby), white by i' (nwx)
  std::vector<int> row_max;          // contiguous row extents of Gamma^L
};

ScanTables make_tables(const NodeSet& nodes) {
  const LissajousParams& params = nodes.params;
  ScanTables t;
  t.rows = params.coeff_rows();
  t.cols = params.coeff_cols();
  t.nbx = static_cast<int>(nodes.black_x.size());
  t.nby = static_cast<int>(nodes.black_y.size());
  t.nwx = static_cast<int>(nodes.white_x.size());
  t.nwy = static_cast<int>(nodes.white_y.size());
  t.row_max = gamma_l_row_max(params);

  const auto fill_x = [&](const std::vector<double>& axis, std::vector<double>& out) {
    out.resize(axis.size() * static_cast<std::size_t>(t.rows));
    for (std::size_t a = 0; a < axis.size(); ++a) {
      const std::vector<double> v = cheb_vector(Axis::x, params, axis[a]);
      std::copy(v.begin(), v.end(), out.begin() + static_cast<std::ptrdiff_t>(a * v.size()));
    }
  };
  const auto fill_yt = [&](const std::vector<double>& axis, std::vector<double>& out) {
    out.resize(axis.size() * static_cast<std::size_t>(t.cols));
    for (std::size_t b = 0; b < axis.size(); ++b) {
      const std::vector<double> v = cheb_vector(Axis::y, params, axis[b]);
      for (int j = 0; j < t.cols; ++j) {
        out[static_cast<std::size_t>(j) * axis.size() + b] = v[static_cast<std::size_t>(j)];
      }
    }
  };
  fill_x(nodes.black_x, t.ub);
  fill_x(nodes.white_x, t.uw);
  fill_yt(nodes.black_y, t.vbt);
  fill_yt(nodes.white_y, t.vwt);

  const double w_boundary = 1.0 / params.sample_count();
  const double w_interior = 2.0 / params.sample_count();
  t.wb.resize(static_cast<std::size_t>(t.nby), w_interior);
  t.wb.front() = w_boundary;
  t.wb.back() = w_boundary;
  t.ww.resize(static_cast<std::size_t>(t.nwx), w_interior);
  t.ww.front() = w_boundary;
  t.ww.back() = w_boundary;
  return t;
}

// r[i][b] = sum_j mask(i, j) gy[j] vt[j][b]; the mask is 1 on Gamma^L rows
// except 1/2 at (0, 2n), so the j loop runs over the contiguous row extent.
void build_r(const ScanTables& t, const double* gy, const std::vector<double>& vt, int nb,
             int top_j, std::vector<double>& r) {
  r.assign(static_cast<std::size_t>(t.rows) * static_cast<std::size_t>(nb), 0.0);
  for (int i = 0; i < t.rows; ++i) {
    double* row = r.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(nb);
    for (int j = 0; j <= t.row_max[static_cast<std::size_t>(i)]; ++j) {
      const double f = gy[j] * ((i == 0 && j == top_j) ? 0.5 : 1.0);
      const double* vrow = vt.data() + static_cast<std::size_t>(j) * static_cast<std::size_t>(nb);
      for (int b = 0; b < nb; ++b) row[b] += f * vrow[b];
    }
  }
}

// acc[b] = sum_i u[a][i] gx[i] r[i][b] for one tensor row a.
void accumulate_row(const double* u_row, const double* gx, const std::vector<double>& r,
                    int rows, int nb, double* acc) {
  std::fill(acc, acc + nb, 0.0);
  for (int i = 0; i < rows; ++i) {
    const double f = u_row[i] * gx[i];
    const double* rrow = r.data() + static_cast<std::size_t>(i) * static_cast<std::size_t>(nb);
    for (int b = 0; b < nb; ++b) acc[b] += f * rrow[b];
  }
}

// Lagrange values of every node at one point, given the per-point x basis gx
// and the per-point reductions rb/rw; out is in canonical node order.
void point_lagrange_values(const ScanTables& t, const double* gx,
                           const std::vector<double>& rb, const std::vector<double>& rw,
                           double* out) {
  for (int a = 0; a < t.nbx; ++a) {
    double* acc = out + static_cast<std::size_t>(a) * static_cast<std::size_t>(t.nby);
    accumulate_row(t.ub.data() + static_cast<std::size_t>(a) * static_cast<std::size_t>(t.rows),
                   gx, rb, t.rows, t.nby, acc);
    for (int b = 0; b < t.nby; ++b) acc[b] *= t.wb[static_cast<std::size_t>(b)];
  }
  double* white = out + static_cast<std::size_t>(t.nbx) * static_cast<std::size_t>(t.nby);
  for (int a = 0; a < t.nwx; ++a) {
    double* acc = white + static_cast<std::size_t>(a) * static_cast<std::size_t>(t.nwy);
    accumulate_row(t.uw.data() + static_cast<std::size_t>(a) * static_cast<std::size_t>(t.rows),
                   gx, rw, t.rows, t.nwy, acc);
    const double w = t.ww[static_cast<std::size_t>(a)];
    for (int b = 0; b < t.nwy; ++b) acc[b] *= w;
  }
}

// sum_A |L_A| at one point, weights folded in.
double point_lebesgue(const ScanTables& t, const double* gx, const std::vector<double>& rb,
                      const std::vector<double>& rw, std::vector<double>& acc) {
  double lambda = 0.0;
  for (int a = 0; a < t.nbx; ++a) {
    accumulate_row(t.ub.data() + static_cast<std::size_t>(a) * static_cast<std::size_t>(t.rows),
                   gx, rb, t.rows, t.nby, acc.data());
    for (int b = 0; b < t.nby; ++b) {
      lambda += t.wb[static_cast<std::size_t>(b)] * std::abs(acc[static_cast<std::size_t>(b)]);
    }
  }
  for (int a = 0; a < t.nwx; ++a) {
    accumulate_row(t.uw.data() + static_cast<std::size_t>(a) * static_cast<std::size_t>(t.rows),
                   gx, rw, t.rows, t.nwy, acc.data());
    double abs_sum = 0.0;
    for (int b = 0; b < t.nwy; ++b) abs_sum += std::abs(acc[static_cast<std::size_t>(b)]);
    lambda += t.ww[static_cast<std::size_t>(a)] * abs_sum;
  }
  return lambda;
}

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> values(static_cast<std::size_t>(count));
  if (count == 1) {
    values[0] = lo;
    return values;
  }
  const double step = (hi - lo) / (count - 1);
  for (int i = 0; i < count; ++i) values[static_cast<std::size_t>(i)] = lo + i * step;
  return values;
}

// Basis table over a list of coordinates, row-major [index][degree].
std::vector<double> basis_table(Axis axis, const LissajousParams& params,
                                std::span<const double> coords, int len) {
  std::vector<double> table(coords.size() * static_cast<std::size_t>(len));
  for (std::size_t a = 0; a < coords.size(); ++a) {
    const std::vector<double> v = cheb_vector(axis, params, coords[a]);
    std::copy(v.begin(), v.end(), table.begin() + static_cast<std::ptrdiff_t>(a * v.size()));
  }
  return table;
}

}  // namespace

int thread_count() {
  int count = 1;
#ifdef _OPENMP
  count = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("LISSA_THREADS")) {
    char* end = nullptr;
    const long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed >= 1 && parsed < count) {
      count = static_cast<int>(parsed);
    }
  }
  return count;
}

std::vector<double> GridSpec::xs() const { return linspace(x0, x1, nx); }
std::vector<double> GridSpec::ys() const { return linspace(y0, y1, ny); }

Eigen::MatrixXd evaluate_grid(const CoefficientMatrix& coeffs, std::span<const double> xs,
                              std::span<const double> ys) {
  const LissajousParams& params = coeffs.params;
  const int rows = params.coeff_rows();
  const int cols = params.coeff_cols();
  const std::vector<double> gx = basis_table(Axis::x, params, xs, rows);
  const std::vector<double> gy = basis_table(Axis::y, params, ys, cols);
  const int nx = static_cast<int>(xs.size());
  const int ny = static_cast<int>(ys.size());
  Eigen::MatrixXd out(nx, ny);
  const int threads = thread_count();
#pragma omp parallel for num_threads(threads) schedule(static)
  for (int a = 0; a < nx; ++a) {
    std::vector<double> z(static_cast<std::size_t>(cols), 0.0);
    const double* gxa = gx.data() + static_cast<std::size_t>(a) * static_cast<std::size_t>(rows);
    for (int j = 0; j < cols; ++j) {
      double sum = 0.0;
      for (int i = 0; i < rows; ++i) sum += gxa[i] * coeffs.entries(i, j);
      z[static_cast<std::size_t>(j)] = sum;
    }
    for (int b = 0; b < ny; ++b) {
      const double* gyb = gy.data() + static_cast<std::size_t>(b) * static_cast<std::size_t>(cols);
      double sum = 0.0;
      for (int j = 0; j < cols; ++j) sum += z[static_cast<std::size_t>(j)] * gyb[j];
      out(a, b) = sum;
    }
  }
  return out;
}

Eigen::MatrixXd evaluate_grid_reference(const CoefficientMatrix& coeffs,
                                        std::span<const double> xs,
                                        std::span<const double> ys) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(xs.size()), static_cast<Eigen::Index>(ys.size()));
  for (std::size_t a = 0; a < xs.size(); ++a) {
    for (std::size_t b = 0; b < ys.size(); ++b) {
      out(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
          evaluate(coeffs, xs[a], ys[b]);
    }
  }
  return out;
}

Eigen::MatrixXd delta_matrix(const NodeSet& nodes) {
  const ScanTables t = make_tables(nodes);
  const int count = static_cast<int>(nodes.nodes.size());
  Eigen::MatrixXd values(count, count);
  const int threads = thread_count();
#pragma omp parallel for num_threads(threads) schedule(static)
  for (int b = 0; b < count; ++b) {
    const Node& pt = nodes.nodes[static_cast<std::size_t>(b)];
    const std::vector<double> gx = cheb_vector(Axis::x, nodes.params, pt.x);
    const std::vector<double> gy = cheb_vector(Axis::y, nodes.params, pt.y);
    std::vector<double> rb, rw;
    build_r(t, gy.data(), t.vbt, t.nby, 2 * nodes.params.n, rb);
    build_r(t, gy.data(), t.vwt, t.nwy, 2 * nodes.params.n, rw);
    point_lagrange_values(t, gx.data(), rb, rw, values.col(b).data());
  }
  return values;
}

LebesgueRecord lebesgue_scan(const NodeSet& nodes, const GridSpec& grid) {
  const ScanTables t = make_tables(nodes);
  const LissajousParams& params = nodes.params;
  const std::vector<double> xs = grid.xs();
  const std::vector<double> ys = grid.ys();

  // The Lebesgue function is even in each coordinate, so for a grid symmetric
  // under negation only the closed positive quadrant needs scanning.
  const bool symmetric =
      std::abs(grid.x0 + grid.x1) < 1e-15 && std::abs(grid.y0 + grid.y1) < 1e-15;
  const int c0 = symmetric ? static_cast<int>(xs.size()) / 2 : 0;
  const int d0 = symmetric ? static_cast<int>(ys.size()) / 2 : 0;
  const int nx = static_cast<int>(xs.size());
  const int ny = static_cast<int>(ys.size());

  const std::vector<double> gx = basis_table(Axis::x, params, xs, t.rows);
  const std::vector<double> gy = basis_table(Axis::y, params, ys, t.cols);

  std::vector<double> row_best(static_cast<std::size_t>(ny), -1.0);
  std::vector<int> row_best_c(static_cast<std::size_t>(ny), -1);
  const int threads = thread_count();
#pragma omp parallel for num_threads(threads) schedule(dynamic)
  for (int d = d0; d < ny; ++d) {
    std::vector<double> rb, rw;
    std::vector<double> acc(static_cast<std::size_t>(std::max(t.nby, t.nwy)));
    const double* gyd = gy.data() + static_cast<std::size_t>(d) * static_cast<std::size_t>(t.cols);
    build_r(t, gyd, t.vbt, t.nby, 2 * params.n, rb);
    build_r(t, gyd, t.vwt, t.nwy, 2 * params.n, rw);
    double best = -1.0;
    int best_c = -1;
    for (int c = c0; c < nx; ++c) {
      const double* gxc =
          gx.data() + static_cast<std::size_t>(c) * static_cast<std::size_t>(t.rows);
      const double lambda = point_lebesgue(t, gxc, rb, rw, acc);
      if (lambda > best) {
        best = lambda;
        best_c = c;
      }
    }
    row_best[static_cast<std::size_t>(d)] = best;
    row_best_c[static_cast<std::size_t>(d)] = best_c;
  }

  LebesgueRecord record{params, -1.0, 0.0, 0.0};
  for (int d = d0; d < ny; ++d) {
    if (row_best[static_cast<std::size_t>(d)] > record.lambda) {
      record.lambda = row_best[static_cast<std::size_t>(d)];
      record.argmax_x = xs[static_cast<std::size_t>(row_best_c[static_cast<std::size_t>(d)])];
      record.argmax_y = ys[static_cast<std::size_t>(d)];
    }
  }
  return record;
}

LebesgueRecord lebesgue_scan_reference(const NodeSet& nodes, const GridSpec& grid) {
  const LissajousParams& params = nodes.params;
  const std::vector<int> row_max = gamma_l_row_max(params);
  const int rows = params.coeff_rows();
  const int cols = params.coeff_cols();
  const int count = static_cast<int>(nodes.nodes.size());
  const int top = 2 * params.n;

  // Per-node basis values and weights, hoisted; the per-point work below is the
  // direct sum of |w_A (K^L(B; A) - 1/2 That_top(y_B) That_top(y_A))|.
  std::vector<double> ax(static_cast<std::size_t>(count) * static_cast<std::size_t>(rows));
  std::vector<double> ay(static_cast<std::size_t>(count) * static_cast<std::size_t>(cols));
  std::vector<double> weight(static_cast<std::size_t>(count));
  for (int a = 0; a < count; ++a) {
    const Node& node = nodes.nodes[static_cast<std::size_t>(a)];
    const std::vector<double> vx = cheb_vector(Axis::x, params, node.x);
    const std::vector<double> vy = cheb_vector(Axis::y, params, node.y);
    std::copy(vx.begin(), vx.end(), ax.begin() + static_cast<std::ptrdiff_t>(a) * rows);
    std::copy(vy.begin(), vy.end(), ay.begin() + static_cast<std::ptrdiff_t>(a) * cols);
    weight[static_cast<std::size_t>(a)] = node.weight;
  }

  const std::vector<double> xs = grid.xs();
  const std::vector<double> ys = grid.ys();
  LebesgueRecord record{params, -1.0, 0.0, 0.0};
  for (std::size_t d = 0; d < ys.size(); ++d) {
    const std::vector<double> vy = cheb_vector(Axis::y, params, ys[d]);
    for (std::size_t c = 0; c < xs.size(); ++c) {
      const std::vector<double> vx = cheb_vector(Axis::x, params, xs[c]);
      double lambda = 0.0;
      for (int a = 0; a < count; ++a) {
        const double* axa = ax.data() + static_cast<std::size_t>(a) * static_cast<std::size_t>(rows);
        const double* aya = ay.data() + static_cast<std::size_t>(a) * static_cast<std::size_t>(cols);
        double kernel = 0.0;
        for (int i = 0; i < rows; ++i) {
          double row_sum = 0.0;
          for (int j = 0; j <= row_max[static_cast<std::size_t>(i)]; ++j) {
            row_sum += aya[j] * vy[static_cast<std::size_t>(j)];
          }
          kernel += axa[i] * vx[static_cast<std::size_t>(i)] * row_sum;
        }
        const double correction =
            0.5 * vy[static_cast<std::size_t>(top)] * aya[top];
        lambda += std::abs(weight[static_cast<std::size_t>(a)] * (kernel - correction));
      }
      if (lambda > record.lambda) {
        record.lambda = lambda;
        record.argmax_x = xs[c];
        record.argmax_y = ys[d];
      }
    }
  }
  return record;
}

}  // namespace lissa
