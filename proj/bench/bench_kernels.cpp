#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "lissa/analysis.hpp"
#include "lissa/interpolation.hpp"
#include "lissa/kernels.hpp"
#include "lissa/nodes.hpp"

using namespace lissa;

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void report(const char* label, double reference, double candidate, double diff) {
  std::printf("%-44s %9.3fs %9.3fs %7.2fx  max diff %.3e\n", label, reference, candidate,
              reference / candidate, diff);
}

}  // namespace

int main() {
  std::printf("%-44s %10s %10s %8s\n", "case", "reference", "fast", "speedup");

  {
    const NodeSet nodes = build_node_set(validate_params(5, 1));
    GridSpec grid;
    grid.nx = 200;
    grid.ny = 200;
    auto t0 = std::chrono::steady_clock::now();
    const LebesgueRecord slow = lebesgue_scan_reference(nodes, grid);
    const double t_slow = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const LebesgueRecord fast = lebesgue_scan(nodes, grid);
    const double t_fast = seconds_since(t0);
    report("lebesgue (5,1) 200x200", t_slow, t_fast, std::abs(slow.lambda - fast.lambda));
  }

  {
    const NodeSet nodes = build_node_set(validate_params(20, 1));
    GridSpec grid;
    setenv("LISSA_THREADS", "1", 1);
    auto t0 = std::chrono::steady_clock::now();
    const LebesgueRecord serial = lebesgue_scan(nodes, grid);
    const double t_serial = seconds_since(t0);
    unsetenv("LISSA_THREADS");
    t0 = std::chrono::steady_clock::now();
    const LebesgueRecord parallel = lebesgue_scan(nodes, grid);
    const double t_parallel = seconds_since(t0);
    std::printf("lebesgue (20,1) 500x500: 1 thread %.3fs, %d threads %.3fs (%.2fx)\n",
                t_serial, thread_count(), t_parallel, t_serial / t_parallel);
    if (serial.lambda != parallel.lambda) {
      std::printf("  thread count changed the result: %.17g vs %.17g\n", serial.lambda,
                  parallel.lambda);
    }
  }

  {
    const NodeSet nodes = build_node_set(validate_params(30, 1));
    const SampleVector samples = sample_function(nodes, [](double x, double y) {
      return franke_function(1, 0.5 * (x + 1.0), 0.5 * (y + 1.0));
    });
    const CoefficientMatrix coeffs = interpolate(nodes, samples);
    GridSpec grid;
    grid.nx = 1000;
    grid.ny = 1000;
    const std::vector<double> xs = grid.xs();
    const std::vector<double> ys = grid.ys();
    auto t0 = std::chrono::steady_clock::now();
    const Eigen::MatrixXd slow = evaluate_grid_reference(coeffs, xs, ys);
    const double t_slow = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const Eigen::MatrixXd fast = evaluate_grid(coeffs, xs, ys);
    const double t_fast = seconds_since(t0);
    report("evaluate_grid n=30 1000x1000", t_slow, t_fast,
           (slow - fast).cwiseAbs().maxCoeff());
  }

  return 0;
}
