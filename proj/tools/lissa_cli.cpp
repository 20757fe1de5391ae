#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lissa/analysis.hpp"
#include "lissa/chebyshev.hpp"
#include "lissa/error.hpp"
#include "lissa/interpolation.hpp"
#include "lissa/io.hpp"
#include "lissa/kernels.hpp"
#include "lissa/nodes.hpp"
#include "lissa/quadrature.hpp"

namespace {

using namespace lissa;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::non_positive:
    case Errc::non_odd_p:
    case Errc::not_coprime:
    case Errc::unknown_id:
      return 2;
    case Errc::length_mismatch:
    case Errc::domain_error:
    case Errc::index_not_in_gamma_l:
      return 3;
    case Errc::ambiguous_match:
    case Errc::inconsistent_samples:
      return 4;
  }
  return 3;
}

FileFormat parse_format(const std::string& name) {
  return name == "json" ? FileFormat::json : FileFormat::csv;
}

void write_to(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  if (path.empty()) {
    writer(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) fail(Errc::domain_error, "cannot open output file: " + path);
  writer(out);
}

std::vector<double> read_input_values(const std::string& path) {
  if (path.empty()) return read_values(std::cin);
  std::ifstream in(path);
  if (!in) fail(Errc::domain_error, "cannot open input file: " + path);
  return read_values(in);
}

void run_nodes(int n, int p, bool curve_ordered, const std::string& output,
               FileFormat format) {
  NodeSet nodes = build_node_set(validate_params(n, p));
  if (curve_ordered) {
    std::sort(nodes.nodes.begin(), nodes.nodes.end(), [](const Node& a, const Node& b) {
      return a.sample_indices.front() < b.sample_indices.front();
    });
  }
  write_to(output, [&](std::ostream& out) { write_nodes(out, nodes, format); });
}

void run_points(const std::string& family, int n, const std::string& output,
                FileFormat format) {
  const bool padua = family == "padua";
  const std::vector<Point2> points = padua ? padua_points(n) : xu_points_odd(n);
  const int degree = padua ? 2 * n : 2 * n + 1;
  write_to(output, [&](std::ostream& out) {
    write_points(out, points, family, degree, format);
  });
}

void run_interpolate(int n, int p, const std::string& input, const std::string& output,
                     FileFormat format, bool curve_ordered, double tolerance,
                     const std::vector<int>& grid, const std::string& grid_output) {
  const LissajousParams params = validate_params(n, p);
  const NodeSet nodes = build_node_set(params);
  const std::vector<double> raw = read_input_values(input);

  SampleVector samples{params, Eigen::VectorXd()};
  if (curve_ordered) {
    const ReducedSamples reduced = reduce_curve_samples(nodes, raw, tolerance);
    if (reduced.mismatch_count > 0) {
      std::cerr << "warning: " << reduced.mismatch_count
                << " interior nodes have curve samples disagreeing beyond "
                << curve_sample_agree_tol << " (max " << reduced.max_mismatch
                << "); values were averaged\n";
    }
    samples = reduced.samples;
  } else {
    samples.values = Eigen::Map<const Eigen::VectorXd>(
        raw.data(), static_cast<Eigen::Index>(raw.size()));
  }

  const CoefficientMatrix coeffs = interpolate(nodes, samples);
  write_to(output, [&](std::ostream& out) { write_coefficients(out, coeffs, format); });

  if (!grid.empty()) {
    GridSpec spec;
    spec.nx = grid[0];
    spec.ny = grid[1];
    const std::vector<double> xs = spec.xs();
    const std::vector<double> ys = spec.ys();
    const Eigen::MatrixXd values = evaluate_grid(coeffs, xs, ys);
    write_to(grid_output, [&](std::ostream& out) {
      write_grid_values(out, xs, ys, values, format);
    });
  }
}

int run_quadcheck(int n, int p, double tolerance, bool include_excluded, int random_trials,
                  unsigned long long seed, const std::string& output, FileFormat format) {
  const LissajousParams params = validate_params(n, p);
  const NodeSet nodes = build_node_set(params);
  const QuadratureRule rule(nodes);
  const IndexSet gq = gamma_q(params);

  double max_deviation = 0.0;
  long long worst_i = 0;
  long long worst_j = 0;
  for (const IndexPair& pair : gq.pairs) {
    const double value = integrate(rule, [&pair](double x, double y) {
      return cheb_t(static_cast<int>(pair.i), x) * cheb_t(static_cast<int>(pair.j), y);
    });
    const double deviation = std::abs(value - reference_integral(pair.i, pair.j));
    if (deviation > max_deviation) {
      max_deviation = deviation;
      worst_i = pair.i;
      worst_j = pair.j;
    }
  }

  double max_random_deviation = 0.0;
  if (random_trials > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    std::uniform_int_distribution<std::size_t> pick(0, gq.pairs.size() - 1);
    for (int trial = 0; trial < random_trials; ++trial) {
      const std::size_t terms = std::min<std::size_t>(32, gq.pairs.size());
      std::vector<IndexPair> chosen(terms);
      std::vector<double> weights(terms);
      double expected = 0.0;
      for (std::size_t t = 0; t < terms; ++t) {
        chosen[t] = gq.pairs[pick(rng)];
        weights[t] = coeff(rng);
        expected += weights[t] * reference_integral(chosen[t].i, chosen[t].j);
      }
      const double value = integrate(rule, [&](double x, double y) {
        double sum = 0.0;
        for (std::size_t t = 0; t < terms; ++t) {
          sum += weights[t] * cheb_t(static_cast<int>(chosen[t].i), x) *
                 cheb_t(static_cast<int>(chosen[t].j), y);
        }
        return sum;
      });
      max_random_deviation = std::max(max_random_deviation, std::abs(value - expected));
    }
  }

  double excluded_value = 0.0;
  if (include_excluded) {
    const int i = 2 * (params.n + params.p);
    const int j = 2 * params.n;
    excluded_value = integrate(rule, [i, j](double x, double y) {
      return cheb_t(i, x) * cheb_t(j, y);
    });
  }

  const bool pass = max_deviation <= tolerance && max_random_deviation <= tolerance;
  write_to(output, [&](std::ostream& out) {
    if (format == FileFormat::csv) {
      nlohmann::json meta{{"kind", "quadcheck"}, {"n", n}, {"p", p}};
      out << "# " << meta.dump() << '\n';
      out << "pairs,max_deviation,worst_i,worst_j,random_trials,max_random_deviation,"
             "excluded_index_value,tolerance,pass\n";
      out << gq.pairs.size() << ',' << format_double(max_deviation) << ',' << worst_i
          << ',' << worst_j << ',' << random_trials << ','
          << format_double(max_random_deviation) << ','
          << (include_excluded ? format_double(excluded_value) : std::string()) << ','
          << format_double(tolerance) << ',' << (pass ? "true" : "false") << '\n';
      return;
    }
    nlohmann::json j{{"kind", "quadcheck"},
                     {"n", n},
                     {"p", p},
                     {"pairs", gq.pairs.size()},
                     {"max_deviation", max_deviation},
                     {"worst_i", worst_i},
                     {"worst_j", worst_j},
                     {"random_trials", random_trials},
                     {"max_random_deviation", max_random_deviation},
                     {"tolerance", tolerance},
                     {"pass", pass}};
    if (include_excluded) j["excluded_index_value"] = excluded_value;
    out << j.dump(2) << '\n';
  });

  std::cerr << "quadcheck n=" << n << " p=" << p << ": " << gq.pairs.size()
            << " pairs, max deviation " << max_deviation << " (tolerance " << tolerance
            << "): " << (pass ? "PASS" : "FAIL") << '\n';
  return pass ? 0 : 5;
}

void run_lebesgue(int n_min, int n_max, const std::vector<int>& ps,
                  const std::vector<int>& grid, const std::string& output,
                  FileFormat format) {
  GridSpec spec;
  if (!grid.empty()) {
    spec.nx = grid[0];
    spec.ny = grid[1];
  }
  std::vector<LebesgueReportRow> rows;
  std::vector<std::string> notes;
  for (int n = n_min; n <= n_max; ++n) {
    for (const int p : ps) {
      LissajousParams params;
      try {
        params = validate_params(n, p);
      } catch (const Error& e) {
        notes.push_back("skipped n=" + std::to_string(n) + " p=" + std::to_string(p) +
                        ": " + e.what());
        continue;
      }
      const NodeSet nodes = build_node_set(params);
      const LebesgueRecord record = lebesgue_scan(nodes, spec);
      rows.push_back(LebesgueReportRow{n, p, record.lambda, record.argmax_x,
                                       record.argmax_y, lebesgue_fit_padua(n),
                                       lebesgue_fit_xu(n)});
    }
  }
  write_to(output, [&](std::ostream& out) {
    write_lebesgue_report(out, rows, notes, spec, format);
  });
}

void run_table(const std::vector<int>& degrees, int p, const std::vector<int>& grid,
               const std::string& output, FileFormat format) {
  int nx = 100;
  int ny = 100;
  if (!grid.empty()) {
    nx = grid[0];
    ny = grid[1];
  }
  for (const int n : degrees) validate_params(n, p);
  const ErrorTable table = build_error_table(degrees, p, nx, ny);
  write_to(output, [&](std::ostream& out) { write_error_table(out, table, format); });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interpolation and quadrature at the self-intersection and boundary\n"
               "points of Lissajous curves on [-1,1]^2"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lissa 1.0.0");

  std::string format_name = "csv";
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  auto* nodes_cmd = app.add_subcommand("nodes", "Write the interpolation node set");
  int nodes_n = 0, nodes_p = 1;
  bool nodes_curve_ordered = false;
  std::string nodes_output;
  nodes_cmd->add_option("--n", nodes_n, "Curve frequency parameter n")->required();
  nodes_cmd->add_option("--p", nodes_p, "Curve frequency offset p (odd, coprime with n)")
      ->capture_default_str();
  nodes_cmd->add_flag("--curve-ordered", nodes_curve_ordered,
                      "Order rows by first curve sample instead of canonical order");
  nodes_cmd->add_option("--output", nodes_output, "Output file (default: stdout)");

  auto* interp_cmd = app.add_subcommand(
      "interpolate", "Interpolate sampled values: read one value per node (or per curve\n"
                     "sample with --curve-ordered) and write Chebyshev coefficients");
  int interp_n = 0, interp_p = 1;
  bool interp_curve_ordered = false;
  double interp_tolerance = 1e-9;
  std::string interp_input, interp_output, interp_grid_output;
  std::vector<int> interp_grid;
  interp_cmd->add_option("--n", interp_n, "Curve frequency parameter n")->required();
  interp_cmd->add_option("--p", interp_p, "Curve frequency offset p (odd, coprime with n)")
      ->capture_default_str();
  interp_cmd->add_option("--input", interp_input, "Input value file (default: stdin)");
  interp_cmd->add_option("--output", interp_output, "Coefficient output file (default: stdout)");
  interp_cmd->add_flag("--curve-ordered", interp_curve_ordered,
                       "Input holds 4n(n+p) values ordered by curve sample index");
  interp_cmd->add_option("--tolerance", interp_tolerance,
                         "Allowed disagreement between the two curve samples of an "
                         "interior node")
      ->capture_default_str();
  auto* interp_grid_opt =
      interp_cmd->add_option("--grid", interp_grid, "Also evaluate on an NX x NY grid")
          ->expected(2);
  auto* interp_grid_out_opt = interp_cmd->add_option(
      "--grid-output", interp_grid_output, "Output file for the grid evaluation");
  interp_grid_opt->needs(interp_grid_out_opt);
  interp_grid_out_opt->needs(interp_grid_opt);

  auto* quad_cmd = app.add_subcommand(
      "quadcheck", "Verify quadrature exactness over the exactness index set");
  int quad_n = 0, quad_p = 1, quad_random = 0;
  double quad_tolerance = 1e-11;
  bool quad_excluded = false;
  unsigned long long quad_seed = 0;
  std::string quad_output;
  quad_cmd->add_option("--n", quad_n, "Curve frequency parameter n")->required();
  quad_cmd->add_option("--p", quad_p, "Curve frequency offset p (odd, coprime with n)")
      ->capture_default_str();
  quad_cmd->add_option("--tolerance", quad_tolerance, "Deviation bound for exactness")
      ->capture_default_str();
  quad_cmd->add_flag("--include-excluded-index", quad_excluded,
                     "Also report the non-exact product just outside the index set");
  quad_cmd->add_option("--random", quad_random,
                       "Number of random polynomial trials from the exactness span");
  quad_cmd->add_option("--seed", quad_seed, "Seed for the random trials")
      ->capture_default_str();
  quad_cmd->add_option("--output", quad_output, "Output file (default: stdout)");

  auto* leb_cmd = app.add_subcommand(
      "lebesgue", "Scan the Lebesgue function on a grid and report its maximum");
  int leb_n_min = 1, leb_n_max = 0;
  std::vector<int> leb_ps{1};
  std::vector<int> leb_grid;
  std::string leb_output;
  leb_cmd->add_option("--n-min", leb_n_min, "Smallest n")->capture_default_str();
  leb_cmd->add_option("--n-max", leb_n_max, "Largest n")->required();
  leb_cmd->add_option("--p", leb_ps, "Values of p to include")
      ->delimiter(',')
      ->capture_default_str();
  leb_cmd->add_option("--grid", leb_grid, "Scan grid NX NY (default: 500 500)")->expected(2);
  leb_cmd->add_option("--output", leb_output, "Output file (default: stdout)");

  auto* table_cmd = app.add_subcommand(
      "table2", "Max interpolation error for the ten Franke test functions");
  std::vector<int> table_degrees{5, 10, 20, 30};
  int table_p = 1;
  std::vector<int> table_grid;
  std::string table_output;
  table_cmd->add_option("--degrees", table_degrees, "Values of n, one table row each")
      ->delimiter(',')
      ->capture_default_str();
  table_cmd->add_option("--p", table_p, "Curve frequency offset p")->capture_default_str();
  table_cmd->add_option("--grid", table_grid, "Evaluation grid NX NY (default: 100 100)")
      ->expected(2);
  table_cmd->add_option("--output", table_output, "Output file (default: stdout)");

  auto* padua_cmd = app.add_subcommand("padua-nodes", "Write the Padua points of degree 2n");
  int padua_n = 0;
  std::string padua_output;
  padua_cmd->add_option("--n", padua_n, "Half-degree n")->required()->check(CLI::PositiveNumber);
  padua_cmd->add_option("--output", padua_output, "Output file (default: stdout)");

  auto* xu_cmd = app.add_subcommand("xu-nodes", "Write the Xu points of degree 2n+1");
  int xu_n = 0;
  std::string xu_output;
  xu_cmd->add_option("--n", xu_n, "Half-degree n")->required()->check(CLI::PositiveNumber);
  xu_cmd->add_option("--output", xu_output, "Output file (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const FileFormat format = parse_format(format_name);
  try {
    if (*nodes_cmd) {
      run_nodes(nodes_n, nodes_p, nodes_curve_ordered, nodes_output, format);
    } else if (*interp_cmd) {
      run_interpolate(interp_n, interp_p, interp_input, interp_output, format,
                      interp_curve_ordered, interp_tolerance, interp_grid,
                      interp_grid_output);
    } else if (*quad_cmd) {
      return run_quadcheck(quad_n, quad_p, quad_tolerance, quad_excluded, quad_random,
                           quad_seed, quad_output, format);
    } else if (*leb_cmd) {
      run_lebesgue(leb_n_min, leb_n_max, leb_ps, leb_grid, leb_output, format);
    } else if (*table_cmd) {
      run_table(table_degrees, table_p, table_grid, table_output, format);
    } else if (*padua_cmd) {
      run_points("padua", padua_n, padua_output, format);
    } else if (*xu_cmd) {
      run_points("xu", xu_n, xu_output, format);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
