#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lissa/analysis.hpp"

namespace lissa {

enum class FileFormat { csv, json };

/// 17 significant digits, enough to round-trip a double exactly.
std::string format_double(double v);

void write_nodes(std::ostream& out, const NodeSet& nodes, FileFormat format);

/// Point list for the comparison node families ("padua" / "xu").
void write_points(std::ostream& out, std::span<const Point2> points,
                  const std::string& family, int degree, FileFormat format);

void write_coefficients(std::ostream& out, const CoefficientMatrix& coeffs,
                        FileFormat format);
/// Inverse of write_coefficients; degrees are validated against (n, p).
CoefficientMatrix read_coefficients(std::istream& in, FileFormat format);

/// One value per line; blank lines and lines starting with '#' are skipped.
std::vector<double> read_values(std::istream& in);

void write_grid_values(std::ostream& out, std::span<const double> xs,
                       std::span<const double> ys, const Eigen::MatrixXd& values,
                       FileFormat format);

struct LebesgueReportRow {
  int n = 0;
  int p = 0;
  double lambda = 0.0;
  double argmax_x = 0.0;
  double argmax_y = 0.0;
  double fit_padua = 0.0;
  double fit_xu = 0.0;
};

/// Report rows plus one note per skipped (n, p) combination.
void write_lebesgue_report(std::ostream& out, std::span<const LebesgueReportRow> rows,
                           std::span<const std::string> notes, const GridSpec& grid,
                           FileFormat format);

void write_error_table(std::ostream& out, const ErrorTable& table, FileFormat format);

}  // namespace lissa
