#include "lissa/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "lissa/error.hpp"

namespace lissa {

namespace {

using nlohmann::json;

const char* color_name(NodeColor color) {
  return color == NodeColor::black ? "black" : "white";
}

const char* location_name(NodeLocation location) {
  return location == NodeLocation::interior ? "interior" : "boundary";
}

std::string join_indices(std::span<const int> indices) {
  std::string out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i > 0) out += ';';
    out += std::to_string(indices[i]);
  }
  return out;
}

void write_metadata_line(std::ostream& out, const json& meta) {
  out << "# " << meta.dump() << '\n';
}

json parse_json(std::istream& in) {
  try {
    json j;
    in >> j;
    return j;
  } catch (const json::exception& e) {
    fail(Errc::domain_error, std::string("cannot parse json input: ") + e.what());
  }
}

json parse_metadata_line(const std::string& line) {
  if (line.empty() || line[0] != '#') {
    fail(Errc::domain_error, "csv input must start with a '# {...}' metadata line");
  }
  try {
    return json::parse(line.substr(1));
  } catch (const json::exception& e) {
    fail(Errc::domain_error, std::string("cannot parse csv metadata: ") + e.what());
  }
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

double parse_double(const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) fail(Errc::domain_error, "trailing characters in number: " + text);
    return v;
  } catch (const std::invalid_argument&) {
    fail(Errc::domain_error, "cannot parse number: " + text);
  } catch (const std::out_of_range&) {
    fail(Errc::domain_error, "number out of range: " + text);
  }
}

int parse_int(const std::string& text) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) fail(Errc::domain_error, "trailing characters in integer: " + text);
    return v;
  } catch (const std::invalid_argument&) {
    fail(Errc::domain_error, "cannot parse integer: " + text);
  } catch (const std::out_of_range&) {
    fail(Errc::domain_error, "integer out of range: " + text);
  }
}

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    fail(Errc::domain_error, std::string("metadata is missing integer field '") + key + "'");
  }
  return j[key].get<int>();
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_nodes(std::ostream& out, const NodeSet& nodes, FileFormat format) {
  const LissajousParams& params = nodes.params;
  const json counts{{"count", nodes.nodes.size()},
                    {"black", params.black_count()},
                    {"white", params.white_count()},
                    {"interior", params.interior_count()},
                    {"boundary", params.boundary_count()}};
  if (format == FileFormat::csv) {
    json meta{{"kind", "nodes"}, {"n", params.n}, {"p", params.p}};
    meta.update(counts);
    write_metadata_line(out, meta);
    out << "x,y,color,location,weight,sample_indices\n";
    for (const Node& node : nodes.nodes) {
      out << format_double(node.x) << ',' << format_double(node.y) << ','
          << color_name(node.color) << ',' << location_name(node.location) << ','
          << format_double(node.weight) << ',' << join_indices(node.sample_indices)
          << '\n';
    }
    return;
  }
  json j{{"kind", "nodes"}, {"n", params.n}, {"p", params.p}};
  j.update(counts);
  j["nodes"] = json::array();
  for (const Node& node : nodes.nodes) {
    j["nodes"].push_back(json{{"x", node.x},
                              {"y", node.y},
                              {"color", color_name(node.color)},
                              {"location", location_name(node.location)},
                              {"weight", node.weight},
                              {"sample_indices", node.sample_indices}});
  }
  out << j.dump(2) << '\n';
}

void write_points(std::ostream& out, std::span<const Point2> points,
                  const std::string& family, int degree, FileFormat format) {
  if (format == FileFormat::csv) {
    json meta{{"kind", "points"}, {"family", family}, {"degree", degree}, {"count", points.size()}};
    write_metadata_line(out, meta);
    out << "x,y\n";
    for (const Point2& pt : points) {
      out << format_double(pt.x) << ',' << format_double(pt.y) << '\n';
    }
    return;
  }
  json j{{"kind", "points"}, {"family", family}, {"degree", degree}, {"count", points.size()}};
  j["points"] = json::array();
  for (const Point2& pt : points) j["points"].push_back(json{{"x", pt.x}, {"y", pt.y}});
  out << j.dump(2) << '\n';
}

void write_coefficients(std::ostream& out, const CoefficientMatrix& coeffs,
                        FileFormat format) {
  const LissajousParams& params = coeffs.params;
  const int rows = params.coeff_rows();
  const int cols = params.coeff_cols();
  if (format == FileFormat::csv) {
    json meta{{"kind", "coefficients"},
              {"n", params.n},
              {"p", params.p},
              {"rows", rows},
              {"cols", cols}};
    write_metadata_line(out, meta);
    out << "i,j,c\n";
    for (int i = 0; i < rows; ++i) {
      for (int j = 0; j < cols; ++j) {
        out << i << ',' << j << ',' << format_double(coeffs.entries(i, j)) << '\n';
      }
    }
    return;
  }
  json j{{"kind", "coefficients"},
         {"n", params.n},
         {"p", params.p},
         {"rows", rows},
         {"cols", cols}};
  j["entries"] = json::array();
  for (int i = 0; i < rows; ++i) {
    json row = json::array();
    for (int jj = 0; jj < cols; ++jj) row.push_back(coeffs.entries(i, jj));
    j["entries"].push_back(std::move(row));
  }
  out << j.dump(2) << '\n';
}

CoefficientMatrix read_coefficients(std::istream& in, FileFormat format) {
  if (format == FileFormat::json) {
    const json j = parse_json(in);
    const LissajousParams params = validate_params(require_int(j, "n"), require_int(j, "p"));
    const int rows = params.coeff_rows();
    const int cols = params.coeff_cols();
    if (!j.contains("entries") || !j["entries"].is_array() ||
        static_cast<int>(j["entries"].size()) != rows) {
      fail(Errc::length_mismatch,
           "coefficient entries must have " + std::to_string(rows) + " rows");
    }
    Eigen::MatrixXd entries(rows, cols);
    for (int i = 0; i < rows; ++i) {
      const json& row = j["entries"][static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != cols) {
        fail(Errc::length_mismatch,
             "coefficient row " + std::to_string(i) + " must have " +
                 std::to_string(cols) + " entries");
      }
      for (int jj = 0; jj < cols; ++jj) {
        if (!row[static_cast<std::size_t>(jj)].is_number()) {
          fail(Errc::domain_error, "coefficient entries must be numbers");
        }
        entries(i, jj) = row[static_cast<std::size_t>(jj)].get<double>();
      }
    }
    return CoefficientMatrix{params, std::move(entries)};
  }

  std::string line;
  if (!std::getline(in, line)) fail(Errc::domain_error, "empty coefficient input");
  const json meta = parse_metadata_line(line);
  const LissajousParams params = validate_params(require_int(meta, "n"), require_int(meta, "p"));
  const int rows = params.coeff_rows();
  const int cols = params.coeff_cols();
  Eigen::MatrixXd entries = Eigen::MatrixXd::Zero(rows, cols);
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> seen(rows, cols);
  seen.setConstant(false);
  long long filled = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (line == "i,j,c") continue;
    const std::vector<std::string> fields = split_csv(line);
    if (fields.size() != 3) {
      fail(Errc::domain_error, "coefficient rows must be 'i,j,c', got: " + line);
    }
    const int i = parse_int(fields[0]);
    const int j = parse_int(fields[1]);
    if (i < 0 || i >= rows || j < 0 || j >= cols) {
      fail(Errc::length_mismatch,
           "coefficient index (" + std::to_string(i) + ", " + std::to_string(j) +
               ") outside " + std::to_string(rows) + " x " + std::to_string(cols));
    }
    if (!seen(i, j)) {
      seen(i, j) = true;
      ++filled;
    }
    entries(i, j) = parse_double(fields[2]);
  }
  if (filled != static_cast<long long>(rows) * cols) {
    fail(Errc::length_mismatch,
         "coefficient input has " + std::to_string(filled) + " entries, expected " +
             std::to_string(static_cast<long long>(rows) * cols));
  }
  return CoefficientMatrix{params, std::move(entries)};
}

std::vector<double> read_values(std::istream& in) {
  std::vector<double> values;
  std::string line;
  while (std::getline(in, line)) {
    const std::size_t begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const std::size_t end = line.find_last_not_of(" \t\r");
    const std::string trimmed = line.substr(begin, end - begin + 1);
    if (trimmed[0] == '#') continue;
    values.push_back(parse_double(trimmed));
  }
  return values;
}

void write_grid_values(std::ostream& out, std::span<const double> xs,
                       std::span<const double> ys, const Eigen::MatrixXd& values,
                       FileFormat format) {
  if (format == FileFormat::csv) {
    json meta{{"kind", "grid"}, {"nx", xs.size()}, {"ny", ys.size()}};
    write_metadata_line(out, meta);
    out << "x,y,value\n";
    for (std::size_t a = 0; a < xs.size(); ++a) {
      for (std::size_t b = 0; b < ys.size(); ++b) {
        out << format_double(xs[a]) << ',' << format_double(ys[b]) << ','
            << format_double(values(static_cast<Eigen::Index>(a),
                                    static_cast<Eigen::Index>(b)))
            << '\n';
      }
    }
    return;
  }
  json j{{"kind", "grid"}, {"nx", xs.size()}, {"ny", ys.size()}};
  j["xs"] = std::vector<double>(xs.begin(), xs.end());
  j["ys"] = std::vector<double>(ys.begin(), ys.end());
  j["values"] = json::array();
  for (std::size_t a = 0; a < xs.size(); ++a) {
    json row = json::array();
    for (std::size_t b = 0; b < ys.size(); ++b) {
      row.push_back(values(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)));
    }
    j["values"].push_back(std::move(row));
  }
  out << j.dump(2) << '\n';
}

void write_lebesgue_report(std::ostream& out, std::span<const LebesgueReportRow> rows,
                           std::span<const std::string> notes, const GridSpec& grid,
                           FileFormat format) {
  if (format == FileFormat::csv) {
    json meta{{"kind", "lebesgue"},
              {"grid_nx", grid.nx},
              {"grid_ny", grid.ny},
              {"notes", std::vector<std::string>(notes.begin(), notes.end())}};
    write_metadata_line(out, meta);
    out << "n,p,lambda,argmax_x,argmax_y,fit_padua,fit_xu\n";
    for (const LebesgueReportRow& row : rows) {
      out << row.n << ',' << row.p << ',' << format_double(row.lambda) << ','
          << format_double(row.argmax_x) << ',' << format_double(row.argmax_y) << ','
          << format_double(row.fit_padua) << ',' << format_double(row.fit_xu) << '\n';
    }
    return;
  }
  json j{{"kind", "lebesgue"},
         {"grid", json{{"nx", grid.nx}, {"ny", grid.ny}}},
         {"notes", std::vector<std::string>(notes.begin(), notes.end())}};
  j["rows"] = json::array();
  for (const LebesgueReportRow& row : rows) {
    j["rows"].push_back(json{{"n", row.n},
                             {"p", row.p},
                             {"lambda", row.lambda},
                             {"argmax_x", row.argmax_x},
                             {"argmax_y", row.argmax_y},
                             {"fit_padua", row.fit_padua},
                             {"fit_xu", row.fit_xu}});
  }
  out << j.dump(2) << '\n';
}

void write_error_table(std::ostream& out, const ErrorTable& table, FileFormat format) {
  if (format == FileFormat::csv) {
    json meta{{"kind", "error_table"}, {"rows", table.degrees.size()}};
    write_metadata_line(out, meta);
    out << "n,nodes";
    for (int id = 1; id <= 10; ++id) out << ",f" << id;
    out << '\n';
    for (std::size_t row = 0; row < table.degrees.size(); ++row) {
      out << table.degrees[row] << ',' << table.node_counts[row];
      for (int id = 1; id <= 10; ++id) {
        out << ',' << format_double(table.errors(static_cast<Eigen::Index>(row), id - 1));
      }
      out << '\n';
    }
    return;
  }
  json j{{"kind", "error_table"}};
  j["rows"] = json::array();
  for (std::size_t row = 0; row < table.degrees.size(); ++row) {
    std::vector<double> errors(10);
    for (int id = 1; id <= 10; ++id) {
      errors[static_cast<std::size_t>(id - 1)] =
          table.errors(static_cast<Eigen::Index>(row), id - 1);
    }
    j["rows"].push_back(json{{"n", table.degrees[row]},
                             {"nodes", table.node_counts[row]},
                             {"errors", errors}});
  }
  out << j.dump(2) << '\n';
}

}  // namespace lissa
