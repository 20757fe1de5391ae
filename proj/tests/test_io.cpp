#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include <json.hpp>

#include "lissa/error.hpp"
#include "lissa/index_set.hpp"
#include "lissa/interpolation.hpp"
#include "lissa/io.hpp"
#include "lissa/kernels.hpp"
#include "lissa/nodes.hpp"
#include "lissa/params.hpp"

using namespace lissa;

namespace {

CoefficientMatrix sample_coefficients() {
  const LissajousParams params = validate_params(2, 1);
  std::mt19937_64 rng(321);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  CoefficientMatrix coeffs{params,
                           Eigen::MatrixXd::Zero(params.coeff_rows(), params.coeff_cols())};
  for (const IndexPair& pair : gamma_l(params).pairs) {
    coeffs.entries(pair.i, pair.j) = dist(rng);
  }
  return coeffs;
}

int data_line_count(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') ++count;
  }
  return count;
}

Errc read_coeff_code(const std::string& text, FileFormat format) {
  std::istringstream in(text);
  try {
    read_coefficients(in, format);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("read_coefficients did not throw");
  return Errc::domain_error;
}

}  // namespace

TEST_CASE("format_double round trips doubles exactly") {
  for (double v : {1.0 / 3.0, 0.1, -2.5e-300, 6.5216534670955729e-06, std::numbers::pi,
                   -123456.789, 0.0, 1e308}) {
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(1.0) == "1");
  CHECK(format_double(-0.5) == "-0.5");
}

TEST_CASE("coefficients round trip through both formats") {
  const CoefficientMatrix coeffs = sample_coefficients();
  for (FileFormat format : {FileFormat::csv, FileFormat::json}) {
    std::stringstream buffer;
    write_coefficients(buffer, coeffs, format);
    const CoefficientMatrix back = read_coefficients(buffer, format);
    CHECK(back.params.n == coeffs.params.n);
    CHECK(back.params.p == coeffs.params.p);
    REQUIRE(back.entries.rows() == coeffs.entries.rows());
    REQUIRE(back.entries.cols() == coeffs.entries.cols());
    CHECK((back.entries - coeffs.entries).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("read_coefficients rejects malformed input") {
  SUBCASE("missing csv entries") {
    const std::string text = "# {\"kind\":\"coefficients\",\"n\":2,\"p\":1}\ni,j,c\n0,0,1.0\n";
    CHECK(read_coeff_code(text, FileFormat::csv) == Errc::length_mismatch);
  }
  SUBCASE("csv index outside the matrix") {
    const std::string text = "# {\"kind\":\"coefficients\",\"n\":2,\"p\":1}\ni,j,c\n9,0,1.0\n";
    CHECK(read_coeff_code(text, FileFormat::csv) == Errc::length_mismatch);
  }
  SUBCASE("csv value not a number") {
    const std::string text = "# {\"kind\":\"coefficients\",\"n\":2,\"p\":1}\ni,j,c\n0,0,abc\n";
    CHECK(read_coeff_code(text, FileFormat::csv) == Errc::domain_error);
  }
  SUBCASE("csv without metadata") {
    CHECK(read_coeff_code("i,j,c\n0,0,1.0\n", FileFormat::csv) == Errc::domain_error);
  }
  SUBCASE("json with invalid parameters") {
    CHECK(read_coeff_code("{\"n\":2,\"p\":2,\"entries\":[]}", FileFormat::json) ==
          Errc::non_odd_p);
  }
  SUBCASE("json with wrong row count") {
    CHECK(read_coeff_code("{\"n\":2,\"p\":1,\"entries\":[[1,2],[3,4]]}", FileFormat::json) ==
          Errc::length_mismatch);
  }
  SUBCASE("json with a non-numeric entry") {
    nlohmann::json j{{"n", 1}, {"p", 1}};
    j["entries"] = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) j["entries"].push_back({0.0, 0.0, 0.0});
    j["entries"][2][1] = "oops";
    CHECK(read_coeff_code(j.dump(), FileFormat::json) == Errc::domain_error);
  }
}

TEST_CASE("read_values skips blanks and comments") {
  std::istringstream in("1.5\n\n# comment\n  2.5e-1  \n\t-3\n");
  const std::vector<double> values = read_values(in);
  REQUIRE(values.size() == 3);
  CHECK(values[0] == 1.5);
  CHECK(values[1] == 0.25);
  CHECK(values[2] == -3.0);
}

TEST_CASE("read_values rejects non-numeric lines") {
  std::istringstream in("1.0\nnot-a-number\n");
  try {
    read_values(in);
    FAIL("no error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::domain_error);
  }
}

TEST_CASE("write_nodes emits one row per node and valid json") {
  const NodeSet nodes = build_node_set(validate_params(2, 1));

  std::ostringstream csv;
  write_nodes(csv, nodes, FileFormat::csv);
  CHECK(data_line_count(csv.str()) == 18);  // header + 17 nodes
  CHECK(csv.str().rfind("# {", 0) == 0);

  std::ostringstream json_out;
  write_nodes(json_out, nodes, FileFormat::json);
  const nlohmann::json j = nlohmann::json::parse(json_out.str());
  CHECK(j["n"] == 2);
  CHECK(j["p"] == 1);
  REQUIRE(j["nodes"].is_array());
  CHECK(j["nodes"].size() == 17);
  CHECK(j["nodes"][0].contains("x"));
  CHECK(j["nodes"][0].contains("weight"));
  CHECK(j["nodes"][0].contains("sample_indices"));
}

TEST_CASE("write_points carries the family and degree") {
  const std::vector<Point2> points = padua_points(2);
  std::ostringstream out;
  write_points(out, points, "padua", 4, FileFormat::json);
  const nlohmann::json j = nlohmann::json::parse(out.str());
  CHECK(j["family"] == "padua");
  CHECK(j["degree"] == 4);
  CHECK(j["points"].size() == 15);

  std::ostringstream csv;
  write_points(csv, points, "padua", 4, FileFormat::csv);
  CHECK(data_line_count(csv.str()) == 16);  // header + 15 points
}

TEST_CASE("write_grid_values matches the grid shape") {
  const GridSpec grid{3, 4, -1.0, 1.0, -1.0, 1.0};
  const std::vector<double> xs = grid.xs();
  const std::vector<double> ys = grid.ys();
  const Eigen::MatrixXd values = Eigen::MatrixXd::Constant(3, 4, 2.0);

  std::ostringstream csv;
  write_grid_values(csv, xs, ys, values, FileFormat::csv);
  CHECK(data_line_count(csv.str()) == 13);  // header + 12 points

  std::ostringstream out;
  write_grid_values(out, xs, ys, values, FileFormat::json);
  const nlohmann::json j = nlohmann::json::parse(out.str());
  CHECK(j["nx"] == 3);
  CHECK(j["ny"] == 4);
  REQUIRE(j["values"].size() == 3);
  CHECK(j["values"][0].size() == 4);
  CHECK(j["values"][2][3] == 2.0);
}

TEST_CASE("lebesgue report includes rows and notes") {
  const std::vector<LebesgueReportRow> rows = {
      {5, 1, 7.4, 0.0, 0.1, 6.9, 4.0},
      {6, 1, 7.9, 0.2, 0.0, 7.2, 4.3},
  };
  const std::vector<std::string> notes = {"skipped n=3 p=3: not coprime"};
  const GridSpec grid{};

  std::ostringstream out;
  write_lebesgue_report(out, rows, notes, grid, FileFormat::json);
  const nlohmann::json j = nlohmann::json::parse(out.str());
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["n"] == 5);
  CHECK(j["rows"][1]["lambda"] == 7.9);
  REQUIRE(j["notes"].size() == 1);

  std::ostringstream csv;
  write_lebesgue_report(csv, rows, notes, grid, FileFormat::csv);
  CHECK(data_line_count(csv.str()) == 3);  // header + 2 rows
  CHECK(csv.str().find("not coprime") != std::string::npos);
}

TEST_CASE("error table serializes ten columns per degree") {
  ErrorTable table;
  table.degrees = {2, 3};
  table.node_counts = {17, 27};
  table.errors = Eigen::MatrixXd::Constant(2, 10, 1e-3);

  std::ostringstream csv;
  write_error_table(csv, table, FileFormat::csv);
  CHECK(data_line_count(csv.str()) == 3);

  std::ostringstream out;
  write_error_table(out, table, FileFormat::json);
  const nlohmann::json j = nlohmann::json::parse(out.str());
  REQUIRE(j["rows"].size() == 2);
  CHECK(j["rows"][0]["n"] == 2);
  CHECK(j["rows"][0]["nodes"] == 17);
  REQUIRE(j["rows"][1]["errors"].size() == 10);
}