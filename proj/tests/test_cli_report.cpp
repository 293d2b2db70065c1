// Copyright 2026 noisysep contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "noisysep/errors.hpp"
#include "noisysep/io.hpp"
#include "noisysep/scan.hpp"
#include "noisysep/scenario.hpp"
#include "test_support.hpp"

using namespace noisysep;
using namespace testsupport;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("matrix files round trip bit-exactly") {
  std::mt19937_64 rng(61);
  const HermitianMatrix original = random_trace_one_hermitian(4, rng);
  const auto path = temp_file("noisysep_matrix_roundtrip.json");
  write_matrix(original, path);
  const HermitianMatrix loaded = read_matrix(path);
  CHECK(loaded.matrix() == original.matrix());
  std::filesystem::remove(path);
}

TEST_CASE("coefficient files round trip bit-exactly") {
  std::mt19937_64 rng(62);
  const PauliCoefficients original = random_coefficients(2, rng);
  const auto path = temp_file("noisysep_coeffs_roundtrip.json");
  write_coeffs(original, path);
  const PauliCoefficients loaded = read_coeffs(path);
  REQUIRE(loaded.size() == original.size());
  for (std::size_t i = 0; i < original.size(); ++i)
    CHECK(loaded[i] == original[i]);
  std::filesystem::remove(path);
}

TEST_CASE("matrix schema violations are rejected") {
  // Hermiticity broken beyond 1e-9.
  nlohmann::json j;
  j["n_qubits"] = 1;
  j["entries"] = {{{0.5, 0.0}, {0.1, 0.0}}, {{0.2, 0.0}, {0.5, 0.0}}};
  CHECK_THROWS_AS(matrix_from_json(j), SchemaViolation);

  // Wrong row count for the declared qubit number.
  nlohmann::json wrong_dim;
  wrong_dim["n_qubits"] = 2;
  wrong_dim["entries"] = {{{1.0, 0.0}}};
  CHECK_THROWS_AS(matrix_from_json(wrong_dim), SchemaViolation);

  // Trace away from one.
  nlohmann::json traceless;
  traceless["n_qubits"] = 1;
  traceless["entries"] = {{{0.9, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {0.9, 0.0}}};
  CHECK_THROWS_AS(matrix_from_json(traceless), SchemaViolation);

  // Qubit count outside 1..5.
  nlohmann::json wrong_n;
  wrong_n["n_qubits"] = 7;
  wrong_n["entries"] = nlohmann::json::array();
  CHECK_THROWS_AS(matrix_from_json(wrong_n), SchemaViolation);
}

TEST_CASE("parse errors carry context") {
  CHECK_THROWS_AS(parse_json_text("{ not json", "inline"), ParseError);

  nlohmann::json bad_cell;
  bad_cell["n_qubits"] = 1;
  bad_cell["entries"] = {{{0.5, 0.0}, "oops"}, {{0.0, 0.0}, {0.5, 0.0}}};
  CHECK_THROWS_AS(matrix_from_json(bad_cell), ParseError);

  nlohmann::json missing;
  missing["n_qubits"] = 1;
  CHECK_THROWS_AS(matrix_from_json(missing), ParseError);
}

TEST_CASE("coefficient schema violations are rejected") {
  nlohmann::json j;
  j["n_qubits"] = 2;
  j["coeffs"] = std::vector<double>(16, 0.0);  // leading entry must be 1
  CHECK_THROWS_AS(coeffs_from_json(j), SchemaViolation);

  nlohmann::json short_list;
  short_list["n_qubits"] = 2;
  short_list["coeffs"] = std::vector<double>(15, 0.0);
  CHECK_THROWS_AS(coeffs_from_json(short_list), SchemaViolation);
}

TEST_CASE("shipped fixture matches the uniform -0.15 state") {
  const HermitianMatrix fixture =
      read_matrix(std::filesystem::path(NOISYSEP_FIXTURE_DIR) / "eq8.json");
  const HermitianMatrix built =
      from_coefficients(PauliCoefficients::uniform(2, -0.15));
  CHECK(max_entry_distance(fixture.matrix(), built.matrix()) < 1e-12);
}

TEST_CASE("every scenario passes all of its reference checks") {
  for (const auto& id : scenario_ids()) {
    const ScenarioResult result = run_scenario(id);
    INFO("scenario ", id, "\n", render_text(result));
    CHECK(result.all_pass());
    CHECK_FALSE(result.checks.empty());
    for (const auto& [name, matrix] : result.matrices) {
      INFO("matrix ", name);
      CHECK(std::abs(matrix.trace() - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("scenario reports are byte-identical across runs") {
  for (const auto& id : scenario_ids()) {
    const std::string first = render_text(run_scenario(id));
    const std::string second = render_text(run_scenario(id));
    CHECK(first == second);
    const std::string json_first = render_json(run_scenario(id));
    const std::string json_second = render_json(run_scenario(id));
    CHECK(json_first == json_second);
  }
}

TEST_CASE("unknown scenario ids are rejected") {
  CHECK_THROWS_AS(run_scenario("eq99"), UnknownScenario);
  CHECK_THROWS_AS(run_scenario(""), UnknownScenario);
}

TEST_CASE("grid parsing accepts both forms") {
  const GridSpec single = parse_grid("-0.15");
  CHECK(single.count() == 1);
  CHECK(single.values()[0] == -0.15);

  const GridSpec range = parse_grid("-1:1:0.5");
  CHECK(range.count() == 5);
  CHECK(range.values()[0] == -1.0);
  CHECK(range.values()[4] == 1.0);

  CHECK_THROWS_AS(parse_grid("a:b:c"), ParseError);
  CHECK_THROWS_AS(parse_grid("0:1:0"), ParseError);
  CHECK_THROWS_AS(parse_grid("1:0:0.1"), ParseError);
  CHECK_THROWS_AS(parse_grid("1:2:0.1:4"), ParseError);
}

TEST_CASE("scan points reproduce the scenario numbers") {
  const auto points = scan_plane(2, parse_grid("-0.15"), parse_grid("0.4"));
  REQUIRE(points.size() == 1);
  const ScanPoint& p = points[0];
  CHECK(p.physical);

  const HermitianMatrix rho_eps = mix(MixtureSpec(
      from_coefficients(PauliCoefficients::uniform(2, -0.15)), 0.40));
  const auto spectrum = eigenvalues(rho_eps);
  CHECK(std::abs(p.min_eigenvalue - spectrum.min_eigenvalue) < 1e-10);
  REQUIRE(p.ppt_min_eigenvalue.has_value());
  const auto pt = eigenvalues(partial_transpose_second(rho_eps));
  CHECK(std::abs(*p.ppt_min_eigenvalue - pt.min_eigenvalue) < 1e-10);
  CHECK(*p.ppt_min_eigenvalue > 0.0);
  REQUIRE(p.witness_min_term.has_value());
  CHECK(std::abs(*p.witness_min_term - (1.0 / 9.0 - 0.25 * 0.4)) < 1e-10);
}

TEST_CASE("scan classifies the trivial and non-physical corners") {
  const auto center = scan_plane(2, parse_grid("0"), parse_grid("0.5"));
  REQUIRE(center.size() == 1);
  CHECK(center[0].physical);
  CHECK(std::abs(center[0].min_eigenvalue - 0.25) < 1e-12);

  const auto corner = scan_plane(2, parse_grid("-1"), parse_grid("1"));
  REQUIRE(corner.size() == 1);
  CHECK_FALSE(corner[0].physical);
  CHECK_FALSE(corner[0].ppt_min_eigenvalue.has_value());
  CHECK_FALSE(corner[0].witness_min_term.has_value());
}

TEST_CASE("scan rows are ordered c-major and the header is fixed") {
  const auto points =
      scan_plane(2, parse_grid("-0.2:0.2:0.2"), parse_grid("0:1:0.5"));
  REQUIRE(points.size() == 9);
  CHECK(points[0].c == -0.2);
  CHECK(points[0].epsilon == 0.0);
  CHECK(points[1].epsilon == 0.5);
  CHECK(points[3].c == 0.0);

  std::ostringstream out;
  write_scan_csv(out, points);
  const std::string csv = out.str();
  CHECK(csv.rfind("c,epsilon,physical,min_eigenvalue,ppt_min_eigenvalue,"
                  "witness_min_term\n",
                  0) == 0);

  std::ostringstream again;
  write_scan_csv(again, points);
  CHECK(csv == again.str());
}

TEST_CASE("oversized grids and wrong qubit counts are rejected") {
  CHECK_THROWS_AS(
      scan_plane(2, parse_grid("0:1:0.0001"), parse_grid("0:1:0.0001")),
      GridTooLarge);
  CHECK_THROWS_AS(scan_plane(3, parse_grid("0"), parse_grid("0")),
                  ParameterOutOfRange);
}
