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

#include "noisysep/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "noisysep/errors.hpp"

namespace noisysep {

namespace {

constexpr double kFileHermiticityTolerance = 1e-9;
constexpr double kFileNormalizationTolerance = 1e-9;

int read_qubit_count(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n_qubits")) {
    throw ParseError("document must be an object with an n_qubits field");
  }
  const auto& field = j.at("n_qubits");
  if (!field.is_number_integer()) {
    throw ParseError("n_qubits must be an integer");
  }
  const int n = field.get<int>();
  if (n < 1 || n > 5) {
    throw SchemaViolation("n_qubits must lie in 1..5, got " +
                          std::to_string(n));
  }
  return n;
}

double read_finite_number(const nlohmann::json& j, const std::string& where) {
  if (!j.is_number()) {
    throw ParseError(where + " must be a number");
  }
  const double v = j.get<double>();
  if (!std::isfinite(v)) {
    throw SchemaViolation(where + " must be finite");
  }
  return v;
}

std::string file_to_string(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void string_to_file(const std::string& text,
                    const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw ParseError("cannot write " + path.string());
  }
  out << text;
}

}  // namespace

nlohmann::json parse_json_text(const std::string& text,
                               const std::string& origin) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(origin + ": " + e.what());
  }
}

nlohmann::ordered_json matrix_to_json(const HermitianMatrix& m) {
  nlohmann::ordered_json j;
  j["n_qubits"] = m.n_qubits();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) {
      row.push_back({m(r, c).real(), m(r, c).imag()});
    }
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  return j;
}

HermitianMatrix matrix_from_json(const nlohmann::json& j) {
  const int n = read_qubit_count(j);
  const std::size_t d = std::size_t{1} << n;

  if (!j.contains("entries")) {
    throw ParseError("matrix document requires an entries field");
  }
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != d) {
    throw SchemaViolation("entries must hold " + std::to_string(d) +
                          " rows for n_qubits = " + std::to_string(n));
  }

  ComplexMatrix m(d);
  for (std::size_t r = 0; r < d; ++r) {
    const auto& row = entries.at(r);
    if (!row.is_array() || row.size() != d) {
      throw SchemaViolation("entries[" + std::to_string(r) + "] must hold " +
                            std::to_string(d) + " cells");
    }
    for (std::size_t c = 0; c < d; ++c) {
      const auto& cell = row.at(c);
      const std::string where =
          "entries[" + std::to_string(r) + "][" + std::to_string(c) + "]";
      if (!cell.is_array() || cell.size() != 2) {
        throw ParseError(where + " must be an [re, im] pair");
      }
      m(r, c) = Complex(read_finite_number(cell.at(0), where + "[0]"),
                        read_finite_number(cell.at(1), where + "[1]"));
    }
  }

  if (m.hermiticity_defect() > kFileHermiticityTolerance) {
    throw SchemaViolation("matrix is not Hermitian within 1e-9");
  }
  const double trace = m.trace().real();
  if (std::abs(trace - 1.0) > kFileNormalizationTolerance) {
    throw SchemaViolation("matrix trace " + std::to_string(trace) +
                          " differs from 1 beyond 1e-9");
  }
  return HermitianMatrix(m, kFileHermiticityTolerance);
}

nlohmann::ordered_json coeffs_to_json(const PauliCoefficients& c) {
  nlohmann::ordered_json j;
  j["n_qubits"] = c.n_qubits();
  j["coeffs"] = c.data();
  return j;
}

PauliCoefficients coeffs_from_json(const nlohmann::json& j) {
  const int n = read_qubit_count(j);
  const std::size_t expected = std::size_t{1} << (2 * n);

  if (!j.contains("coeffs")) {
    throw ParseError("coefficient document requires a coeffs field");
  }
  const auto& coeffs = j.at("coeffs");
  if (!coeffs.is_array() || coeffs.size() != expected) {
    throw SchemaViolation("coeffs must hold 4^N = " +
                          std::to_string(expected) + " values");
  }
  std::vector<double> values(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    values[i] =
        read_finite_number(coeffs.at(i), "coeffs[" + std::to_string(i) + "]");
  }
  if (std::abs(values[0] - 1.0) > kFileNormalizationTolerance) {
    throw SchemaViolation("coeffs[0] must equal 1 within 1e-9 "
                          "(missing normalization)");
  }
  return PauliCoefficients(n, std::move(values),
                           kFileNormalizationTolerance);
}

HermitianMatrix read_matrix(const std::filesystem::path& path) {
  return matrix_from_json(parse_json_text(file_to_string(path),
                                          path.string()));
}

void write_matrix(const HermitianMatrix& m,
                  const std::filesystem::path& path) {
  string_to_file(matrix_to_json(m).dump(2) + "\n", path);
}

PauliCoefficients read_coeffs(const std::filesystem::path& path) {
  return coeffs_from_json(parse_json_text(file_to_string(path),
                                          path.string()));
}

void write_coeffs(const PauliCoefficients& c,
                  const std::filesystem::path& path) {
  string_to_file(coeffs_to_json(c).dump(2) + "\n", path);
}

}  // namespace noisysep
