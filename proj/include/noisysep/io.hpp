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

#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "noisysep/pauli.hpp"

namespace noisysep {

// File formats (JSON, lossless doubles):
//   matrix:       { "n_qubits": N, "entries": [[[re, im], ...], ...] }
//   coefficients: { "n_qubits": N, "coeffs": [4^N reals, flat order] }
//
// Matrix files describe states: they must be Hermitian within 1e-9 and have
// unit trace within 1e-9.  Coefficient files must carry a leading 1.
// Syntactic problems raise ParseError, semantic ones SchemaViolation.

nlohmann::ordered_json matrix_to_json(const HermitianMatrix& m);
HermitianMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::ordered_json coeffs_to_json(const PauliCoefficients& c);
PauliCoefficients coeffs_from_json(const nlohmann::json& j);

HermitianMatrix read_matrix(const std::filesystem::path& path);
void write_matrix(const HermitianMatrix& m, const std::filesystem::path& path);

PauliCoefficients read_coeffs(const std::filesystem::path& path);
void write_coeffs(const PauliCoefficients& c,
                  const std::filesystem::path& path);

/** Parses a JSON document, mapping syntax errors to ParseError. */
nlohmann::json parse_json_text(const std::string& text,
                               const std::string& origin);

}  // namespace noisysep
