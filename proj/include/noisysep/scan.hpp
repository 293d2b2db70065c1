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

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace noisysep {

/** Inclusive arithmetic grid start, start+step, ..., up to stop. */
struct GridSpec {
  double start;
  double stop;
  double step;

  std::size_t count() const;
  std::vector<double> values() const;
};

/** Accepts "start:stop:step" or a single value "v". */
GridSpec parse_grid(const std::string& text);

/**
 * One classified point of the uniform-coefficient (c, epsilon) plane.
 * The transpose and witness fields are filled only when the mixed state
 * is physical.
 */
struct ScanPoint {
  double c;
  double epsilon;
  bool physical;
  double min_eigenvalue;  // of the mixed state
  std::optional<double> ppt_min_eigenvalue;
  std::optional<double> witness_min_term;
};

inline constexpr std::size_t kMaxScanPoints = 1'000'000;

/**
 * Classifies every grid point in row-major order (c outer, epsilon inner).
 * Only two qubits are supported; grids beyond kMaxScanPoints raise
 * GridTooLarge.
 */
std::vector<ScanPoint> scan_plane(int n_qubits, const GridSpec& c_grid,
                                  const GridSpec& eps_grid);

/**
 * Fixed header and column order:
 * c,epsilon,physical,min_eigenvalue,ppt_min_eigenvalue,witness_min_term
 */
void write_scan_csv(std::ostream& out, const std::vector<ScanPoint>& points);

}  // namespace noisysep
