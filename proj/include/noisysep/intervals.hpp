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

#include <optional>
#include <vector>

#include "noisysep/pauli.hpp"

namespace noisysep {

enum class IntervalMethod { Spectral, Bisection };

const char* to_string(IntervalMethod method);

/**
 * Physicality interval of the uniform-coefficient family: the state with
 * all non-identity coefficients equal to c is positive semidefinite exactly
 * for c in [c_min, c_max].  a_n = -1/c_min and b_n = 1/c_max.
 */
struct UniformInterval {
  int n_qubits;
  double c_min;
  double c_max;
  double a_n;
  double b_n;
  IntervalMethod method;
};

/**
 * Closed-form route: with S the sum of all non-identity Pauli strings, the
 * uniform state is (I + c S)/2^N, so its eigenvalues are (1 + c s_i)/2^N
 * and the endpoints follow from the extreme eigenvalues of S.
 */
UniformInterval uniform_interval_spectral(int n_qubits);

/**
 * Independent search route: expand outward from c = 0 (always physical)
 * by doubling until the state loses positivity, then bisect 60 times with
 * the physicality check as predicate.  tol must be at least 1e-10 and is
 * the guaranteed agreement with the spectral endpoints.
 */
UniformInterval uniform_interval_bisection(int n_qubits, double tol);

/**
 * One table row per qubit count: exact spectral values plus, where they
 * exist, the rounded reference figures quoted to two decimals.
 */
struct AnBnRow {
  int n_qubits;
  double c_min;
  double c_max;
  double a_n;
  double b_n;
  std::optional<double> ref_c_min;
  std::optional<double> ref_c_max;
  std::optional<double> ref_a_n;
  std::optional<double> ref_b_n;
};

/** Rows for N = 1..max_n; max_n must be in 1..5. */
std::vector<AnBnRow> an_bn_table(int max_n);

}  // namespace noisysep
