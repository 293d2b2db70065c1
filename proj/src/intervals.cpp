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

#include "noisysep/intervals.hpp"

#include <array>
#include <cmath>

#include "noisysep/errors.hpp"
#include "noisysep/separability.hpp"

namespace noisysep {

namespace {

// Sum of every non-identity Pauli string; the uniform state is
// (I + c S) / 2^N.
ComplexMatrix uniform_direction(int n_qubits) {
  const std::size_t d = std::size_t{1} << n_qubits;
  const std::size_t count = std::size_t{1} << (2 * n_qubits);
  ComplexMatrix s(d);
  std::array<int, 5> digits{};
  for (std::size_t flat = 1; flat < count; ++flat) {
    std::size_t rest = flat;
    for (int q = n_qubits - 1; q >= 0; --q) {
      digits[static_cast<std::size_t>(q)] = static_cast<int>(rest & 3u);
      rest >>= 2;
    }
    s += pauli_string(std::span<const int>(
        digits.data(), static_cast<std::size_t>(n_qubits)));
  }
  return s;
}

bool uniform_state_physical(int n_qubits, double c) {
  return physicality_check(
             from_coefficients(PauliCoefficients::uniform(n_qubits, c)))
      .physical;
}

// Doubles outward from zero until positivity is lost, then bisects.
// Returns the physical-side endpoint.
double bisect_endpoint(int n_qubits, double direction) {
  double inner = 0.0;
  double outer = 0.5 * direction;
  int expansions = 0;
  while (uniform_state_physical(n_qubits, outer)) {
    inner = outer;
    outer *= 2.0;
    if (++expansions > 60) {
      throw NonConvergence("failed to bracket the physicality boundary");
    }
  }
  for (int i = 0; i < 60; ++i) {
    const double mid = 0.5 * (inner + outer);
    if (uniform_state_physical(n_qubits, mid)) {
      inner = mid;
    } else {
      outer = mid;
    }
  }
  return inner;
}

}  // namespace

const char* to_string(IntervalMethod method) {
  switch (method) {
    case IntervalMethod::Spectral: return "spectral";
    case IntervalMethod::Bisection: return "bisection";
  }
  return "unknown";
}

UniformInterval uniform_interval_spectral(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 5) {
    throw ParameterOutOfRange("n_qubits must be in 1..5");
  }
  const HermitianMatrix s(uniform_direction(n_qubits));
  const SpectralReport spectrum = eigenvalues(s);
  const double s_max = spectrum.eigenvalues.back();
  const double s_min = spectrum.eigenvalues.front();

  UniformInterval interval;
  interval.n_qubits = n_qubits;
  interval.c_min = -1.0 / s_max;
  interval.c_max = -1.0 / s_min;  // s_min < 0
  interval.a_n = s_max;
  interval.b_n = -s_min;
  interval.method = IntervalMethod::Spectral;
  return interval;
}

UniformInterval uniform_interval_bisection(int n_qubits, double tol) {
  if (n_qubits < 1 || n_qubits > 5) {
    throw ParameterOutOfRange("n_qubits must be in 1..5");
  }
  if (!(tol >= 1e-10)) {
    throw ParameterOutOfRange("bisection tolerance must be at least 1e-10");
  }
  UniformInterval interval;
  interval.n_qubits = n_qubits;
  interval.c_max = bisect_endpoint(n_qubits, +1.0);
  interval.c_min = bisect_endpoint(n_qubits, -1.0);
  interval.a_n = -1.0 / interval.c_min;
  interval.b_n = 1.0 / interval.c_max;
  interval.method = IntervalMethod::Bisection;
  return interval;
}

std::vector<AnBnRow> an_bn_table(int max_n) {
  if (max_n < 1 || max_n > 5) {
    throw ParameterOutOfRange("max_n must be in 1..5");
  }

  // Two-decimal reference endpoints; the quoted (A, B) pairs are the
  // reciprocals of those roundings.
  struct Ref {
    double c_min, c_max;
    std::optional<double> a, b;
  };
  static const std::array<std::optional<Ref>, 5> refs = {
      Ref{-0.58, 0.58, std::nullopt, std::nullopt},
      Ref{-0.15, 0.33, 6.67, 3.03},
      Ref{-0.05, 0.15, 20.00, 6.67},
      std::nullopt,
      std::nullopt,
  };

  std::vector<AnBnRow> rows;
  rows.reserve(static_cast<std::size_t>(max_n));
  for (int n = 1; n <= max_n; ++n) {
    const UniformInterval interval = uniform_interval_spectral(n);
    AnBnRow row;
    row.n_qubits = n;
    row.c_min = interval.c_min;
    row.c_max = interval.c_max;
    row.a_n = interval.a_n;
    row.b_n = interval.b_n;
    const auto& ref = refs[static_cast<std::size_t>(n - 1)];
    if (ref) {
      row.ref_c_min = ref->c_min;
      row.ref_c_max = ref->c_max;
      row.ref_a_n = ref->a;
      row.ref_b_n = ref->b;
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace noisysep
