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

// Seeded generators and small oracles shared by the test binaries.  Kept
// free of any test framework so the acceptance runner can reuse them.

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "noisysep/pauli.hpp"

namespace testsupport {

using noisysep::Complex;
using noisysep::ComplexMatrix;
using noisysep::HermitianMatrix;
using noisysep::PauliCoefficients;

inline ComplexMatrix random_complex(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix m(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      m(r, c) = Complex(gauss(rng), gauss(rng));
  return m;
}

// Hermitian with entries of order one; trace unconstrained.
inline HermitianMatrix random_hermitian(std::size_t dim,
                                        std::mt19937_64& rng) {
  const ComplexMatrix g = random_complex(dim, rng);
  ComplexMatrix h(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      h(r, c) = 0.5 * (g(r, c) + std::conj(g(c, r)));
  return HermitianMatrix(h);
}

// Hermitian with unit trace; eigenvalues of either sign.
inline HermitianMatrix random_trace_one_hermitian(std::size_t dim,
                                                  std::mt19937_64& rng) {
  const HermitianMatrix h = random_hermitian(dim, rng);
  ComplexMatrix m = h.matrix();
  const double shift = (1.0 - h.trace()) / static_cast<double>(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) += shift;
  return HermitianMatrix(m);
}

// Positive semidefinite with unit trace: G G^dagger normalized.
inline HermitianMatrix random_density(std::size_t dim, std::mt19937_64& rng) {
  const ComplexMatrix g = random_complex(dim, rng);
  ComplexMatrix h = g * g.adjoint();
  const double trace = h.trace().real();
  h *= Complex(1.0 / trace, 0.0);
  return HermitianMatrix(h, 1e-9);
}

inline PauliCoefficients random_coefficients(int n_qubits,
                                             std::mt19937_64& rng,
                                             double amplitude = 1.0) {
  std::uniform_real_distribution<double> uniform(-amplitude, amplitude);
  PauliCoefficients c(n_qubits);
  for (std::size_t i = 1; i < c.size(); ++i) c.set(i, uniform(rng));
  return c;
}

inline double max_entry_distance(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < a.dim(); ++c)
      worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
  return worst;
}

inline double max_list_distance(const std::vector<double>& a,
                                const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

// Reference partial transpose straight from the index rule, independent of
// the library implementation.
inline ComplexMatrix partial_transpose_oracle(const ComplexMatrix& in) {
  ComplexMatrix out(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          out(2 * i + l, 2 * k + j) = in(2 * i + j, 2 * k + l);
  return out;
}

// Brute-force Kronecker product by the index formula
// out(i*db + k, j*db + l) = a(i, j) * b(k, l).
inline ComplexMatrix kron_oracle(const ComplexMatrix& a,
                                 const ComplexMatrix& b) {
  const std::size_t da = a.dim(), db = b.dim();
  ComplexMatrix out(da * db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t l = 0; l < db; ++l)
          out(i * db + k, j * db + l) = a(i, j) * b(k, l);
  return out;
}

}  // namespace testsupport
