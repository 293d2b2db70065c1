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

#include "noisysep/pauli.hpp"

#include <cmath>

#include "noisysep/errors.hpp"

namespace noisysep {

namespace {

constexpr double kNormalizationTolerance = 1e-9;
constexpr double kImagResidualTolerance = 1e-9;

void require_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 5) {
    throw ParameterOutOfRange("qubit count must be in 1..5, got " +
                              std::to_string(n_qubits));
  }
}

void require_finite(double value) {
  if (!std::isfinite(value)) {
    throw ParameterOutOfRange("coefficients must be finite");
  }
}

// Base-4 digits of a flat index, first qubit most significant.
std::array<int, 5> decode_flat(std::size_t flat, int n_qubits) {
  std::array<int, 5> digits{};
  for (int s = n_qubits - 1; s >= 0; --s) {
    digits[static_cast<std::size_t>(s)] = static_cast<int>(flat & 3u);
    flat >>= 2;
  }
  return digits;
}

}  // namespace

PauliCoefficients::PauliCoefficients(int n_qubits) : n_qubits_(n_qubits) {
  require_qubits(n_qubits);
  coeffs_.assign(std::size_t{1} << (2 * n_qubits), 0.0);
  coeffs_[0] = 1.0;
}

PauliCoefficients::PauliCoefficients(int n_qubits, std::vector<double> coeffs,
                                     double normalization_tolerance)
    : n_qubits_(n_qubits), coeffs_(std::move(coeffs)) {
  require_qubits(n_qubits);
  const std::size_t expected = std::size_t{1} << (2 * n_qubits);
  if (coeffs_.size() != expected) {
    throw DimensionMismatch("coefficient tensor must hold 4^N = " +
                            std::to_string(expected) + " entries");
  }
  for (double v : coeffs_) require_finite(v);
  if (std::abs(coeffs_[0] - 1.0) > normalization_tolerance) {
    throw NotUnitTrace("identity coefficient must equal 1");
  }
  coeffs_[0] = 1.0;
}

PauliCoefficients PauliCoefficients::uniform(int n_qubits, double value) {
  require_finite(value);
  PauliCoefficients c(n_qubits);
  for (std::size_t i = 1; i < c.coeffs_.size(); ++i) c.coeffs_[i] = value;
  return c;
}

double PauliCoefficients::at(std::span<const int> indices) const {
  if (indices.size() != static_cast<std::size_t>(n_qubits_)) {
    throw WrongQubitCount("index tuple length must match qubit count");
  }
  return coeffs_[flat_index(indices)];
}

double PauliCoefficients::at(std::initializer_list<int> indices) const {
  return at(std::span<const int>(indices.begin(), indices.size()));
}

double PauliCoefficients::two_qubit(int a1, int a2) const {
  if (n_qubits_ != 2) {
    throw WrongQubitCount("two_qubit accessor requires a two-qubit tensor");
  }
  const int idx[2] = {a1, a2};
  return coeffs_[flat_index(idx)];
}

void PauliCoefficients::set(std::size_t flat, double value) {
  if (flat >= coeffs_.size()) {
    throw IndexOutOfRange("flat index out of range");
  }
  require_finite(value);
  if (flat == 0 && value != 1.0) {
    throw ParameterOutOfRange("identity coefficient is pinned to 1");
  }
  coeffs_[flat] = value;
}

void PauliCoefficients::set(std::span<const int> indices, double value) {
  if (indices.size() != static_cast<std::size_t>(n_qubits_)) {
    throw WrongQubitCount("index tuple length must match qubit count");
  }
  set(flat_index(indices), value);
}

void PauliCoefficients::set(std::initializer_list<int> indices, double value) {
  set(std::span<const int>(indices.begin(), indices.size()), value);
}

std::size_t PauliCoefficients::flat_index(std::span<const int> indices) {
  std::size_t flat = 0;
  for (int a : indices) {
    if (a < 0 || a > 3) {
      throw IndexOutOfRange("Pauli index must lie in 0..3, got " +
                            std::to_string(a));
    }
    flat = (flat << 2) | static_cast<std::size_t>(a);
  }
  return flat;
}

ComplexMatrix pauli_sigma(int index) {
  ComplexMatrix m(2);
  switch (index) {
    case 0:
      m(0, 0) = 1.0;
      m(1, 1) = 1.0;
      break;
    case 1:
      m(0, 1) = 1.0;
      m(1, 0) = 1.0;
      break;
    case 2:
      m(0, 1) = Complex(0.0, -1.0);
      m(1, 0) = Complex(0.0, 1.0);
      break;
    case 3:
      m(0, 0) = 1.0;
      m(1, 1) = -1.0;
      break;
    default:
      throw IndexOutOfRange("Pauli index must lie in 0..3, got " +
                            std::to_string(index));
  }
  return m;
}

ComplexMatrix pauli_string(std::span<const int> indices) {
  const std::size_t n = indices.size();
  if (n < 1 || n > 5) {
    throw ParameterOutOfRange("Pauli string length must be in 1..5");
  }
  ComplexMatrix m = pauli_sigma(indices[0]);
  for (std::size_t s = 1; s < n; ++s) m = kron(m, pauli_sigma(indices[s]));
  return m;
}

ComplexMatrix pauli_string(std::initializer_list<int> indices) {
  return pauli_string(std::span<const int>(indices.begin(), indices.size()));
}

HermitianMatrix from_coefficients(const PauliCoefficients& c) {
  const int n = c.n_qubits();
  const std::size_t d = std::size_t{1} << n;
  ComplexMatrix acc(d);
  for (std::size_t flat = 0; flat < c.size(); ++flat) {
    const double coeff = c[flat];
    if (coeff == 0.0) continue;
    const auto digits = decode_flat(flat, n);
    const ComplexMatrix str =
        pauli_string(std::span<const int>(digits.data(),
                                          static_cast<std::size_t>(n)));
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t col = 0; col < d; ++col)
        acc(r, col) += coeff * str(r, col);
  }
  acc *= Complex(1.0 / static_cast<double>(d), 0.0);
  return HermitianMatrix(acc);
}

PauliCoefficients to_coefficients(const HermitianMatrix& rho) {
  const int n = rho.n_qubits();
  const double trace = rho.trace();
  if (std::abs(trace - 1.0) > kNormalizationTolerance) {
    throw NotUnitTrace("state trace " + std::to_string(trace) +
                       " differs from 1 beyond 1e-9");
  }

  std::vector<double> out(std::size_t{1} << (2 * n), 0.0);
  for (std::size_t flat = 0; flat < out.size(); ++flat) {
    const auto digits = decode_flat(flat, n);
    const ComplexMatrix str =
        pauli_string(std::span<const int>(digits.data(),
                                          static_cast<std::size_t>(n)));
    const Complex t = trace_product(rho.matrix(), str);
    if (std::abs(t.imag()) > kImagResidualTolerance) {
      throw NonHermitianResidual("coefficient " + std::to_string(flat) +
                                 " has imaginary residual " +
                                 std::to_string(t.imag()));
    }
    out[flat] = t.real();
  }
  return PauliCoefficients(n, std::move(out), kNormalizationTolerance);
}

HermitianMatrix two_qubit_elements(const PauliCoefficients& c) {
  if (c.n_qubits() != 2) {
    throw WrongQubitCount("closed-form element table covers two qubits only");
  }
  const auto cc = [&](int a, int b) { return c.two_qubit(a, b); };
  const Complex i(0.0, 1.0);

  ComplexMatrix m(4);
  m(0, 0) = (1.0 + cc(0, 3) + cc(3, 0) + cc(3, 3)) / 4.0;
  m(0, 1) = (cc(0, 1) - i * cc(0, 2) + cc(3, 1) - i * cc(3, 2)) / 4.0;
  m(0, 2) = (cc(1, 0) + cc(1, 3) - i * cc(2, 0) - i * cc(2, 3)) / 4.0;
  m(0, 3) = (cc(1, 1) - i * cc(1, 2) - i * cc(2, 1) - cc(2, 2)) / 4.0;
  m(1, 0) = (cc(0, 1) + i * cc(0, 2) + cc(3, 1) + i * cc(3, 2)) / 4.0;
  m(1, 1) = (1.0 - cc(0, 3) + cc(3, 0) - cc(3, 3)) / 4.0;
  m(1, 2) = (cc(1, 1) + i * cc(1, 2) - i * cc(2, 1) + cc(2, 2)) / 4.0;
  m(1, 3) = (cc(1, 0) - cc(1, 3) - i * cc(2, 0) + i * cc(2, 3)) / 4.0;
  m(2, 0) = (cc(1, 0) + cc(1, 3) + i * cc(2, 0) + i * cc(2, 3)) / 4.0;
  m(2, 1) = (cc(1, 1) - i * cc(1, 2) + i * cc(2, 1) + cc(2, 2)) / 4.0;
  m(2, 2) = (1.0 + cc(0, 3) - cc(3, 0) - cc(3, 3)) / 4.0;
  m(2, 3) = (cc(0, 1) - i * cc(0, 2) - cc(3, 1) + i * cc(3, 2)) / 4.0;
  m(3, 0) = (cc(1, 1) + i * cc(1, 2) + i * cc(2, 1) - cc(2, 2)) / 4.0;
  m(3, 1) = (cc(1, 0) - cc(1, 3) + i * cc(2, 0) - i * cc(2, 3)) / 4.0;
  m(3, 2) = (cc(0, 1) + i * cc(0, 2) - cc(3, 1) - i * cc(3, 2)) / 4.0;
  m(3, 3) = (1.0 - cc(0, 3) - cc(3, 0) + cc(3, 3)) / 4.0;
  return HermitianMatrix(m);
}

}  // namespace noisysep
