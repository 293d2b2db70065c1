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
#include <initializer_list>
#include <span>
#include <vector>

#include "noisysep/hermitian.hpp"

namespace noisysep {

/**
 * Real coefficient tensor of a state in the Pauli-string basis.
 *
 * Indexed by (a1,...,aN) with each digit in {0,1,2,3}; qubit 1 is the
 * leftmost Kronecker factor and the most significant base-4 digit of the
 * flat index.  The identity coefficient (flat index 0) is pinned to 1.
 * No range restriction is placed on the other entries: coefficients far
 * outside [-1, 1] are legitimate inputs here.
 */
class PauliCoefficients {
 public:
  /** Identity-only tensor: c0 = 1, everything else 0. */
  explicit PauliCoefficients(int n_qubits);

  /**
   * Adopts a dense tensor of 4^N values in flat index order.  The leading
   * entry must equal 1 within normalization_tolerance and is then pinned
   * to exactly 1; otherwise NotUnitTrace is thrown.
   */
  PauliCoefficients(int n_qubits, std::vector<double> coeffs,
                    double normalization_tolerance = 0.0);

  /** All 4^N - 1 non-identity coefficients equal to value. */
  static PauliCoefficients uniform(int n_qubits, double value);

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return coeffs_.size(); }
  const std::vector<double>& data() const { return coeffs_; }

  double operator[](std::size_t flat) const { return coeffs_[flat]; }
  double at(std::span<const int> indices) const;
  double at(std::initializer_list<int> indices) const;

  /** Two-qubit convenience accessor: c(a1, a2) with digits in 0..3. */
  double two_qubit(int a1, int a2) const;

  void set(std::size_t flat, double value);
  void set(std::span<const int> indices, double value);
  void set(std::initializer_list<int> indices, double value);

  static std::size_t flat_index(std::span<const int> indices);

 private:
  int n_qubits_;
  std::vector<double> coeffs_;
};

/** The 2x2 Pauli matrix for index 0..3 (identity, x, y, z). */
ComplexMatrix pauli_sigma(int index);

/**
 * Kronecker product of one Pauli matrix per qubit, leftmost first.
 * Hermitian; trace 2^N when every index is 0, otherwise traceless.
 */
ComplexMatrix pauli_string(std::span<const int> indices);
ComplexMatrix pauli_string(std::initializer_list<int> indices);

/**
 * rho = (1/2^N) sum_a c_a * string(a).  Hermitian with unit trace by
 * construction; positivity is NOT guaranteed and is checked elsewhere.
 */
HermitianMatrix from_coefficients(const PauliCoefficients& c);

/**
 * Inverts from_coefficients via trace orthogonality: c_a = tr(rho * string(a)).
 * Requires unit trace within 1e-9 (NotUnitTrace otherwise); any coefficient
 * with imaginary residual above 1e-9 raises NonHermitianResidual.
 */
PauliCoefficients to_coefficients(const HermitianMatrix& rho);

/**
 * Builds the two-qubit matrix from the sixteen closed-form element
 * expressions, e.g. rho(0,0) = (1 + c03 + c30 + c33) / 4.  Serves as an
 * independent route that must agree with from_coefficients entrywise.
 */
HermitianMatrix two_qubit_elements(const PauliCoefficients& c);

}  // namespace noisysep
