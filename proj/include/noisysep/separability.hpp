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

#include <array>
#include <optional>
#include <string>

#include "noisysep/mixture.hpp"

namespace noisysep {

enum class VerdictKind {
  NonPhysical,
  PPTSeparable,     // two qubits only, where PPT is sufficient
  NPTEntangled,
  PPTInconclusive,  // positive partial transpose is necessary-only here
  WitnessSatisfied,
  WitnessViolated,
};

const char* to_string(VerdictKind kind);

/**
 * Outcome of one separability tool.  Transpose-based and witness-based
 * conclusions are kept separate on purpose: they come from different tools
 * and are reported side by side, never merged.
 */
struct SeparabilityVerdict {
  VerdictKind kind;
  std::optional<double> min_pt_eigenvalue;
  std::optional<double> min_witness_term;
  std::string detail;
};

struct PhysicalityResult {
  SpectralReport report;
  bool physical = false;
};

/**
 * Spectrum plus positivity verdict.  Requires unit trace within 1e-9
 * (NotUnitTrace otherwise); the state is non-physical iff its smallest
 * eigenvalue is below -tolerance.
 */
PhysicalityResult physicality_check(const HermitianMatrix& rho,
                                    double tolerance = kDefaultPsdTolerance);

/**
 * Peres test for a physical two-qubit state: negative partial-transpose
 * spectrum means entangled, nonnegative means separable (sufficiency holds
 * at two qubits).  Throws NonPhysicalInput when rho fails the physicality
 * check, DimensionMismatch when rho is not 4x4.
 */
SeparabilityVerdict ppt_verdict(const HermitianMatrix& rho,
                                double tolerance = kDefaultPsdTolerance);

/**
 * Lenient classifier used by scans and scenarios: emits NonPhysical instead
 * of throwing, and PPTInconclusive for physical states where the two-qubit
 * transpose test does not apply.
 */
SeparabilityVerdict classify_state(const HermitianMatrix& rho,
                                   double tolerance = kDefaultPsdTolerance);

inline constexpr std::array<double, 3> kDefaultWitnessWeights = {
    1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};

/**
 * Inputs to the witness terms: the Pauli coefficients d of the mixed state
 * (two qubits) and a positive weight vector, all entries in (0, 1].
 */
struct WitnessInput {
  PauliCoefficients d_coeffs;
  std::array<double, 3> weights = kDefaultWitnessWeights;
};

struct WitnessEvaluation {
  std::array<std::array<double, 3>, 3> terms;  // term[i-1][j-1], i,j in 1..3
  double min_term = 0.0;
  bool satisfied = false;  // all terms strictly positive
};

/**
 * term(i,j) = w_i w_j + d_i0 w_j + w_i d_0j + d_ij over i,j in 1..3.
 * Negativity of any term means the separable construction behind the
 * witness fails for this weight choice.
 */
WitnessEvaluation witness_terms(const WitnessInput& input);

/** WitnessSatisfied / WitnessViolated wrapper around witness_terms. */
SeparabilityVerdict witness_verdict(const WitnessInput& input);

/**
 * Largest epsilon for which every witness term stays positive when the
 * mixture scales rho1's coefficients c by epsilon.  Each term is affine in
 * epsilon; terms with nonnegative slope impose no bound.  Also reports the
 * physicality ceiling of the same rho1 for context.
 */
EpsilonBounds witness_epsilon_threshold(
    const PauliCoefficients& rho1_coeffs,
    const std::array<double, 3>& weights = kDefaultWitnessWeights);

/** a_n / (4^N - 1), clamped to 1.  a_n must be positive. */
double ball_bound(int n_qubits, double a_n);

/** a / (a + 2^(2N-1)) for a > 1; ParameterOutOfRange otherwise. */
double continuous_basis_bound(int n_qubits, double a);

/** One factor of the fixed product basis: index 0..3 per qubit. */
ComplexMatrix product_basis_factor(int index);

/** Tensor product of two factors, a 4x4 basis element. */
ComplexMatrix product_basis_element(int a, int b);

struct ProductBasisDecomposition {
  std::array<double, 16> coefficients;  // row-major over (a, b)
  double reconstruction_residual = 0.0;
  // When true the decomposition is itself a separability certificate:
  // a convex combination of product states.
  bool all_nonnegative = false;
};

/**
 * Expands a Hermitian 4x4 matrix over the sixteen products of single-qubit
 * density matrices by solving the associated 16x16 real linear system with
 * partially pivoted Gaussian elimination.  The basis is fixed and well
 * conditioned, so SingularSystem signals an internal error.
 */
ProductBasisDecomposition product_basis_decompose(const HermitianMatrix& rho);

}  // namespace noisysep
