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

#include "noisysep/pauli.hpp"

namespace noisysep {

/**
 * A noisy mixture (1 - epsilon) * I/2^N + epsilon * rho1.
 *
 * rho1 must be Hermitian with unit trace; it is allowed to have negative
 * eigenvalues.  Inputs whose trace differs from 1 beyond 1e-9 are rejected
 * rather than renormalized.  epsilon is accepted on the closed interval
 * [0, 1].
 */
struct MixtureSpec {
  HermitianMatrix rho1;
  double epsilon;

  MixtureSpec(HermitianMatrix rho1_in, double epsilon_in);
};

HermitianMatrix mix(const MixtureSpec& spec);

/**
 * Coefficient scaling law of the mixture: d0 = 1 and d_a = epsilon * c_a
 * for every non-identity index.  Equals
 * to_coefficients(mix(from_coefficients(c), epsilon)).
 */
PauliCoefficients scale_coefficients(const PauliCoefficients& c,
                                     double epsilon);

/**
 * Spectrum of the mixture from the spectrum of rho1:
 * (1 - epsilon)/2^N + epsilon * lambda for each lambda.  Exact because the
 * maximally mixed background commutes with everything.
 */
std::vector<double> eigenvalue_shift(const std::vector<double>& rho1_eigenvalues,
                                     double epsilon, int n_qubits);

/**
 * Largest epsilon keeping the mixture positive semidefinite:
 * 1 / (1 + 2^N * |min eigenvalue|) when rho1 has a negative eigenvalue,
 * otherwise 1.
 */
double max_physical_epsilon(double rho1_min_eigenvalue, int n_qubits);

/** Which formula produced a bound. */
enum class FormulaTag {
  WitnessUniform,
  WitnessGeneral,
  BallBound,
  ContinuousBasis,
  SpectralShift,
};

const char* to_string(FormulaTag tag);

/** Admissible epsilon ranges for one rho1, clamped to [0, 1]. */
struct EpsilonBounds {
  double physicality_max = 1.0;
  double separability_threshold = 1.0;
  FormulaTag formula_tag = FormulaTag::SpectralShift;
};

}  // namespace noisysep
