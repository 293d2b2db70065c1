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

#include "noisysep/mixture.hpp"

#include <algorithm>
#include <cmath>

#include "noisysep/errors.hpp"

namespace noisysep {

MixtureSpec::MixtureSpec(HermitianMatrix rho1_in, double epsilon_in)
    : rho1(std::move(rho1_in)), epsilon(epsilon_in) {
  if (std::abs(rho1.trace() - 1.0) > 1e-9) {
    throw NotUnitTrace("rho1 trace differs from 1 beyond 1e-9; inputs are "
                       "rejected rather than renormalized");
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw ParameterOutOfRange("epsilon must lie in [0, 1]");
  }
}

HermitianMatrix mix(const MixtureSpec& spec) {
  const std::size_t d = spec.rho1.dim();
  const double background =
      (1.0 - spec.epsilon) / static_cast<double>(d);
  ComplexMatrix out(d);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c)
      out(r, c) = spec.epsilon * spec.rho1(r, c);
    out(r, r) += background;
  }
  return HermitianMatrix(out);
}

PauliCoefficients scale_coefficients(const PauliCoefficients& c,
                                     double epsilon) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw ParameterOutOfRange("epsilon must lie in [0, 1]");
  }
  std::vector<double> scaled(c.size());
  scaled[0] = 1.0;
  for (std::size_t i = 1; i < c.size(); ++i) scaled[i] = epsilon * c[i];
  return PauliCoefficients(c.n_qubits(), std::move(scaled));
}

std::vector<double> eigenvalue_shift(
    const std::vector<double>& rho1_eigenvalues, double epsilon,
    int n_qubits) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw ParameterOutOfRange("epsilon must lie in [0, 1]");
  }
  const double background =
      (1.0 - epsilon) / static_cast<double>(std::size_t{1} << n_qubits);
  std::vector<double> shifted(rho1_eigenvalues.size());
  for (std::size_t i = 0; i < shifted.size(); ++i)
    shifted[i] = background + epsilon * rho1_eigenvalues[i];
  return shifted;
}

double max_physical_epsilon(double rho1_min_eigenvalue, int n_qubits) {
  if (rho1_min_eigenvalue >= 0.0) return 1.0;
  const double d = static_cast<double>(std::size_t{1} << n_qubits);
  return 1.0 / (1.0 + d * std::abs(rho1_min_eigenvalue));
}

const char* to_string(FormulaTag tag) {
  switch (tag) {
    case FormulaTag::WitnessUniform: return "witness-uniform";
    case FormulaTag::WitnessGeneral: return "witness-general";
    case FormulaTag::BallBound: return "ball-bound";
    case FormulaTag::ContinuousBasis: return "continuous-basis";
    case FormulaTag::SpectralShift: return "spectral-shift";
  }
  return "unknown";
}

}  // namespace noisysep
