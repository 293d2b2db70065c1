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

#include "noisysep/separability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "noisysep/detail/format.hpp"
#include "noisysep/errors.hpp"

namespace noisysep {

namespace {

void require_weights(const std::array<double, 3>& w) {
  for (double wi : w) {
    if (!(wi > 0.0 && wi <= 1.0)) {
      throw ParameterOutOfRange("witness weights must lie in (0, 1]");
    }
  }
}

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

bool coefficients_uniform(const PauliCoefficients& c) {
  for (std::size_t i = 2; i < c.size(); ++i)
    if (c[i] != c[1]) return false;
  return true;
}

}  // namespace

const char* to_string(VerdictKind kind) {
  switch (kind) {
    case VerdictKind::NonPhysical: return "non-physical";
    case VerdictKind::PPTSeparable: return "ppt-separable";
    case VerdictKind::NPTEntangled: return "npt-entangled";
    case VerdictKind::PPTInconclusive: return "ppt-inconclusive";
    case VerdictKind::WitnessSatisfied: return "witness-satisfied";
    case VerdictKind::WitnessViolated: return "witness-violated";
  }
  return "unknown";
}

PhysicalityResult physicality_check(const HermitianMatrix& rho,
                                    double tolerance) {
  if (std::abs(rho.trace() - 1.0) > 1e-9) {
    throw NotUnitTrace("physicality check requires unit trace within 1e-9");
  }
  PhysicalityResult result;
  result.report = eigenvalues(rho, tolerance);
  result.physical = result.report.is_psd;
  return result;
}

SeparabilityVerdict ppt_verdict(const HermitianMatrix& rho,
                                double tolerance) {
  if (rho.dim() != 4) {
    throw DimensionMismatch("transpose test entry point requires two qubits");
  }
  const PhysicalityResult phys = physicality_check(rho, tolerance);
  if (!phys.physical) {
    throw NonPhysicalInput("state has min eigenvalue " +
                           detail::fmt_double(phys.report.min_eigenvalue) +
                           "; transpose test requires a physical state");
  }
  const SpectralReport pt = eigenvalues(partial_transpose_second(rho),
                                        tolerance);
  SeparabilityVerdict verdict;
  verdict.kind = pt.is_psd ? VerdictKind::PPTSeparable
                           : VerdictKind::NPTEntangled;
  verdict.min_pt_eigenvalue = pt.min_eigenvalue;
  verdict.detail = "min partial-transpose eigenvalue " +
                   detail::fmt_double(pt.min_eigenvalue);
  return verdict;
}

SeparabilityVerdict classify_state(const HermitianMatrix& rho,
                                   double tolerance) {
  const PhysicalityResult phys = physicality_check(rho, tolerance);
  if (!phys.physical) {
    SeparabilityVerdict verdict;
    verdict.kind = VerdictKind::NonPhysical;
    verdict.detail = "min eigenvalue " +
                     detail::fmt_double(phys.report.min_eigenvalue);
    return verdict;
  }
  if (rho.dim() != 4) {
    SeparabilityVerdict verdict;
    verdict.kind = VerdictKind::PPTInconclusive;
    verdict.detail = "two-qubit transpose test not applicable at dimension " +
                     std::to_string(rho.dim());
    return verdict;
  }
  return ppt_verdict(rho, tolerance);
}

WitnessEvaluation witness_terms(const WitnessInput& input) {
  if (input.d_coeffs.n_qubits() != 2) {
    throw WrongQubitCount("witness terms are defined for two qubits");
  }
  require_weights(input.weights);
  const auto& d = input.d_coeffs;
  const auto& w = input.weights;

  WitnessEvaluation eval;
  eval.min_term = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const double term = w[i - 1] * w[j - 1] + d.two_qubit(i, 0) * w[j - 1] +
                          w[i - 1] * d.two_qubit(0, j) + d.two_qubit(i, j);
      eval.terms[i - 1][j - 1] = term;
      eval.min_term = std::min(eval.min_term, term);
    }
  }
  eval.satisfied = eval.min_term > 0.0;
  return eval;
}

SeparabilityVerdict witness_verdict(const WitnessInput& input) {
  const WitnessEvaluation eval = witness_terms(input);
  SeparabilityVerdict verdict;
  verdict.kind = eval.satisfied ? VerdictKind::WitnessSatisfied
                                : VerdictKind::WitnessViolated;
  verdict.min_witness_term = eval.min_term;
  verdict.detail = "min witness term " + detail::fmt_double(eval.min_term);
  return verdict;
}

EpsilonBounds witness_epsilon_threshold(const PauliCoefficients& rho1_coeffs,
                                        const std::array<double, 3>& weights) {
  if (rho1_coeffs.n_qubits() != 2) {
    throw WrongQubitCount("witness threshold is defined for two qubits");
  }
  require_weights(weights);
  const auto& c = rho1_coeffs;
  const auto& w = weights;

  // term(i,j)(eps) = w_i w_j + eps * slope(i,j); the first zero crossing
  // over the negative-slope terms caps the separable range.
  double threshold = 1.0;
  for (int i = 1; i <= 3; ++i) {
    for (int j = 1; j <= 3; ++j) {
      const double slope = c.two_qubit(i, 0) * w[j - 1] +
                           w[i - 1] * c.two_qubit(0, j) + c.two_qubit(i, j);
      if (slope < 0.0) {
        threshold = std::min(threshold, w[i - 1] * w[j - 1] / (-slope));
      }
    }
  }

  const SpectralReport spectrum = eigenvalues(from_coefficients(rho1_coeffs));

  EpsilonBounds bounds;
  bounds.physicality_max = clamp_unit(
      max_physical_epsilon(spectrum.min_eigenvalue, rho1_coeffs.n_qubits()));
  bounds.separability_threshold = clamp_unit(threshold);
  const bool uniform_weights =
      weights[0] == weights[1] && weights[1] == weights[2];
  bounds.formula_tag = (uniform_weights && coefficients_uniform(rho1_coeffs))
                           ? FormulaTag::WitnessUniform
                           : FormulaTag::WitnessGeneral;
  return bounds;
}

double ball_bound(int n_qubits, double a_n) {
  if (n_qubits < 1 || n_qubits > 5) {
    throw ParameterOutOfRange("n_qubits must be in 1..5");
  }
  if (!(a_n > 0.0)) {
    throw ParameterOutOfRange("a_n must be positive");
  }
  const double denom =
      static_cast<double>((std::size_t{1} << (2 * n_qubits)) - 1);
  return std::min(1.0, a_n / denom);
}

double continuous_basis_bound(int n_qubits, double a) {
  if (n_qubits < 1 || n_qubits > 5) {
    throw ParameterOutOfRange("n_qubits must be in 1..5");
  }
  if (!(a > 1.0)) {
    throw ParameterOutOfRange("the continuous-basis bound requires a > 1");
  }
  const double half_sq =
      static_cast<double>(std::size_t{1} << (2 * n_qubits - 1));
  return a / (a + half_sq);
}

ComplexMatrix product_basis_factor(int index) {
  switch (index) {
    case 0:
      return ComplexMatrix::from_rows({{0.5, 0.0}, {0.0, 0.5}});
    case 1:
      return ComplexMatrix::from_rows(
          {{0.5, Complex(0.0, -0.5)}, {Complex(0.0, 0.5), 0.5}});
    case 2:
      return ComplexMatrix::from_rows({{0.5, 0.5}, {0.5, 0.5}});
    case 3:
      return ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, 0.0}});
    default:
      throw IndexOutOfRange("basis factor index must lie in 0..3");
  }
}

ComplexMatrix product_basis_element(int a, int b) {
  return kron(product_basis_factor(a), product_basis_factor(b));
}

namespace {

// Real coordinates of a Hermitian 4x4 matrix: four diagonal entries, then
// real and imaginary parts of the strict upper triangle.
std::array<double, 16> hermitian_components(const ComplexMatrix& m) {
  std::array<double, 16> out{};
  std::size_t k = 0;
  for (std::size_t r = 0; r < 4; ++r) out[k++] = m(r, r).real();
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = r + 1; c < 4; ++c) {
      out[k++] = m(r, c).real();
      out[k++] = m(r, c).imag();
    }
  }
  return out;
}

// Gaussian elimination with partial pivoting on a 16x16 system.
std::array<double, 16> solve_16(std::array<std::array<double, 16>, 16> a,
                                std::array<double, 16> rhs) {
  constexpr std::size_t n = 16;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    if (std::abs(a[pivot][col]) < 1e-12) {
      throw SingularSystem("product basis system lost rank (internal error)");
    }
    std::swap(a[col], a[pivot]);
    std::swap(rhs[col], rhs[pivot]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  std::array<double, 16> x{};
  for (std::size_t r = n; r-- > 0;) {
    double s = rhs[r];
    for (std::size_t c = r + 1; c < n; ++c) s -= a[r][c] * x[c];
    x[r] = s / a[r][r];
  }
  return x;
}

}  // namespace

ProductBasisDecomposition product_basis_decompose(const HermitianMatrix& rho) {
  if (rho.dim() != 4) {
    throw DimensionMismatch("product basis decomposition requires two qubits");
  }

  std::array<std::array<double, 16>, 16> system{};
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      const auto comps = hermitian_components(product_basis_element(a, b));
      const std::size_t col = static_cast<std::size_t>(a * 4 + b);
      for (std::size_t row = 0; row < 16; ++row) system[row][col] = comps[row];
    }
  }
  const auto x = solve_16(system, hermitian_components(rho.matrix()));

  ComplexMatrix rebuilt(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      const ComplexMatrix element = product_basis_element(a, b);
      const double coeff = x[static_cast<std::size_t>(a * 4 + b)];
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
          rebuilt(r, c) += coeff * element(r, c);
    }

  ProductBasisDecomposition result;
  result.coefficients = x;
  result.reconstruction_residual = (rebuilt - rho.matrix()).frobenius_norm();
  result.all_nonnegative =
      *std::min_element(x.begin(), x.end()) >= -kDefaultPsdTolerance;
  return result;
}

}  // namespace noisysep
