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

#include <vector>

#include "noisysep/complex_matrix.hpp"

namespace noisysep {

/** Construction tolerance for conjugate symmetry. */
inline constexpr double kHermiticityTolerance = 1e-12;

/** Eigenvalues above -kDefaultPsdTolerance count as nonnegative. */
inline constexpr double kDefaultPsdTolerance = 1e-9;

/**
 * Dense complex matrix with enforced Hermitian symmetry.
 *
 * The dimension must be 2^N for N qubits, N in 1..5.  Construction checks
 * the symmetry defect against a tolerance and then averages each conjugate
 * pair, so the stored matrix is Hermitian exactly (bitwise).
 */
class HermitianMatrix {
 public:
  explicit HermitianMatrix(const ComplexMatrix& m,
                           double tolerance = kHermiticityTolerance);

  /** I / 2^N, the state of complete ignorance. */
  static HermitianMatrix maximally_mixed(int n_qubits);

  const ComplexMatrix& matrix() const { return mat_; }
  std::size_t dim() const { return mat_.dim(); }
  int n_qubits() const { return n_qubits_; }

  /** Real by construction: diagonal imaginary parts are zeroed. */
  double trace() const;

  const Complex& operator()(std::size_t r, std::size_t c) const {
    return mat_(r, c);
  }

 private:
  ComplexMatrix mat_;
  int n_qubits_;
};

/** Sorted spectrum of a Hermitian matrix with its positivity verdict. */
struct SpectralReport {
  std::vector<double> eigenvalues;  // ascending
  double trace = 0.0;
  double min_eigenvalue = 0.0;
  bool is_psd = false;
  double tolerance_used = 0.0;
};

/**
 * All eigenvalues of h, sorted ascending.
 *
 * The complex Hermitian matrix H = A + iB is embedded into the real
 * symmetric [[A, -B], [B, A]] and diagonalized by cyclic Jacobi sweeps;
 * the embedding doubles every eigenvalue, so every second entry of the
 * sorted list is returned.  Deterministic across runs.
 *
 * psd_tolerance must lie in (0, 1e-6); it only affects the is_psd verdict.
 * Throws NonConvergence if the sweep budget is exhausted.
 */
SpectralReport eigenvalues(const HermitianMatrix& h,
                           double psd_tolerance = kDefaultPsdTolerance);

/** Eigenvalues plus unit-norm eigenvectors (columns), for residual checks. */
struct EigenSystem {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // column k pairs with eigenvalues[k]
};

EigenSystem eigensystem(const HermitianMatrix& h);

/**
 * Transpose the second qubit of a two-qubit state:
 * out(2i+l, 2k+j) = in(2i+j, 2k+l).  Involution; preserves the diagonal,
 * the trace and Hermitian symmetry exactly.  Throws DimensionMismatch for
 * inputs that are not 4x4.
 */
HermitianMatrix partial_transpose_second(const HermitianMatrix& rho);

}  // namespace noisysep
