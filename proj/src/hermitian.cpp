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

#include "noisysep/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "noisysep/errors.hpp"

namespace noisysep {

namespace {

constexpr int kMaxSweeps = 100;
// Convergence cut for the off-diagonal Frobenius norm, relative to the
// input scale; an absolute cut is unreachable in doubles once matrix norms
// reach ~1e3.
constexpr double kOffDiagonalFactor = 1e-12;

bool power_of_two_qubit_dim(std::size_t d) {
  return d >= 2 && d <= 32 && (d & (d - 1)) == 0;
}

int qubits_for_dim(std::size_t d) {
  int n = 0;
  while ((std::size_t{1} << n) < d) ++n;
  return n;
}

double off_diagonal_sq(const std::vector<double>& a, std::size_t n) {
  double s = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (r != c) s += a[r * n + c] * a[r * n + c];
  return s;
}

double frobenius_sq(const std::vector<double>& a) {
  double s = 0.0;
  for (double v : a) s += v * v;
  return s;
}

// One Givens rotation annihilating a(p,q), with the usual tau-form updates
// for numerical stability.  v, when present, accumulates V <- V J so its
// columns end up as eigenvectors.
void jacobi_rotate(std::vector<double>& a, std::vector<double>* v,
                   std::size_t n, std::size_t p, std::size_t q) {
  const double apq = a[p * n + q];
  if (apq == 0.0) return;
  const double app = a[p * n + p];
  const double aqq = a[q * n + q];
  const double theta = 0.5 * (aqq - app) / apq;
  double t;
  if (std::abs(theta) > 1e10) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const double tau = s / (1.0 + c);

  a[p * n + p] = app - t * apq;
  a[q * n + q] = aqq + t * apq;
  a[p * n + q] = 0.0;
  a[q * n + p] = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double arp = a[r * n + p];
    const double arq = a[r * n + q];
    const double nrp = arp - s * (arq + tau * arp);
    const double nrq = arq + s * (arp - tau * arq);
    a[r * n + p] = nrp;
    a[p * n + r] = nrp;
    a[r * n + q] = nrq;
    a[q * n + r] = nrq;
  }
  if (v) {
    for (std::size_t r = 0; r < n; ++r) {
      const double vrp = (*v)[r * n + p];
      const double vrq = (*v)[r * n + q];
      (*v)[r * n + p] = vrp - s * (vrq + tau * vrp);
      (*v)[r * n + q] = vrq + s * (vrp - tau * vrq);
    }
  }
}

struct SymmetricEigenResult {
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column k pairs with values[k]; empty if
                                // not requested
};

SymmetricEigenResult symmetric_eigen(std::vector<double> a, std::size_t n,
                                     bool want_vectors) {
  std::vector<double> v;
  if (want_vectors) {
    v.assign(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  }

  const double scale = std::max(1.0, std::sqrt(frobenius_sq(a)));
  const double target_sq =
      (kOffDiagonalFactor * scale) * (kOffDiagonalFactor * scale);

  bool converged = off_diagonal_sq(a, n) <= target_sq;
  for (int sweep = 0; sweep < kMaxSweeps && !converged; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        jacobi_rotate(a, want_vectors ? &v : nullptr, n, p, q);
    converged = off_diagonal_sq(a, n) <= target_sq;
  }
  if (!converged) {
    throw NonConvergence("jacobi sweep budget (" +
                         std::to_string(kMaxSweeps) + ") exhausted");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t lhs, std::size_t rhs) {
                     return a[lhs * n + lhs] < a[rhs * n + rhs];
                   });

  SymmetricEigenResult res;
  res.values.resize(n);
  for (std::size_t k = 0; k < n; ++k) res.values[k] = a[order[k] * n + order[k]];
  if (want_vectors) {
    res.vectors.assign(n * n, 0.0);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t r = 0; r < n; ++r)
        res.vectors[r * n + k] = v[r * n + order[k]];
  }
  return res;
}

// [[A, -B], [B, A]] for H = A + iB; symmetric because A is symmetric and
// B antisymmetric.  Each eigenvalue of H appears twice.
std::vector<double> embed_real(const HermitianMatrix& h) {
  const std::size_t d = h.dim();
  const std::size_t n = 2 * d;
  std::vector<double> a(n * n);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const double re = h(r, c).real();
      const double im = h(r, c).imag();
      a[r * n + c] = re;
      a[(r + d) * n + (c + d)] = re;
      a[r * n + (c + d)] = -im;
      a[(r + d) * n + c] = im;
    }
  }
  return a;
}

}  // namespace

HermitianMatrix::HermitianMatrix(const ComplexMatrix& m, double tolerance)
    : mat_(m.dim()), n_qubits_(0) {
  const std::size_t d = m.dim();
  if (!power_of_two_qubit_dim(d)) {
    throw DimensionMismatch("dimension must be 2^N with N in 1..5, got " +
                            std::to_string(d));
  }
  const double defect = m.hermiticity_defect();
  if (!(defect <= tolerance)) {
    throw NonHermitianInput("hermiticity defect " + std::to_string(defect) +
                            " exceeds tolerance");
  }
  for (std::size_t r = 0; r < d; ++r) {
    mat_(r, r) = Complex(m(r, r).real(), 0.0);
    for (std::size_t c = r + 1; c < d; ++c) {
      const Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
      mat_(r, c) = avg;
      mat_(c, r) = std::conj(avg);
    }
  }
  n_qubits_ = qubits_for_dim(d);
}

HermitianMatrix HermitianMatrix::maximally_mixed(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 5) {
    throw ParameterOutOfRange("n_qubits must be in 1..5");
  }
  const std::size_t d = std::size_t{1} << n_qubits;
  ComplexMatrix m(d);
  const double p = 1.0 / static_cast<double>(d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = p;
  return HermitianMatrix(m);
}

double HermitianMatrix::trace() const { return mat_.trace().real(); }

SpectralReport eigenvalues(const HermitianMatrix& h, double psd_tolerance) {
  if (!(psd_tolerance > 0.0 && psd_tolerance < 1e-6)) {
    throw ParameterOutOfRange("psd tolerance must lie in (0, 1e-6)");
  }
  const std::size_t d = h.dim();
  const auto sym = symmetric_eigen(embed_real(h), 2 * d, false);

  SpectralReport report;
  report.eigenvalues.resize(d);
  for (std::size_t k = 0; k < d; ++k)
    report.eigenvalues[k] = sym.values[2 * k];
  report.trace = h.trace();
  report.min_eigenvalue = report.eigenvalues.front();
  report.tolerance_used = psd_tolerance;
  report.is_psd = report.min_eigenvalue >= -psd_tolerance;
  return report;
}

EigenSystem eigensystem(const HermitianMatrix& h) {
  const std::size_t d = h.dim();
  const std::size_t n = 2 * d;
  const auto sym = symmetric_eigen(embed_real(h), n, true);

  EigenSystem sys;
  sys.eigenvalues.resize(d);
  sys.eigenvectors = ComplexMatrix(d);
  for (std::size_t k = 0; k < d; ++k) {
    const std::size_t col = 2 * k;
    sys.eigenvalues[k] = sym.values[col];
    for (std::size_t r = 0; r < d; ++r) {
      sys.eigenvectors(r, k) = Complex(sym.vectors[r * n + col],
                                       sym.vectors[(r + d) * n + col]);
    }
  }
  return sys;
}

HermitianMatrix partial_transpose_second(const HermitianMatrix& rho) {
  if (rho.dim() != 4) {
    throw DimensionMismatch("partial transpose entry point requires a 4x4 "
                            "two-qubit state");
  }
  ComplexMatrix out(4);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          out(2 * i + l, 2 * k + j) = rho(2 * i + j, 2 * k + l);
  return HermitianMatrix(out);
}

}  // namespace noisysep
