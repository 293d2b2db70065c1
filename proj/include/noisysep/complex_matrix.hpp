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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace noisysep {

using Complex = std::complex<double>;

/**
 * Dense square complex matrix, row-major storage.
 *
 * This is the raw arithmetic layer: no structural guarantees are attached.
 * States and observables are wrapped in HermitianMatrix, which enforces
 * conjugate symmetry at construction.
 */
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim);
  static ComplexMatrix from_rows(
      std::initializer_list<std::initializer_list<Complex>> rows);

  std::size_t dim() const { return dim_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * dim_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * dim_ + c];
  }

  Complex trace() const;
  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;

  /** Largest |m(r,c) - conj(m(c,r))| over all entries. */
  double hermiticity_defect() const;
  double frobenius_norm() const;
  double max_abs() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex factor);

  friend ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend ComplexMatrix operator*(Complex factor, ComplexMatrix m) {
    m *= factor;
    return m;
  }
  friend ComplexMatrix operator*(const ComplexMatrix& lhs,
                                 const ComplexMatrix& rhs);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/** Kronecker product: out(ra*db+rb, ca*db+cb) = a(ra,ca) * b(rb,cb). */
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/** trace(a * b) without forming the product. */
Complex trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace noisysep
