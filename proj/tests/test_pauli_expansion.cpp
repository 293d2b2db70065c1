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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "noisysep/errors.hpp"
#include "noisysep/pauli.hpp"
#include "test_support.hpp"

using namespace noisysep;
using namespace testsupport;

TEST_CASE("pauli strings match their definitions") {
  CHECK(pauli_string({0, 0}) == ComplexMatrix::identity(4));

  const ComplexMatrix z = pauli_string({3});
  CHECK(z(0, 0) == Complex(1.0, 0.0));
  CHECK(z(1, 1) == Complex(-1.0, 0.0));
  CHECK(z(0, 1) == Complex(0.0, 0.0));

  CHECK(pauli_string({1, 2}) ==
        kron_oracle(pauli_sigma(1), pauli_sigma(2)));
}

TEST_CASE("pauli strings are traceless except the identity") {
  for (int n = 1; n <= 3; ++n) {
    const std::size_t count = std::size_t{1} << (2 * n);
    for (std::size_t flat = 0; flat < count; ++flat) {
      std::array<int, 3> digits{};
      std::size_t rest = flat;
      for (int q = n - 1; q >= 0; --q) {
        digits[static_cast<std::size_t>(q)] = static_cast<int>(rest & 3u);
        rest >>= 2;
      }
      const Complex t =
          pauli_string(std::span<const int>(digits.data(),
                                            static_cast<std::size_t>(n)))
              .trace();
      if (flat == 0) {
        CHECK(t == Complex(static_cast<double>(1 << n), 0.0));
      } else {
        CHECK(t == Complex(0.0, 0.0));
      }
    }
  }
}

TEST_CASE("pauli strings are orthogonal under the trace product") {
  for (int n = 1; n <= 3; ++n) {
    const std::size_t count = std::size_t{1} << (2 * n);
    std::vector<ComplexMatrix> strings;
    strings.reserve(count);
    for (std::size_t flat = 0; flat < count; ++flat) {
      std::array<int, 3> digits{};
      std::size_t rest = flat;
      for (int q = n - 1; q >= 0; --q) {
        digits[static_cast<std::size_t>(q)] = static_cast<int>(rest & 3u);
        rest >>= 2;
      }
      strings.push_back(pauli_string(std::span<const int>(
          digits.data(), static_cast<std::size_t>(n))));
    }
    const Complex diag(static_cast<double>(1 << n), 0.0);
    for (std::size_t a = 0; a < count; ++a)
      for (std::size_t b = 0; b < count; ++b) {
        const Complex t = trace_product(strings[a], strings[b]);
        CHECK(t == (a == b ? diag : Complex(0.0, 0.0)));
      }
  }
}

TEST_CASE("index validation") {
  CHECK_THROWS_AS(pauli_string({4}), IndexOutOfRange);
  CHECK_THROWS_AS(pauli_string({-1}), IndexOutOfRange);
  CHECK_THROWS_AS(pauli_string({0, 0, 0, 0, 0, 0}), ParameterOutOfRange);
  CHECK_THROWS_AS(pauli_sigma(7), IndexOutOfRange);
}

TEST_CASE("zero coefficients give the maximally mixed state") {
  for (int n = 1; n <= 3; ++n) {
    const HermitianMatrix rho = from_coefficients(PauliCoefficients(n));
    CHECK(rho.matrix() == HermitianMatrix::maximally_mixed(n).matrix());
  }
}

TEST_CASE("uniform minus-one coefficients build the quoted two-qubit "
          "matrix") {
  const HermitianMatrix rho =
      from_coefficients(PauliCoefficients::uniform(2, -1.0));
  const ComplexMatrix expected = ComplexMatrix::from_rows({
      {Complex(-0.5), Complex(-0.5, 0.5), Complex(-0.5, 0.5),
       Complex(0.0, 0.5)},
      {Complex(-0.5, -0.5), Complex(0.5), Complex(-0.5), Complex(0.0)},
      {Complex(-0.5, -0.5), Complex(-0.5), Complex(0.5), Complex(0.0)},
      {Complex(0.0, -0.5), Complex(0.0), Complex(0.0), Complex(0.5)},
  });
  CHECK(max_entry_distance(rho.matrix(), expected) < 1e-15);
}

TEST_CASE("uniform -0.15 reproduces the quoted corner entry") {
  const HermitianMatrix rho =
      from_coefficients(PauliCoefficients::uniform(2, -0.15));
  CHECK(std::abs(rho(0, 0) - Complex(0.1375, 0.0)) < 1e-12);
  CHECK(std::abs(rho(1, 1) - Complex(0.2875, 0.0)) < 1e-12);
  CHECK(std::abs(rho(0, 3) - Complex(0.0, 0.075)) < 1e-12);
}

TEST_CASE("expansion yields unit trace and exact hermiticity") {
  std::mt19937_64 rng(21);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 100; ++i) {
      const HermitianMatrix rho =
          from_coefficients(random_coefficients(n, rng));
      CHECK(std::abs(rho.trace() - 1.0) < 1e-12);
      CHECK(rho.matrix().hermiticity_defect() == 0.0);
    }
  }
}

TEST_CASE("round trip recovers the coefficients") {
  std::mt19937_64 rng(22);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 200; ++i) {
      const PauliCoefficients c = random_coefficients(n, rng);
      const PauliCoefficients back = to_coefficients(from_coefficients(c));
      double worst = 0.0;
      for (std::size_t k = 0; k < c.size(); ++k)
        worst = std::max(worst, std::abs(c[k] - back[k]));
      CHECK(worst < 1e-10);
    }
  }
}

TEST_CASE("extraction matches the known coefficient sets") {
  const PauliCoefficients mixed =
      to_coefficients(HermitianMatrix::maximally_mixed(2));
  for (std::size_t k = 1; k < mixed.size(); ++k) CHECK(mixed[k] == 0.0);
  CHECK(mixed[0] == 1.0);

  const PauliCoefficients uniform =
      to_coefficients(from_coefficients(PauliCoefficients::uniform(2, -0.15)));
  for (std::size_t k = 1; k < uniform.size(); ++k)
    CHECK(std::abs(uniform[k] - (-0.15)) < 1e-9);
}

TEST_CASE("extraction rejects non-unit trace") {
  CHECK_THROWS_AS(to_coefficients(HermitianMatrix(ComplexMatrix::identity(4))),
                  NotUnitTrace);
}

TEST_CASE("closed-form element table equals the generic expansion") {
  // Fixed spot checks first.
  const PauliCoefficients zeros(2);
  const HermitianMatrix diag = two_qubit_elements(zeros);
  for (std::size_t i = 0; i < 4; ++i) CHECK(diag(i, i) == Complex(0.25, 0.0));

  const HermitianMatrix uniform =
      two_qubit_elements(PauliCoefficients::uniform(2, -0.15));
  CHECK(std::abs(uniform(0, 0) - Complex(0.1375, 0.0)) < 1e-12);

  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const PauliCoefficients c = random_coefficients(2, rng);
    const double dev = max_entry_distance(two_qubit_elements(c).matrix(),
                                          from_coefficients(c).matrix());
    CHECK(dev < 1e-12);
  }
}

TEST_CASE("element table refuses other qubit counts") {
  CHECK_THROWS_AS(two_qubit_elements(PauliCoefficients(1)), WrongQubitCount);
  CHECK_THROWS_AS(two_qubit_elements(PauliCoefficients(3)), WrongQubitCount);
}

TEST_CASE("coefficient tensor guards its invariants") {
  PauliCoefficients c(2);
  CHECK_THROWS_AS(c.set(0, 0.5), ParameterOutOfRange);
  CHECK_THROWS_AS(c.set(1, std::nan("")), ParameterOutOfRange);
  CHECK_THROWS_AS(c.set(16, 0.5), IndexOutOfRange);
  CHECK_THROWS_AS(c.set({1, 4}, 0.5), IndexOutOfRange);
  CHECK_THROWS_AS(c.set({1}, 0.5), WrongQubitCount);
  CHECK_THROWS_AS(PauliCoefficients(2, std::vector<double>(16, 0.0)),
                  NotUnitTrace);
  CHECK_THROWS_AS(PauliCoefficients(2, std::vector<double>(15, 1.0)),
                  DimensionMismatch);

  // Coefficients far outside [-1, 1] are allowed by design.
  CHECK_NOTHROW(PauliCoefficients::uniform(2, -666.66));
  CHECK(PauliCoefficients::uniform(2, -666.66).two_qubit(1, 1) == -666.66);
}
