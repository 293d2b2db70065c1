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

#include <cmath>

#include "noisysep/errors.hpp"
#include "noisysep/mixture.hpp"
#include "test_support.hpp"

using namespace noisysep;
using namespace testsupport;

TEST_CASE("epsilon zero returns the maximally mixed state") {
  std::mt19937_64 rng(31);
  const HermitianMatrix rho1 = random_trace_one_hermitian(4, rng);
  const HermitianMatrix mixed = mix(MixtureSpec(rho1, 0.0));
  CHECK(max_entry_distance(mixed.matrix(),
                           HermitianMatrix::maximally_mixed(2).matrix()) ==
        0.0);
}

TEST_CASE("epsilon one returns rho1 itself") {
  std::mt19937_64 rng(32);
  const HermitianMatrix rho1 = random_trace_one_hermitian(4, rng);
  const HermitianMatrix mixed = mix(MixtureSpec(rho1, 1.0));
  CHECK(max_entry_distance(mixed.matrix(), rho1.matrix()) < 1e-15);
}

TEST_CASE("mixing the uniform -0.15 state reproduces the quoted entries") {
  const HermitianMatrix rho1 =
      from_coefficients(PauliCoefficients::uniform(2, -0.15));
  const HermitianMatrix mixed = mix(MixtureSpec(rho1, 0.40));
  CHECK(std::abs(mixed(0, 0) - Complex(0.2050, 0.0)) < 1e-12);
  CHECK(std::abs(mixed(1, 1) - Complex(0.2650, 0.0)) < 1e-12);
  CHECK(std::abs(mixed(0, 1) - Complex(-0.03, 0.03)) < 1e-12);
  CHECK(std::abs(mixed(0, 3) - Complex(0.0, 0.03)) < 1e-12);
}

TEST_CASE("mixing the large-coefficient state reproduces the quoted "
          "corner") {
  const HermitianMatrix rho1 =
      from_coefficients(PauliCoefficients::uniform(2, -666.66));
  const HermitianMatrix mixed = mix(MixtureSpec(rho1, 0.0002));
  CHECK(std::abs(mixed(0, 0).real() - 0.150001) < 1e-9);
  CHECK(std::abs(mixed(1, 1).real() - 0.283333) < 1e-6);
  CHECK(std::abs(mixed(0, 1) - Complex(-0.066666, 0.066666)) < 1e-9);
}

TEST_CASE("trace stays one under mixing") {
  std::mt19937_64 rng(33);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 50; ++i) {
      const HermitianMatrix rho1 =
          random_trace_one_hermitian(std::size_t{1} << n, rng);
      for (double eps : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        CHECK(std::abs(mix(MixtureSpec(rho1, eps)).trace() - 1.0) < 1e-12);
      }
    }
  }
}

TEST_CASE("mixture validation") {
  CHECK_THROWS_AS(MixtureSpec(HermitianMatrix(ComplexMatrix::identity(4)),
                              0.5),
                  NotUnitTrace);
  const HermitianMatrix m4 = HermitianMatrix::maximally_mixed(2);
  CHECK_THROWS_AS(MixtureSpec(m4, -0.1), ParameterOutOfRange);
  CHECK_THROWS_AS(MixtureSpec(m4, 1.1), ParameterOutOfRange);
  CHECK_NOTHROW(MixtureSpec(m4, 0.0));
  CHECK_NOTHROW(MixtureSpec(m4, 1.0));
}

TEST_CASE("coefficient scaling matches its examples") {
  const PauliCoefficients c = PauliCoefficients::uniform(2, -0.15);

  const PauliCoefficients same = scale_coefficients(c, 1.0);
  for (std::size_t k = 0; k < c.size(); ++k) CHECK(same[k] == c[k]);

  const PauliCoefficients scaled = scale_coefficients(c, 0.40);
  CHECK(scaled[0] == 1.0);
  for (std::size_t k = 1; k < scaled.size(); ++k)
    CHECK(std::abs(scaled[k] - (-0.06)) < 1e-12);

  const PauliCoefficients tiny =
      scale_coefficients(PauliCoefficients::uniform(2, -666.66), 0.0002);
  for (std::size_t k = 1; k < tiny.size(); ++k)
    CHECK(std::abs(tiny[k] - (-0.133332)) < 1e-12);
}

TEST_CASE("scaling equals extract-after-mix") {
  std::mt19937_64 rng(34);
  for (int i = 0; i < 100; ++i) {
    const PauliCoefficients c = random_coefficients(2, rng);
    for (double eps : {0.0, 0.13, 0.4, 1.0}) {
      const PauliCoefficients via_matrix =
          to_coefficients(mix(MixtureSpec(from_coefficients(c), eps)));
      const PauliCoefficients direct = scale_coefficients(c, eps);
      double worst = 0.0;
      for (std::size_t k = 0; k < c.size(); ++k)
        worst = std::max(worst, std::abs(via_matrix[k] - direct[k]));
      CHECK(worst < 1e-10);
    }
  }
}

TEST_CASE("eigenvalue shift matches its examples") {
  const std::vector<double> flat = eigenvalue_shift({0.1, 0.2, 0.3, 0.4}, 0.0,
                                                    2);
  for (double v : flat) CHECK(v == 0.25);

  const std::vector<double> one =
      eigenvalue_shift({-1077.089496}, 0.0002, 2);
  CHECK(std::abs(one[0] - 0.034532) < 1e-6);

  // Shifting the quoted base spectrum lands on the quoted mixed spectrum
  // to its own four-decimal precision.
  const std::vector<double> mixed =
      eigenvalue_shift({0.0076, 0.2674, 0.3625, 0.3625}, 0.40, 2);
  CHECK(max_list_distance(mixed, {0.15304, 0.25696, 0.2950, 0.2950}) < 1e-12);
  CHECK(max_list_distance(mixed, {0.1530, 0.2569, 0.2950, 0.2950}) < 1e-3);
}

TEST_CASE("spectral shift law agrees with direct diagonalization") {
  std::mt19937_64 rng(35);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i < 50; ++i) {
      const HermitianMatrix rho1 =
          random_trace_one_hermitian(std::size_t{1} << n, rng);
      const auto base = eigenvalues(rho1).eigenvalues;
      for (int g = 0; g <= 10; ++g) {
        const double eps = 0.1 * g;
        const auto direct =
            eigenvalues(mix(MixtureSpec(rho1, eps))).eigenvalues;
        const auto shifted = eigenvalue_shift(base, eps, n);
        CHECK(max_list_distance(direct, shifted) < 1e-8);
      }
    }
  }
}

TEST_CASE("max physical epsilon matches its examples") {
  CHECK(max_physical_epsilon(0.0, 2) == 1.0);
  CHECK(max_physical_epsilon(0.3, 3) == 1.0);

  const double big = max_physical_epsilon(-1077.089496, 2);
  CHECK(std::abs(big - 1.0 / (1.0 + 4.0 * 1077.089496)) < 1e-15);
  CHECK(std::abs(big - 2.3205e-4) < 1e-8);
  CHECK(0.0002 < big);

  // (1 - sqrt(3))/2 is the negative branch of the single-qubit spectrum.
  const double s3 = std::sqrt(3.0);
  const double one_qubit = max_physical_epsilon((1.0 - s3) / 2.0, 1);
  CHECK(std::abs(one_qubit - 1.0 / s3) < 1e-12);
}

TEST_CASE("mixture sits exactly on the physicality boundary at the "
          "critical epsilon") {
  std::mt19937_64 rng(36);
  int exercised = 0;
  for (int n = 1; n <= 3 && exercised < 60; ++n) {
    for (int i = 0; i < 40; ++i) {
      const HermitianMatrix rho1 =
          random_trace_one_hermitian(std::size_t{1} << n, rng);
      const double min_ev = eigenvalues(rho1).min_eigenvalue;
      if (min_ev >= -0.01) continue;
      ++exercised;
      const double critical = max_physical_epsilon(min_ev, n);
      const auto at_boundary =
          eigenvalues(mix(MixtureSpec(rho1, critical)));
      CHECK(std::abs(at_boundary.min_eigenvalue) < 1e-8);
      const auto beyond =
          eigenvalues(mix(MixtureSpec(rho1, critical * (1.0 + 1e-3))));
      CHECK(beyond.min_eigenvalue < -1e-9);
      CHECK_FALSE(beyond.is_psd);
    }
  }
  CHECK(exercised >= 60);
}

TEST_CASE("formula tags render") {
  CHECK(std::string(to_string(FormulaTag::WitnessUniform)) ==
        "witness-uniform");
  CHECK(std::string(to_string(FormulaTag::SpectralShift)) ==
        "spectral-shift");
}
