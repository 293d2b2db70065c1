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

#include <stdexcept>

namespace noisysep {

/** Base type for every error raised by this library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** The iterative eigensolver exceeded its sweep budget. */
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/** Matrix dimensions do not match what the operation requires. */
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

/** Input matrix is not Hermitian within the construction tolerance. */
class NonHermitianInput : public Error {
 public:
  using Error::Error;
};

/** A Pauli index lies outside {0,1,2,3}. */
class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/** State trace differs from 1 beyond tolerance. */
class NotUnitTrace : public Error {
 public:
  using Error::Error;
};

/** A Pauli coefficient came out with a non-negligible imaginary part. */
class NonHermitianResidual : public Error {
 public:
  using Error::Error;
};

/** Coefficient tensor has the wrong number of qubits for this operation. */
class WrongQubitCount : public Error {
 public:
  using Error::Error;
};

/** A separability test was asked to classify a non-physical state. */
class NonPhysicalInput : public Error {
 public:
  using Error::Error;
};

/** A scalar argument violates the operation's stated range. */
class ParameterOutOfRange : public Error {
 public:
  using Error::Error;
};

/** The fixed product-basis system lost rank; indicates an internal bug. */
class SingularSystem : public Error {
 public:
  using Error::Error;
};

/** Requested scenario id is not one of the built-in scenarios. */
class UnknownScenario : public Error {
 public:
  using Error::Error;
};

/** Scan grid exceeds the configured point budget. */
class GridTooLarge : public Error {
 public:
  using Error::Error;
};

/** Input file is not syntactically valid. */
class ParseError : public Error {
 public:
  using Error::Error;
};

/** Input file parses but violates the matrix/coefficient schema. */
class SchemaViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace noisysep
