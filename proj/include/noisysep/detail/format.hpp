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
#include <cstdio>
#include <string>

namespace noisysep::detail {

// Fixed-format printing keeps reports byte-identical across runs.
inline std::string fmt_double(double value, int precision = 10) {
  if (value == 0.0) value = 0.0;  // fold -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, value);
  return buf;
}

inline std::string fmt_complex(const std::complex<double>& z,
                               int precision = 10) {
  std::string out = fmt_double(z.real(), precision);
  if (z.imag() != 0.0) {
    out += (z.imag() > 0.0 ? "+" : "-");
    out += fmt_double(std::abs(z.imag()), precision);
    out += "i";
  }
  return out;
}

}  // namespace noisysep::detail
