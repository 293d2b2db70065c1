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

#include "noisysep/scan.hpp"

#include <cmath>

#include "noisysep/detail/format.hpp"
#include "noisysep/errors.hpp"
#include "noisysep/separability.hpp"

namespace noisysep {

std::size_t GridSpec::count() const {
  if (stop == start) return 1;
  return static_cast<std::size_t>(
             std::floor((stop - start) / step + 1e-9)) + 1;
}

std::vector<double> GridSpec::values() const {
  const std::size_t n = count();
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = start + static_cast<double>(i) * step;
  return out;
}

GridSpec parse_grid(const std::string& text) {
  const auto parse_number = [&](const std::string& part) {
    std::size_t consumed = 0;
    double v = 0.0;
    try {
      v = std::stod(part, &consumed);
    } catch (const std::exception&) {
      throw ParseError("grid component '" + part + "' is not a number");
    }
    if (consumed != part.size() || !std::isfinite(v)) {
      throw ParseError("grid component '" + part + "' is not a number");
    }
    return v;
  };

  const std::size_t first = text.find(':');
  if (first == std::string::npos) {
    const double v = parse_number(text);
    return GridSpec{v, v, 1.0};
  }
  const std::size_t second = text.find(':', first + 1);
  if (second == std::string::npos || text.find(':', second + 1) !=
                                         std::string::npos) {
    throw ParseError("grid must be 'start:stop:step' or a single value");
  }
  GridSpec spec{parse_number(text.substr(0, first)),
                parse_number(text.substr(first + 1, second - first - 1)),
                parse_number(text.substr(second + 1))};
  if (!(spec.step > 0.0)) {
    throw ParseError("grid step must be positive");
  }
  if (spec.stop < spec.start) {
    throw ParseError("grid stop must not precede start");
  }
  return spec;
}

std::vector<ScanPoint> scan_plane(int n_qubits, const GridSpec& c_grid,
                                  const GridSpec& eps_grid) {
  if (n_qubits != 2) {
    throw ParameterOutOfRange("the (c, epsilon) scan covers two qubits only");
  }
  const std::size_t total = c_grid.count() * eps_grid.count();
  if (total > kMaxScanPoints) {
    throw GridTooLarge("grid holds " + std::to_string(total) +
                       " points; limit is " + std::to_string(kMaxScanPoints));
  }

  const std::vector<double> cs = c_grid.values();
  const std::vector<double> epss = eps_grid.values();

  std::vector<ScanPoint> points;
  points.reserve(total);
  for (const double c : cs) {
    const PauliCoefficients coeffs = PauliCoefficients::uniform(2, c);
    const HermitianMatrix rho1 = from_coefficients(coeffs);
    for (double eps : epss) {
      // Grid arithmetic can overshoot the endpoints by an ulp; snap so a
      // 0..1 grid never trips the mixture range check.
      if (std::abs(eps - 1.0) < 1e-12) eps = 1.0;
      if (std::abs(eps) < 1e-12) eps = 0.0;
      const HermitianMatrix rho_eps = mix(MixtureSpec(rho1, eps));
      const SpectralReport spectrum = eigenvalues(rho_eps);

      ScanPoint point;
      point.c = c;
      point.epsilon = eps;
      point.physical = spectrum.is_psd;
      point.min_eigenvalue = spectrum.min_eigenvalue;
      if (point.physical) {
        point.ppt_min_eigenvalue =
            eigenvalues(partial_transpose_second(rho_eps)).min_eigenvalue;
        point.witness_min_term =
            witness_terms({scale_coefficients(coeffs, eps)}).min_term;
      }
      points.push_back(point);
    }
  }
  return points;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanPoint>& points) {
  const auto field = [](const std::optional<double>& v) {
    return v ? detail::fmt_double(*v, 12) : std::string();
  };
  out << "c,epsilon,physical,min_eigenvalue,ppt_min_eigenvalue,"
         "witness_min_term\n";
  for (const auto& p : points) {
    out << detail::fmt_double(p.c, 12) << ','
        << detail::fmt_double(p.epsilon, 12) << ','
        << (p.physical ? "true" : "false") << ','
        << detail::fmt_double(p.min_eigenvalue, 12) << ','
        << field(p.ppt_min_eigenvalue) << ','
        << field(p.witness_min_term) << '\n';
  }
}

}  // namespace noisysep
