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

// Command line front end.  Exit codes: 0 all checks pass, 1 any reference
// comparison fails, 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "noisysep/detail/format.hpp"
#include "noisysep/errors.hpp"
#include "noisysep/intervals.hpp"
#include "noisysep/io.hpp"
#include "noisysep/scan.hpp"
#include "noisysep/scenario.hpp"
#include "noisysep/separability.hpp"

namespace {

using noisysep::detail::fmt_double;

void write_intervals_csv(std::ostream& out,
                         const std::vector<noisysep::AnBnRow>& rows) {
  const auto field = [](const std::optional<double>& v) {
    return v ? fmt_double(*v, 12) : std::string();
  };
  out << "n_qubits,c_min,c_max,a_n,b_n,ref_c_min,ref_c_max,ref_a_n,ref_b_n\n";
  for (const auto& row : rows) {
    out << row.n_qubits << ',' << fmt_double(row.c_min, 12) << ','
        << fmt_double(row.c_max, 12) << ',' << fmt_double(row.a_n, 12) << ','
        << fmt_double(row.b_n, 12) << ',' << field(row.ref_c_min) << ','
        << field(row.ref_c_max) << ',' << field(row.ref_a_n) << ','
        << field(row.ref_b_n) << '\n';
  }
}

int run_scenario_command(const std::string& id, bool as_json) {
  const noisysep::ScenarioResult result = noisysep::run_scenario(id);
  std::cout << (as_json ? noisysep::render_json(result)
                        : noisysep::render_text(result));
  return result.all_pass() ? 0 : 1;
}

int run_scan_command(int n_qubits, const std::string& c_spec,
                     const std::string& eps_spec,
                     const std::string& out_path) {
  const auto points = noisysep::scan_plane(
      n_qubits, noisysep::parse_grid(c_spec), noisysep::parse_grid(eps_spec));
  if (out_path.empty()) {
    noisysep::write_scan_csv(std::cout, points);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw noisysep::ParseError("cannot write " + out_path);
    noisysep::write_scan_csv(out, points);
  }
  return 0;
}

int run_intervals_command(int max_n, const std::string& out_path) {
  const auto rows = noisysep::an_bn_table(max_n);
  if (out_path.empty()) {
    write_intervals_csv(std::cout, rows);
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw noisysep::ParseError("cannot write " + out_path);
    write_intervals_csv(out, rows);
  }
  return 0;
}

nlohmann::ordered_json spectrum_json(const noisysep::SpectralReport& report) {
  nlohmann::ordered_json j;
  j["eigenvalues"] = report.eigenvalues;
  j["trace"] = report.trace;
  j["min_eigenvalue"] = report.min_eigenvalue;
  j["is_psd"] = report.is_psd;
  return j;
}

void print_spectrum_text(const std::string& label,
                         const noisysep::SpectralReport& report) {
  std::cout << label << " spectrum:";
  for (double v : report.eigenvalues) std::cout << " " << fmt_double(v);
  std::cout << " (trace " << fmt_double(report.trace) << ", "
            << (report.is_psd ? "physical" : "non-physical") << ")\n";
}

int run_analyze_command(const std::string& matrix_path,
                        std::optional<double> epsilon, bool as_json) {
  const noisysep::HermitianMatrix rho1 = noisysep::read_matrix(matrix_path);
  const noisysep::SpectralReport spectrum1 = noisysep::eigenvalues(rho1);
  const double max_eps =
      noisysep::max_physical_epsilon(spectrum1.min_eigenvalue,
                                     rho1.n_qubits());

  nlohmann::ordered_json j;
  if (as_json) {
    j["input"] = matrix_path;
    j["n_qubits"] = rho1.n_qubits();
    j["rho1"] = spectrum_json(spectrum1);
    j["max_physical_epsilon"] = max_eps;
  } else {
    std::cout << "matrix " << matrix_path << " (" << rho1.dim() << "x"
              << rho1.dim() << ")\n";
    print_spectrum_text("rho1", spectrum1);
    std::cout << "max physical epsilon: " << fmt_double(max_eps) << "\n";
  }

  const bool two_qubits = rho1.n_qubits() == 2;
  if (two_qubits) {
    const noisysep::PauliCoefficients coeffs = noisysep::to_coefficients(rho1);
    const noisysep::EpsilonBounds bounds =
        noisysep::witness_epsilon_threshold(coeffs);
    if (as_json) {
      j["witness_threshold"] = bounds.separability_threshold;
      j["witness_threshold_formula"] = noisysep::to_string(bounds.formula_tag);
    } else {
      std::cout << "witness separability threshold: "
                << fmt_double(bounds.separability_threshold) << " ["
                << noisysep::to_string(bounds.formula_tag) << "]\n";
    }

    if (epsilon) {
      const noisysep::HermitianMatrix rho_eps =
          noisysep::mix(noisysep::MixtureSpec(rho1, *epsilon));
      const noisysep::SpectralReport spectrum_eps =
          noisysep::eigenvalues(rho_eps);
      const noisysep::SeparabilityVerdict transpose =
          noisysep::classify_state(rho_eps);
      const noisysep::SeparabilityVerdict witness = noisysep::witness_verdict(
          {noisysep::scale_coefficients(coeffs, *epsilon)});
      if (as_json) {
        j["epsilon"] = *epsilon;
        j["rho_eps"] = spectrum_json(spectrum_eps);
        j["transpose_verdict"] = noisysep::to_string(transpose.kind);
        if (transpose.min_pt_eigenvalue)
          j["min_pt_eigenvalue"] = *transpose.min_pt_eigenvalue;
        j["witness_verdict"] = noisysep::to_string(witness.kind);
        j["min_witness_term"] = *witness.min_witness_term;
      } else {
        print_spectrum_text("rho_eps (epsilon " + fmt_double(*epsilon) + ")",
                            spectrum_eps);
        std::cout << "transpose verdict: "
                  << noisysep::to_string(transpose.kind);
        if (!transpose.detail.empty())
          std::cout << " (" << transpose.detail << ")";
        std::cout << "\nwitness verdict: " << noisysep::to_string(witness.kind)
                  << " (" << witness.detail << ")\n";
      }
    }
  } else if (epsilon) {
    const noisysep::HermitianMatrix rho_eps =
        noisysep::mix(noisysep::MixtureSpec(rho1, *epsilon));
    const noisysep::SpectralReport spectrum_eps =
        noisysep::eigenvalues(rho_eps);
    if (as_json) {
      j["epsilon"] = *epsilon;
      j["rho_eps"] = spectrum_json(spectrum_eps);
    } else {
      print_spectrum_text("rho_eps (epsilon " + fmt_double(*epsilon) + ")",
                          spectrum_eps);
    }
  }

  if (as_json) std::cout << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"physicality and separability analysis of noisy qubit states "
               "in the Pauli basis"};
  app.require_subcommand(1);

  auto* scenario_cmd = app.add_subcommand(
      "scenario", "run a named scenario and check its reference values");
  std::string scenario_id;
  bool scenario_json = false;
  scenario_cmd->add_option("id", scenario_id,
                           "scenario id (eq3, eq4, eq5, eq8-9, eq10, "
                           "eq17-18, intervals, bounds)")
      ->required();
  scenario_cmd->add_flag("--json", scenario_json, "emit a JSON report");

  auto* scan_cmd = app.add_subcommand(
      "scan", "classify the uniform-coefficient (c, epsilon) plane to CSV");
  int scan_n = 2;
  std::string scan_c, scan_eps, scan_out;
  scan_cmd->add_option("--n", scan_n, "qubit count (only 2 is supported)");
  scan_cmd->add_option("--c", scan_c, "c grid, start:stop:step or value")
      ->required();
  scan_cmd->add_option("--eps", scan_eps,
                       "epsilon grid, start:stop:step or value")
      ->required();
  scan_cmd->add_option("--out", scan_out, "output CSV path (default stdout)");

  auto* analyze_cmd = app.add_subcommand(
      "analyze", "analyze a state stored as a matrix JSON file");
  std::string analyze_matrix;
  double analyze_epsilon = -1.0;
  bool analyze_has_epsilon = false;
  bool analyze_json = false;
  analyze_cmd->add_option("--matrix", analyze_matrix, "matrix JSON file")
      ->required();
  analyze_cmd
      ->add_option("--epsilon", analyze_epsilon,
                   "also analyze the mixture at this epsilon")
      ->each([&](const std::string&) { analyze_has_epsilon = true; });
  analyze_cmd->add_flag("--json", analyze_json, "emit a JSON report");

  auto* intervals_cmd = app.add_subcommand(
      "intervals", "uniform-coefficient physicality intervals as CSV");
  int intervals_max_n = 3;
  std::string intervals_out;
  intervals_cmd->add_option("--max-n", intervals_max_n,
                            "largest qubit count (1..5)");
  intervals_cmd->add_option("--out", intervals_out,
                            "output CSV path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*scenario_cmd) return run_scenario_command(scenario_id, scenario_json);
    if (*scan_cmd) return run_scan_command(scan_n, scan_c, scan_eps, scan_out);
    if (*analyze_cmd) {
      return run_analyze_command(
          analyze_matrix,
          analyze_has_epsilon ? std::optional<double>(analyze_epsilon)
                              : std::nullopt,
          analyze_json);
    }
    if (*intervals_cmd)
      return run_intervals_command(intervals_max_n, intervals_out);
  } catch (const noisysep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
