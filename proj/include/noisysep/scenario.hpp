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

#include <string>
#include <utility>
#include <vector>

#include "noisysep/intervals.hpp"
#include "noisysep/separability.hpp"

namespace noisysep {

/** One comparison of a computed quantity against a stored reference. */
struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

/**
 * Everything a named scenario produced: the states it built, their spectra,
 * the verdicts and bounds it derived, the reference comparisons it ran, and
 * free-form notes (e.g. recorded discrepancies).  Rendering is deterministic:
 * two runs yield byte-identical reports.
 */
struct ScenarioResult {
  std::string id;
  std::vector<std::pair<std::string, HermitianMatrix>> matrices;
  std::vector<std::pair<std::string, SpectralReport>> spectra;
  std::vector<std::pair<std::string, SeparabilityVerdict>> verdicts;
  std::vector<std::pair<std::string, EpsilonBounds>> bounds;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool all_pass() const;
};

/** ids: eq3, eq4, eq5, eq8-9, eq10, eq17-18, intervals, bounds. */
const std::vector<std::string>& scenario_ids();

/** Runs one scenario; UnknownScenario for anything not listed above. */
ScenarioResult run_scenario(const std::string& id);

std::string render_text(const ScenarioResult& result);
std::string render_json(const ScenarioResult& result);

}  // namespace noisysep
