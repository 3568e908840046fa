/*
 * Copyright 2026 The optotriplet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OPTOTRIPLET_APP_RUNNER_HPP_
#define OPTOTRIPLET_APP_RUNNER_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "optotriplet/app/scenario.hpp"
#include "optotriplet/grid.hpp"
#include "optotriplet/params.hpp"

namespace optotriplet::app {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitNumerical = 2,
  kExitComparison = 3,
};

inline constexpr int kManifestSchemaVersion = 1;

struct RunOptions {
  std::string verb;
  std::optional<std::filesystem::path> config;
  std::optional<std::string> preset;
  std::vector<std::string> scenarios;
  std::filesystem::path out_dir = "out";
  std::uint64_t seed = 1;
  std::optional<std::string> grid;
  std::size_t trajectories = 64;
  std::optional<double> duration;
  std::optional<double> dt;
  bool dump_timeseries = false;
  std::optional<double> tau;
  unsigned threads = 0;
};

// Parameters and scenario list a run starts from. A manifest passed as
// --config contributes its parameters, scenarios and grid.
struct RunInputs {
  PhysParams params;
  std::vector<Scenario> scenarios;
  std::optional<GridSpec> grid;
};

RunInputs resolve_inputs(const RunOptions& opts);

int run_sweep(const RunOptions& opts, std::ostream& out);
int run_oracle_verb(const RunOptions& opts, std::ostream& out);
int run_regime(const RunOptions& opts, std::ostream& out);
int run_minforce(const RunOptions& opts, std::ostream& out);
int run_presets(std::ostream& out);

// Parses argv, dispatches, and maps errors onto the exit-code contract.
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace optotriplet::app

#endif  // OPTOTRIPLET_APP_RUNNER_HPP_
