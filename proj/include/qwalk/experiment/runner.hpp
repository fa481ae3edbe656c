// Copyright 2026 The qwalk Authors
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

#include <cstddef>
#include <string_view>

#include "json.hpp"
#include "qwalk/experiment/config.hpp"
#include "qwalk/experiment/results.hpp"

namespace qwalk {

inline constexpr std::string_view kVersion = "0.1.0";

/// Unitarization dimension cap: QWALK_DIM_CAP when set to a positive
/// integer, 2048 otherwise.
std::size_t dimension_cap_from_env();

struct RunOutcome {
  Results results;
  nlohmann::json resolved_parameters;
  double wall_seconds = 0.0;
};

/// Validates every parameter, then runs. Deterministic for a given config.
RunOutcome run_experiment(const ExperimentConfig& cfg);

/// run_experiment, then writes the results, the plot files and
/// metadata.json into cfg.out_path.
RunOutcome run_and_write(const ExperimentConfig& cfg);

}  // namespace qwalk
