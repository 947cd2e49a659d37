// SPDX-License-Identifier: Apache-2.0
//
// relaysim: link-level simulator for dual-hop AF MIMO relay networks
// Copyright (C) 2026 The relaysim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Scenario files (YAML):
//
//   description: free text          # optional
//   network:
//     m: 4
//     n: 4
//     k: 1
//     pnr_db: 10
//     qnr_db: 10
//     alpha: 1                      # default 1
//   sweep:
//     axis: relay_count             # relay_count | pnr_db | qnr_db | pnr_equals_qnr_db
//     values: [1, 2, 3, 4]
//   run:
//     schemes: [af, mf, mf-rzf]     # default: all three
//     trials: 10000                 # default 10000
//     seed: 1                       # default 1
//     include_upper_bound: true     # default true
//
// Unknown keys are rejected with their line and column.

#ifndef RELAYSIM_SCENARIO_HPP
#define RELAYSIM_SCENARIO_HPP

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "relaysim/errors.hpp"
#include "relaysim/montecarlo.hpp"

namespace relaysim
{

// Malformed scenario text or a constraint violation, with source context.
class ScenarioError : public ConfigError
{
  public:
    using ConfigError::ConfigError;
};

struct Scenario
{
    std::string description;
    SweepSpec spec;
};

Scenario parse_scenario_text(std::string_view text, std::string_view source = "<scenario>");
Scenario parse_scenario_file(const std::filesystem::path& path);

// parse_scenario_file(path).spec
SweepSpec parse_scenario(const std::filesystem::path& path);

std::string serialize_scenario(const Scenario& scenario);

struct BundledScenario
{
    std::string_view name;
    std::string_view text;
};

std::span<const BundledScenario> bundled_scenarios() noexcept;
std::optional<BundledScenario> find_bundled_scenario(std::string_view name) noexcept;

} // namespace relaysim

#endif
