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

#ifndef RELAYSIM_CLI_HPP
#define RELAYSIM_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "relaysim/scenario.hpp"

namespace relaysim::cli
{

struct RunOptions
{
    std::string scenario;  ///< bundled scenario name or path to a YAML file
    std::filesystem::path out_dir = "relaysim-out";
    std::size_t workers = 1;
    std::optional<std::size_t> trials;
    std::optional<std::uint64_t> seed;  ///< takes precedence over RELAYSIM_SEED
};

// A bundled name ("fig2") resolves to the embedded scenario, anything else
// is read as a file path.
Scenario load_scenario(const std::string& name_or_path);

// RELAYSIM_SEED parsed as an unsigned integer; throws ConfigError if set
// but malformed.
std::optional<std::uint64_t> seed_from_environment();

/// Runs the sweep and writes results.csv and results.svg into out_dir.
/// Returns the process exit code; diagnostics go to `err`.
int run(const RunOptions& options, std::ostream& log, std::ostream& err);

void list_scenarios(std::ostream& out);

} // namespace relaysim::cli

#endif
