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

// relaysim run <scenario> [--out DIR] [--workers N] [--trials T] [--seed S]
// relaysim list-scenarios

#include <CLI11.hpp>

#include <iostream>
#include <thread>

#include "relaysim/cli.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"Ergodic capacity simulator for dual-hop AF MIMO relay networks"};
    app.require_subcommand(1);

    relaysim::cli::RunOptions options;
    options.workers = std::max(1u, std::thread::hardware_concurrency());
    std::size_t trials = 0;
    std::uint64_t seed = 0;

    CLI::App* run = app.add_subcommand("run", "Run a scenario sweep and write results.csv / results.svg");
    run->add_option("scenario", options.scenario, "Bundled scenario name (see list-scenarios) or YAML file")
        ->required();
    run->add_option("--out", options.out_dir, "Output directory")->capture_default_str();
    run->add_option("--workers", options.workers, "Worker threads")->check(CLI::PositiveNumber);
    auto* trials_opt = run->add_option("--trials", trials, "Trials per point (overrides the scenario)")
                           ->check(CLI::PositiveNumber);
    auto* seed_opt = run->add_option("--seed", seed, "Seed (overrides the scenario and RELAYSIM_SEED)");

    CLI::App* list = app.add_subcommand("list-scenarios", "List bundled scenarios");

    CLI11_PARSE(app, argc, argv);

    if (*list)
    {
        relaysim::cli::list_scenarios(std::cout);
        return 0;
    }
    if (*trials_opt)
        options.trials = trials;
    if (*seed_opt)
        options.seed = seed;
    return relaysim::cli::run(options, std::cout, std::cerr);
}
