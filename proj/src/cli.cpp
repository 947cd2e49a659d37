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

#include "relaysim/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <system_error>

#include "relaysim/report.hpp"

namespace relaysim::cli
{

Scenario load_scenario(const std::string& name_or_path)
{
    if (const auto bundled = find_bundled_scenario(name_or_path))
        return parse_scenario_text(bundled->text, std::string(bundled->name));
    return parse_scenario_file(name_or_path);
}

std::optional<std::uint64_t> seed_from_environment()
{
    const char* raw = std::getenv("RELAYSIM_SEED");
    if (raw == nullptr || *raw == '\0')
        return std::nullopt;
    const std::string text(raw);
    if (text.find_first_not_of("0123456789") != std::string::npos)
        throw ConfigError("RELAYSIM_SEED must be a non-negative integer, got '" + text + "'");
    try
    {
        return std::stoull(text);
    }
    catch (const std::exception&)
    {
        throw ConfigError("RELAYSIM_SEED is out of range: '" + text + "'");
    }
}

int run(const RunOptions& options, std::ostream& log, std::ostream& err)
{
    try
    {
        Scenario scenario = load_scenario(options.scenario);
        SweepSpec& spec = scenario.spec;
        if (options.trials)
            spec.trials = *options.trials;
        if (options.seed)
            spec.seed = *options.seed;
        else if (const auto env_seed = seed_from_environment())
            spec.seed = *env_seed;
        spec.validate();

        std::error_code ec;
        std::filesystem::create_directories(options.out_dir, ec);
        if (ec)
        {
            err << "relaysim: cannot create output directory " << options.out_dir << ": " << ec.message() << '\n';
            return 1;
        }

        const auto start = std::chrono::steady_clock::now();
        const std::vector<SweepRow> rows = run_sweep(spec, options.workers);
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

        const auto csv_path = options.out_dir / "results.csv";
        {
            std::ofstream csv(csv_path, std::ios::binary);
            if (!csv)
            {
                err << "relaysim: cannot write " << csv_path << '\n';
                return 1;
            }
            write_csv(csv, rows);
            if (!csv.flush())
            {
                err << "relaysim: failed writing " << csv_path << '\n';
                return 1;
            }
        }
        const auto svg_path = options.out_dir / "results.svg";
        emit_plot(rows, svg_path, scenario.description);

        log << "relaysim: " << rows.size() << " rows (" << spec.values.size() << " points x "
            << rows.size() / spec.values.size() << " series, " << spec.trials << " trials, seed " << spec.seed
            << ") in " << elapsed << " s\n"
            << "  " << csv_path.string() << "\n"
            << "  " << svg_path.string() << "\n";
        return 0;
    }
    catch (const std::exception& e)
    {
        err << "relaysim: " << e.what() << '\n';
        return 1;
    }
}

void list_scenarios(std::ostream& out)
{
    for (const BundledScenario& s : bundled_scenarios())
    {
        const Scenario parsed = parse_scenario_text(s.text, std::string(s.name));
        out << s.name << "  " << parsed.description << '\n';
    }
}

} // namespace relaysim::cli
