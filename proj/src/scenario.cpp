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

#include "relaysim/scenario.hpp"

#include <yaml-cpp/yaml.h>

#include <cmath>
#include <cstdint>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "relaysim/report.hpp"

namespace relaysim
{
namespace
{

class Reader
{
  public:
    explicit Reader(std::string_view source) : source_(source) {}

    [[noreturn]] void fail(const YAML::Mark& mark, const std::string& message) const
    {
        std::ostringstream os;
        os << source_;
        if (!mark.is_null())
            os << ":" << mark.line + 1 << ":" << mark.column + 1;
        os << ": " << message;
        throw ScenarioError(os.str());
    }

    [[noreturn]] void fail(const std::string& message) const { fail(YAML::Mark::null_mark(), message); }

    void require_map(const YAML::Node& node, const std::string& where) const
    {
        if (!node.IsMap())
            fail(node.Mark(), "'" + where + "' must be a mapping");
    }

    void reject_unknown(const YAML::Node& map, const std::string& where,
                        std::initializer_list<std::string_view> known) const
    {
        for (const auto& kv : map)
        {
            const std::string key = kv.first.as<std::string>();
            bool found = false;
            for (std::string_view k : known)
                found = found || key == k;
            if (!found)
                fail(kv.first.Mark(), "unknown key '" + key + "' in " + where);
        }
    }

    YAML::Node required(const YAML::Node& map, const char* key, const std::string& where) const
    {
        YAML::Node node = map[key];
        if (!node)
            fail(map.Mark(), "missing key '" + std::string(key) + "' in " + where);
        return node;
    }

    double real(const YAML::Node& node, const std::string& key) const
    {
        double v = 0.0;
        if (!node.IsScalar() || !YAML::convert<double>::decode(node, v) || !std::isfinite(v))
            fail(node.Mark(), "'" + key + "' must be a finite number");
        return v;
    }

    std::uint64_t count(const YAML::Node& node, const std::string& key) const
    {
        const std::string text = node.IsScalar() ? node.Scalar() : std::string();
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
            fail(node.Mark(), "'" + key + "' must be a non-negative integer");
        std::uint64_t v = 0;
        std::istringstream is(text);
        if (!(is >> v))
            fail(node.Mark(), "'" + key + "' is out of range");
        return v;
    }

    bool boolean(const YAML::Node& node, const std::string& key) const
    {
        bool v = false;
        if (!node.IsScalar() || !YAML::convert<bool>::decode(node, v))
            fail(node.Mark(), "'" + key + "' must be true or false");
        return v;
    }

    std::string_view source() const noexcept { return source_; }

  private:
    std::string source_;
};

} // namespace

Scenario parse_scenario_text(std::string_view text, std::string_view source)
{
    Reader rd(source);
    YAML::Node root;
    try
    {
        root = YAML::Load(std::string(text));
    }
    catch (const YAML::Exception& e)
    {
        rd.fail(e.mark, "parse error: " + e.msg);
    }
    if (!root.IsMap())
        rd.fail(root.Mark(), "scenario must be a mapping with sections network, sweep and run");
    rd.reject_unknown(root, "scenario", {"description", "network", "sweep", "run"});

    Scenario out;
    SweepSpec& spec = out.spec;

    if (YAML::Node d = root["description"])
    {
        if (!d.IsScalar())
            rd.fail(d.Mark(), "'description' must be a string");
        out.description = d.Scalar();
    }

    const YAML::Node network = rd.required(root, "network", "scenario");
    rd.require_map(network, "network");
    rd.reject_unknown(network, "section 'network'", {"m", "n", "k", "pnr_db", "qnr_db", "alpha"});
    const std::string net = "section 'network'";
    spec.base.m = rd.count(rd.required(network, "m", net), "m");
    spec.base.n = rd.count(rd.required(network, "n", net), "n");
    spec.base.k = rd.count(rd.required(network, "k", net), "k");
    spec.base.pnr_db = rd.real(rd.required(network, "pnr_db", net), "pnr_db");
    spec.base.qnr_db = rd.real(rd.required(network, "qnr_db", net), "qnr_db");
    spec.base.alpha = 1.0;
    if (YAML::Node a = network["alpha"])
        spec.base.alpha = rd.real(a, "alpha");

    const YAML::Node sweep = rd.required(root, "sweep", "scenario");
    rd.require_map(sweep, "sweep");
    rd.reject_unknown(sweep, "section 'sweep'", {"axis", "values"});
    {
        const YAML::Node axis = rd.required(sweep, "axis", "section 'sweep'");
        const std::string label = axis.IsScalar() ? axis.Scalar() : std::string();
        const auto parsed = parse_axis(label);
        if (!parsed)
        {
            rd.fail(axis.Mark(), "unknown sweep axis '" + label
                                     + "' (expected relay_count, pnr_db, qnr_db or pnr_equals_qnr_db)");
        }
        spec.axis = *parsed;
        const YAML::Node values = rd.required(sweep, "values", "section 'sweep'");
        if (!values.IsSequence())
            rd.fail(values.Mark(), "'values' must be a list of numbers");
        for (const auto& v : values)
            spec.values.push_back(rd.real(v, "values"));
    }

    spec.schemes = {SchemeId::af, SchemeId::mf, SchemeId::mf_rzf};
    if (YAML::Node run = root["run"])
    {
        rd.require_map(run, "run");
        rd.reject_unknown(run, "section 'run'", {"schemes", "trials", "seed", "include_upper_bound"});
        if (YAML::Node schemes = run["schemes"])
        {
            if (!schemes.IsSequence())
                rd.fail(schemes.Mark(), "'schemes' must be a list");
            spec.schemes.clear();
            for (const auto& s : schemes)
            {
                const std::string label = s.IsScalar() ? s.Scalar() : std::string();
                const auto scheme = parse_scheme(label);
                if (!scheme)
                    rd.fail(s.Mark(), "unknown scheme '" + label + "' (expected af, mf or mf-rzf)");
                spec.schemes.push_back(*scheme);
            }
        }
        if (YAML::Node t = run["trials"])
            spec.trials = rd.count(t, "trials");
        if (YAML::Node s = run["seed"])
            spec.seed = rd.count(s, "seed");
        if (YAML::Node u = run["include_upper_bound"])
            spec.include_upper_bound = rd.boolean(u, "include_upper_bound");
    }

    try
    {
        spec.validate();
    }
    catch (const ConfigError& e)
    {
        rd.fail(e.what());
    }
    return out;
}

Scenario parse_scenario_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ScenarioError(path.string() + ": cannot open scenario file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_text(buffer.str(), path.string());
}

SweepSpec parse_scenario(const std::filesystem::path& path)
{
    return parse_scenario_file(path).spec;
}

std::string serialize_scenario(const Scenario& scenario)
{
    const SweepSpec& spec = scenario.spec;
    YAML::Emitter out;
    out << YAML::BeginMap;
    if (!scenario.description.empty())
        out << YAML::Key << "description" << YAML::Value << scenario.description;

    out << YAML::Key << "network" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "m" << YAML::Value << spec.base.m;
    out << YAML::Key << "n" << YAML::Value << spec.base.n;
    out << YAML::Key << "k" << YAML::Value << spec.base.k;
    out << YAML::Key << "pnr_db" << YAML::Value << format_number(spec.base.pnr_db);
    out << YAML::Key << "qnr_db" << YAML::Value << format_number(spec.base.qnr_db);
    out << YAML::Key << "alpha" << YAML::Value << format_number(spec.base.alpha);
    out << YAML::EndMap;

    out << YAML::Key << "sweep" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "axis" << YAML::Value << std::string(to_string(spec.axis));
    out << YAML::Key << "values" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (double v : spec.values)
        out << format_number(v);
    out << YAML::EndSeq << YAML::EndMap;

    out << YAML::Key << "run" << YAML::Value << YAML::BeginMap;
    out << YAML::Key << "schemes" << YAML::Value << YAML::Flow << YAML::BeginSeq;
    for (SchemeId s : spec.schemes)
        out << std::string(to_string(s));
    out << YAML::EndSeq;
    out << YAML::Key << "trials" << YAML::Value << spec.trials;
    out << YAML::Key << "seed" << YAML::Value << spec.seed;
    out << YAML::Key << "include_upper_bound" << YAML::Value << YAML::TrueFalseBool << spec.include_upper_bound;
    out << YAML::EndMap;

    out << YAML::EndMap;
    return std::string(out.c_str()) + "\n";
}

} // namespace relaysim
