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

#include "relaysim/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <sstream>
#include <thread>

#include "relaysim/errors.hpp"
#include "relaysim/link.hpp"

namespace relaysim
{
namespace
{
std::string format_value(double v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

// Fills samples[t * series + j] for every trial t, splitting the trial range
// into contiguous blocks, one per worker.
void run_trials(const NetworkConfig& config, std::span<const SchemeId> schemes, bool include_upper_bound,
                std::size_t trials, std::uint64_t seed, std::size_t workers, std::vector<double>& samples)
{
    const std::size_t series = schemes.size() + (include_upper_bound ? 1 : 0);
    samples.assign(trials * series, 0.0);

    auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t t = begin; t < end; ++t)
        {
            const ChannelRealization realization = realization_for_trial(config, seed, t);
            double* out = samples.data() + t * series;
            for (std::size_t j = 0; j < schemes.size(); ++j)
            {
                const RelayWeights weights = build_weights(schemes[j], realization, config);
                out[j] = evaluate_link(realization, weights, config).capacity_bits;
            }
            if (include_upper_bound)
                out[schemes.size()] = upper_bound_capacity(realization, config);
        }
    };

    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(trials, 1));
    if (workers == 1)
    {
        work(0, trials);
        return;
    }

    std::vector<std::exception_ptr> errors(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
        {
            const std::size_t begin = trials * w / workers;
            const std::size_t end = trials * (w + 1) / workers;
            pool.emplace_back([&, w, begin, end] {
                try
                {
                    work(begin, end);
                }
                catch (...)
                {
                    errors[w] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors)
    {
        if (e)
            std::rethrow_exception(e);
    }
}
} // namespace

std::string_view CapacityEstimate::label() const noexcept
{
    return scheme ? to_string(*scheme) : kUpperBoundLabel;
}

SampleSummary summarize(std::span<const double> samples)
{
    SampleSummary out;
    if (samples.empty())
        return out;
    double sum = 0.0;
    for (double x : samples)
        sum += x;
    const double n = static_cast<double>(samples.size());
    out.mean = sum / n;
    if (samples.size() >= 2)
    {
        double ss = 0.0;
        for (double x : samples)
            ss += (x - out.mean) * (x - out.mean);
        out.stderr_value = std::sqrt(ss / (n - 1.0)) / std::sqrt(n);
    }
    return out;
}

double combined_stderr(const CapacityEstimate& a, const CapacityEstimate& b)
{
    const double sa = a.stderr_bits.value_or(0.0);
    const double sb = b.stderr_bits.value_or(0.0);
    return std::sqrt(sa * sa + sb * sb);
}

std::vector<CapacityEstimate> estimate_point(const NetworkConfig& config, std::span<const SchemeId> schemes,
                                             bool include_upper_bound, std::size_t trials, std::uint64_t seed,
                                             std::size_t workers)
{
    config.validate();
    if (trials < 1)
        throw ConfigError("estimate: trials must be at least 1");
    std::vector<double> samples;
    run_trials(config, schemes, include_upper_bound, trials, seed, workers, samples);

    const std::size_t series = schemes.size() + (include_upper_bound ? 1 : 0);
    std::vector<CapacityEstimate> out;
    out.reserve(series);
    std::vector<double> column(trials);
    for (std::size_t j = 0; j < series; ++j)
    {
        for (std::size_t t = 0; t < trials; ++t)
            column[t] = samples[t * series + j];
        const SampleSummary summary = summarize(column);
        CapacityEstimate est;
        if (j < schemes.size())
            est.scheme = schemes[j];
        est.mean_bits = summary.mean;
        est.stderr_bits = summary.stderr_value;
        est.trials = trials;
        out.push_back(est);
    }
    return out;
}

CapacityEstimate estimate_ergodic_capacity(const NetworkConfig& config, SchemeId scheme, std::size_t trials,
                                          std::uint64_t seed, std::size_t workers)
{
    const SchemeId schemes[] = {scheme};
    return estimate_point(config, schemes, false, trials, seed, workers).front();
}

CapacityEstimate estimate_upper_bound(const NetworkConfig& config, std::size_t trials, std::uint64_t seed,
                                      std::size_t workers)
{
    return estimate_point(config, {}, true, trials, seed, workers).front();
}

std::string_view to_string(SweepAxis axis) noexcept
{
    switch (axis)
    {
    case SweepAxis::relay_count:
        return "relay_count";
    case SweepAxis::pnr_db:
        return "pnr_db";
    case SweepAxis::qnr_db:
        return "qnr_db";
    case SweepAxis::pnr_equals_qnr_db:
        return "pnr_equals_qnr_db";
    }
    return "?";
}

std::optional<SweepAxis> parse_axis(std::string_view label) noexcept
{
    for (SweepAxis axis :
         {SweepAxis::relay_count, SweepAxis::pnr_db, SweepAxis::qnr_db, SweepAxis::pnr_equals_qnr_db})
    {
        if (to_string(axis) == label)
            return axis;
    }
    return std::nullopt;
}

NetworkConfig NetworkPoint::to_config() const
{
    if (!std::isfinite(pnr_db) || !std::isfinite(qnr_db))
        throw ConfigError("invalid network: PNR and QNR must be finite");
    return NetworkConfig::from_db(m, n, k, pnr_db, qnr_db, alpha);
}

NetworkPoint SweepSpec::point_at(double value) const
{
    NetworkPoint point = base;
    switch (axis)
    {
    case SweepAxis::relay_count:
        if (!(value >= 1.0) || value != std::floor(value) || value > 1e6)
        {
            throw ConfigError("invalid sweep point relay_count = " + format_value(value)
                              + ": K must be a positive integer");
        }
        point.k = static_cast<std::size_t>(value);
        break;
    case SweepAxis::pnr_db:
        point.pnr_db = value;
        break;
    case SweepAxis::qnr_db:
        point.qnr_db = value;
        break;
    case SweepAxis::pnr_equals_qnr_db:
        point.pnr_db = value;
        point.qnr_db = value;
        break;
    }
    try
    {
        (void)point.to_config();
    }
    catch (const ConfigError& e)
    {
        throw ConfigError("invalid sweep point " + std::string(to_string(axis)) + " = " + format_value(value)
                          + ": " + e.what());
    }
    return point;
}

void SweepSpec::validate() const
{
    if (values.empty())
        throw ConfigError("invalid sweep: no axis values");
    for (std::size_t i = 1; i < values.size(); ++i)
    {
        if (!(values[i] > values[i - 1]))
            throw ConfigError("invalid sweep: axis values must be strictly increasing");
    }
    if (trials < 1)
        throw ConfigError("invalid sweep: trials must be at least 1");
    if (schemes.empty() && !include_upper_bound)
        throw ConfigError("invalid sweep: no schemes and no upper bound requested");
    for (double v : values)
        (void)point_at(v);
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::size_t workers)
{
    spec.validate();
    std::vector<SweepRow> rows;
    for (double value : spec.values)
    {
        const NetworkPoint point = spec.point_at(value);
        const auto estimates = estimate_point(point.to_config(), spec.schemes, spec.include_upper_bound,
                                              spec.trials, spec.seed, workers);
        for (const CapacityEstimate& est : estimates)
            rows.push_back({spec.axis, value, point, spec.seed, est});
    }
    return rows;
}

} // namespace relaysim
