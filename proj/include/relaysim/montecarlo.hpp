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

// Ergodic capacity estimation and parameter sweeps.
//
// Trial t of a run with seed s always uses the channel realization drawn
// from RngStream(s, t). All schemes and the cut-set bound evaluated at the
// same point share those realizations, and per-trial results are reduced in
// trial order, so estimates are bit-identical for any worker count.

#ifndef RELAYSIM_MONTECARLO_HPP
#define RELAYSIM_MONTECARLO_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "relaysim/beamformers.hpp"
#include "relaysim/channel.hpp"

namespace relaysim
{

struct CapacityEstimate
{
    std::optional<SchemeId> scheme;  ///< empty for the cut-set upper bound
    double mean_bits = 0.0;
    std::optional<double> stderr_bits;  ///< present when trials >= 2
    std::size_t trials = 0;

    // Scheme label, or "upper-bound".
    std::string_view label() const noexcept;
};

inline constexpr std::string_view kUpperBoundLabel = "upper-bound";

// Sample mean and standard error (sample standard deviation / sqrt(n)),
// accumulated in index order.
struct SampleSummary
{
    double mean = 0.0;
    std::optional<double> stderr_value;
};
SampleSummary summarize(std::span<const double> samples);

// Combined standard error sqrt(a^2 + b^2) of a difference of two estimates.
double combined_stderr(const CapacityEstimate& a, const CapacityEstimate& b);

CapacityEstimate estimate_ergodic_capacity(const NetworkConfig& config, SchemeId scheme, std::size_t trials,
                                          std::uint64_t seed, std::size_t workers = 1);

CapacityEstimate estimate_upper_bound(const NetworkConfig& config, std::size_t trials, std::uint64_t seed,
                                      std::size_t workers = 1);

/// Estimates for every scheme (in order) and then, if requested, the upper
/// bound, all on the same realizations.
std::vector<CapacityEstimate> estimate_point(const NetworkConfig& config, std::span<const SchemeId> schemes,
                                             bool include_upper_bound, std::size_t trials, std::uint64_t seed,
                                             std::size_t workers = 1);

enum class SweepAxis
{
    relay_count,
    pnr_db,
    qnr_db,
    pnr_equals_qnr_db,
};

std::string_view to_string(SweepAxis axis) noexcept;
std::optional<SweepAxis> parse_axis(std::string_view label) noexcept;

/// Network parameters in the form scenarios state them: SNRs in dB with
/// unit noise powers.
struct NetworkPoint
{
    std::size_t m = 1;
    std::size_t n = 1;
    std::size_t k = 1;
    double pnr_db = 10.0;
    double qnr_db = 10.0;
    double alpha = 1.0;

    NetworkConfig to_config() const;

    friend bool operator==(const NetworkPoint&, const NetworkPoint&) = default;
};

struct SweepSpec
{
    SweepAxis axis = SweepAxis::relay_count;
    std::vector<double> values;
    NetworkPoint base;
    std::vector<SchemeId> schemes;
    bool include_upper_bound = true;
    std::size_t trials = 10000;
    std::uint64_t seed = 1;

    /// Base network with the axis parameter replaced by `value`. Throws
    /// ConfigError naming the point when the result is not a valid network.
    NetworkPoint point_at(double value) const;

    /// Checks values are non-empty and strictly increasing, trials >= 1,
    /// at least one series and every point_at() valid.
    void validate() const;

    friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct SweepRow
{
    SweepAxis axis;
    double axis_value;
    NetworkPoint point;
    std::uint64_t seed;
    CapacityEstimate estimate;
};

/// One row per (axis value, series): axis-major, schemes in spec order,
/// upper bound last.
std::vector<SweepRow> run_sweep(const SweepSpec& spec, std::size_t workers = 1);

} // namespace relaysim

#endif
