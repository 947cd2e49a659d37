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

#include "relaysim/channel.hpp"

#include <cmath>
#include <string>

#include "relaysim/errors.hpp"

namespace relaysim
{
namespace
{
bool positive_finite(double x)
{
    return std::isfinite(x) && x > 0.0;
}
} // namespace

void NetworkConfig::validate() const
{
    if (m < 1)
        throw ConfigError("invalid network: rule \"M >= 1\" violated (m = " + std::to_string(m) + ")");
    if (k < 1)
        throw ConfigError("invalid network: rule \"K >= 1\" violated (k = " + std::to_string(k) + ")");
    if (n < m)
    {
        throw ConfigError("invalid network: rule \"N ≥ M\" violated (n = " + std::to_string(n)
                          + ", m = " + std::to_string(m) + ")");
    }
    if (!positive_finite(p))
        throw ConfigError("invalid network: rule \"P > 0\" violated");
    if (!positive_finite(q))
        throw ConfigError("invalid network: rule \"Q > 0\" violated");
    if (!positive_finite(sigma1_sq))
        throw ConfigError("invalid network: rule \"sigma1^2 > 0\" violated");
    if (!positive_finite(sigma2_sq))
        throw ConfigError("invalid network: rule \"sigma2^2 > 0\" violated");
    if (!std::isfinite(alpha) || alpha < 0.0)
        throw ConfigError("invalid network: rule \"alpha >= 0\" violated");
}

NetworkConfig NetworkConfig::from_db(std::size_t m, std::size_t n, std::size_t k, double pnr_db, double qnr_db,
                                     double alpha)
{
    NetworkConfig c;
    c.m = m;
    c.n = n;
    c.k = k;
    c.sigma1_sq = 1.0;
    c.sigma2_sq = 1.0;
    c.p = c.sigma1_sq * std::pow(10.0, pnr_db / 10.0);
    c.q = c.sigma2_sq * std::pow(10.0, qnr_db / 10.0);
    c.alpha = alpha;
    c.validate();
    return c;
}

ComplexMatrix sample_gaussian_matrix(std::size_t rows, std::size_t cols, RngStream& rng)
{
    ComplexMatrix out(rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 0; r < rows; ++r)
            out(r, c) = rng.next_complex_gaussian();
    return out;
}

ChannelRealization sample_realization(const NetworkConfig& config, RngStream& rng)
{
    ChannelRealization out;
    out.h.reserve(config.k);
    out.g.reserve(config.k);
    for (std::size_t k = 0; k < config.k; ++k)
        out.h.push_back(sample_gaussian_matrix(config.n, config.m, rng));
    for (std::size_t k = 0; k < config.k; ++k)
        out.g.push_back(sample_gaussian_matrix(config.m, config.n, rng));
    return out;
}

ChannelRealization realization_for_trial(const NetworkConfig& config, std::uint64_t seed, std::uint64_t trial)
{
    RngStream rng(seed, trial, StreamId::channel);
    return sample_realization(config, rng);
}

} // namespace relaysim
