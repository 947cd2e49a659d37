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

#ifndef RELAYSIM_CHANNEL_HPP
#define RELAYSIM_CHANNEL_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "relaysim/linalg.hpp"
#include "relaysim/rng.hpp"

namespace relaysim
{

/// Scalar parameters of the dual-hop network.
///
/// All powers are linear. Every relay shares the budget q and the
/// regularization alpha.
struct NetworkConfig
{
    std::size_t m = 1;       ///< antennas at source and destination
    std::size_t n = 1;       ///< antennas per relay
    std::size_t k = 1;       ///< number of relays
    double p = 1.0;          ///< total source power
    double q = 1.0;          ///< per-relay power budget
    double sigma1_sq = 1.0;  ///< noise power per relay antenna
    double sigma2_sq = 1.0;  ///< noise power per destination antenna
    double alpha = 1.0;      ///< RZF regularization

    /// Throws ConfigError quoting the violated rule.
    void validate() const;

    /// Unit noise powers with p = 10^(pnr_db/10), q = 10^(qnr_db/10).
    static NetworkConfig from_db(std::size_t m, std::size_t n, std::size_t k, double pnr_db, double qnr_db,
                                 double alpha = 1.0);

    friend bool operator==(const NetworkConfig&, const NetworkConfig&) = default;
};

/// One draw of backward channels h (N x M each) and forward channels g
/// (M x N each), one pair per relay.
struct ChannelRealization
{
    std::vector<ComplexMatrix> h;
    std::vector<ComplexMatrix> g;

    std::size_t relays() const noexcept { return h.size(); }
};

/// i.i.d. CN(0, 1) entries drawn in column-major order.
ComplexMatrix sample_gaussian_matrix(std::size_t rows, std::size_t cols, RngStream& rng);

/// Draws H_1..H_K, then G_1..G_K, from the same stream.
ChannelRealization sample_realization(const NetworkConfig& config, RngStream& rng);

/// Realization of trial `trial` under `seed`, from the channel substream.
ChannelRealization realization_for_trial(const NetworkConfig& config, std::uint64_t seed, std::uint64_t trial);

} // namespace relaysim

#endif
