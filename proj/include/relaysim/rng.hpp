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

#ifndef RELAYSIM_RNG_HPP
#define RELAYSIM_RNG_HPP

#include <array>
#include <complex>
#include <cstdint>

namespace relaysim
{

using PhiloxBlock = std::array<std::uint32_t, 4>;
using PhiloxKey = std::array<std::uint32_t, 2>;

// Philox4x32 with 10 rounds (Salmon et al., SC'11): a keyed bijection of a
// 128-bit counter.
PhiloxBlock philox4x32_10(PhiloxBlock counter, PhiloxKey key) noexcept;

// Independent substreams of a single trial.
enum class StreamId : std::uint32_t
{
    channel = 0,
    noise = 1,
};

//---------------------------------------------------------------------------//
/*!
 * Counter-based random stream addressed by (seed, trial, substream).
 *
 * The key is the 64-bit global seed; the counter words are
 * (block, trial low, trial high, substream). Every trial therefore owns a
 * disjoint 2^32-block region of the Philox sequence and its draws do not
 * depend on which worker runs it or in what order.
 */
class RngStream
{
  public:
    RngStream(std::uint64_t seed, std::uint64_t trial, StreamId stream = StreamId::channel) noexcept;

    std::uint32_t next_u32() noexcept;
    std::uint64_t next_u64() noexcept;

    // Uniform on the open interval (0, 1) with 53 random bits.
    double next_uniform() noexcept;

    // Circularly-symmetric complex Gaussian with E|z|^2 = 1, one Box-Muller
    // pair per sample: |z|^2 = -ln(u1) is Exp(1) and arg z = 2 pi u2.
    std::complex<double> next_complex_gaussian() noexcept;

  private:
    PhiloxKey key_;
    PhiloxBlock counter_;
    PhiloxBlock buffer_{};
    unsigned used_ = 4;
};

} // namespace relaysim

#endif
