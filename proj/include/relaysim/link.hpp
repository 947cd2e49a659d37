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

// End-to-end link: effective source-destination channel, QR/SIC detection
// at the destination and the resulting per-stream SNRs and rates.

#ifndef RELAYSIM_LINK_HPP
#define RELAYSIM_LINK_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "relaysim/beamformers.hpp"
#include "relaysim/channel.hpp"
#include "relaysim/linalg.hpp"
#include "relaysim/rng.hpp"

namespace relaysim
{

struct LinkMetrics
{
    ComplexMatrix effective_channel;
    QrFactors qr;
    std::vector<double> snr_per_stream;
    double capacity_bits = 0.0;  ///< half-duplex rate, bits per channel use
};

/// sum_k rho_k G_k F_k H_k (M x M).
ComplexMatrix effective_channel(const ChannelRealization& realization, const RelayWeights& weights);

/// Post-SIC SNR of each stream, with qr taken from the effective channel:
///
///   SNR_m = (P/M) r_mm^2 / (sigma1^2 sum_k |row_m(rho_k Q^H G_k F_k)|^2 + sigma2^2)
///
/// A zero r_mm yields SNR_m = 0.
std::vector<double> per_stream_snr(const ChannelRealization& realization, const RelayWeights& weights,
                                   const QrFactors& qr, const NetworkConfig& config);

/// Noise power seen by each stream after the Q^H rotation (the SNR denominator).
std::vector<double> per_stream_noise_power(const ChannelRealization& realization, const RelayWeights& weights,
                                           const QrFactors& qr, const NetworkConfig& config);

/// 0.5 sum_m log2(1 + snr_m). Throws DomainError on a negative SNR.
double instantaneous_capacity(std::span<const double> snrs);

/// Cut-set bound 0.5 log2 det(I_M + P/(M sigma1^2) sum_k H_k^H H_k).
double upper_bound_capacity(const ChannelRealization& realization, const NetworkConfig& config);

LinkMetrics evaluate_link(const ChannelRealization& realization, const RelayWeights& weights,
                          const NetworkConfig& config);

struct MeasuredStream
{
    double signal_power = 0.0;
    double noise_power = 0.0;
    double snr = 0.0;  ///< signal / noise; +inf when noise_power is 0
};

struct TransmissionOptions
{
    std::size_t noise_draws = 100000;
    bool noiseless = false;  ///< zero the relay and destination noise draws
};

/// Monte Carlo run of the full signal chain for one channel realization.
///
/// Per draw: s ~ CN(0, (P/M) I), r_k = H_k s + n_k, t_k = rho_k F_k r_k,
/// y = sum_k G_k t_k + n_d and y~ = Q^H y. Stream m is measured after
/// genie-aided cancellation of streams m+1..M: its signal power is the
/// sample mean of |r_mm s_m|^2 and its noise power the sample mean of the
/// remaining residual |y~_m - sum_{j>=m} r_mj s_j|^2.
std::vector<MeasuredStream> simulate_transmission(const ChannelRealization& realization,
                                                  const RelayWeights& weights, const QrFactors& qr,
                                                  const NetworkConfig& config, const TransmissionOptions& options,
                                                  RngStream& rng);

} // namespace relaysim

#endif
