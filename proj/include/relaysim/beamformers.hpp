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

// Relay beamforming matrices and the per-relay power control that scales
// each of them to meet its transmit budget exactly.

#ifndef RELAYSIM_BEAMFORMERS_HPP
#define RELAYSIM_BEAMFORMERS_HPP

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "relaysim/channel.hpp"
#include "relaysim/linalg.hpp"

namespace relaysim
{

enum class SchemeId
{
    af,
    mf,
    mf_rzf,
};

// "af", "mf", "mf-rzf".
std::string_view to_string(SchemeId scheme) noexcept;
std::optional<SchemeId> parse_scheme(std::string_view label) noexcept;

struct RelayWeights
{
    std::vector<ComplexMatrix> f;  ///< N x N beamformer per relay
    std::vector<double> rho;       ///< amplitude scale per relay
};

/// Beamformer design hook: (H_k, G_k, config) -> F_k, before power control.
using BeamformerDesign =
    std::function<ComplexMatrix(const ComplexMatrix& h, const ComplexMatrix& g, const NetworkConfig& config)>;

// Plain amplify-and-forward: I_N.
ComplexMatrix af_beamformer(std::size_t n);

// G^H H^H.
ComplexMatrix mf_beamformer(const ComplexMatrix& h, const ComplexMatrix& g);

/// G^H (G G^H + alpha I_M)^{-1} H^H, applying the inverse through an HPD
/// solve. Throws NumericError when alpha = 0 and G G^H is singular.
ComplexMatrix mf_rzf_beamformer(const ComplexMatrix& h, const ComplexMatrix& g, double alpha);

/// rho = sqrt(q / tr{F ((p/m) H H^H + sigma1^2 I_N) F^H}).
double power_control_factor(const ComplexMatrix& f, const ComplexMatrix& h, double p, std::size_t m,
                            double sigma1_sq, double q);

// tr{rho^2 F ((p/m) H H^H + sigma1^2 I) F^H}: expected relay transmit power.
double relay_transmit_power(const ComplexMatrix& f, double rho, const ComplexMatrix& h, double p, std::size_t m,
                            double sigma1_sq);

BeamformerDesign design_for(SchemeId scheme);

RelayWeights build_weights(SchemeId scheme, const ChannelRealization& realization, const NetworkConfig& config);
RelayWeights build_weights(const BeamformerDesign& design, const ChannelRealization& realization,
                           const NetworkConfig& config);

} // namespace relaysim

#endif
