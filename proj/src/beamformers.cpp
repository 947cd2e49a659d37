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

#include "relaysim/beamformers.hpp"

#include <cmath>

#include "relaysim/errors.hpp"

namespace relaysim
{
namespace
{
void check_pair(const ComplexMatrix& h, const ComplexMatrix& g, const char* what)
{
    // h: N x M, g: M x N
    if (h.empty() || g.empty() || h.rows() != g.cols() || h.cols() != g.rows())
    {
        throw ShapeError(std::string(what) + ": backward channel " + std::to_string(h.rows()) + "x"
                         + std::to_string(h.cols()) + " and forward channel " + std::to_string(g.rows()) + "x"
                         + std::to_string(g.cols()) + " are not N x M and M x N");
    }
}

// (p/m) H H^H + sigma1^2 I_N: covariance of the signal a relay receives.
ComplexMatrix relay_receive_covariance(const ComplexMatrix& h, double p, std::size_t m, double sigma1_sq)
{
    ComplexMatrix cov = (p / static_cast<double>(m)) * matmul(h, conj_transpose(h));
    for (std::size_t i = 0; i < cov.rows(); ++i)
        cov(i, i) += sigma1_sq;
    return cov;
}
} // namespace

std::string_view to_string(SchemeId scheme) noexcept
{
    switch (scheme)
    {
    case SchemeId::af:
        return "af";
    case SchemeId::mf:
        return "mf";
    case SchemeId::mf_rzf:
        return "mf-rzf";
    }
    return "?";
}

std::optional<SchemeId> parse_scheme(std::string_view label) noexcept
{
    if (label == "af")
        return SchemeId::af;
    if (label == "mf")
        return SchemeId::mf;
    if (label == "mf-rzf")
        return SchemeId::mf_rzf;
    return std::nullopt;
}

ComplexMatrix af_beamformer(std::size_t n)
{
    return ComplexMatrix::identity(n);
}

ComplexMatrix mf_beamformer(const ComplexMatrix& h, const ComplexMatrix& g)
{
    check_pair(h, g, "mf_beamformer");
    return matmul(conj_transpose(g), conj_transpose(h));
}

ComplexMatrix mf_rzf_beamformer(const ComplexMatrix& h, const ComplexMatrix& g, double alpha)
{
    check_pair(h, g, "mf_rzf_beamformer");
    if (!(alpha >= 0.0))
        throw DomainError("mf_rzf_beamformer: alpha must be non-negative");
    const ComplexMatrix g_h = conj_transpose(g);
    ComplexMatrix gram = matmul(g, g_h);
    for (std::size_t i = 0; i < gram.rows(); ++i)
        gram(i, i) += alpha;
    return matmul(g_h, solve_hpd(gram, conj_transpose(h)));
}

double power_control_factor(const ComplexMatrix& f, const ComplexMatrix& h, double p, std::size_t m,
                            double sigma1_sq, double q)
{
    if (f.cols() != h.rows())
        throw ShapeError("power_control_factor: beamformer does not match the backward channel");
    const ComplexMatrix cov = relay_receive_covariance(h, p, m, sigma1_sq);
    const double denom = trace(matmul(matmul(f, cov), conj_transpose(f))).real();
    if (!(denom > 0.0) || !std::isfinite(denom))
        throw NumericError("power_control_factor: beamformer has zero transmit power");
    return std::sqrt(q / denom);
}

double relay_transmit_power(const ComplexMatrix& f, double rho, const ComplexMatrix& h, double p, std::size_t m,
                            double sigma1_sq)
{
    const ComplexMatrix cov = relay_receive_covariance(h, p, m, sigma1_sq);
    return rho * rho * trace(matmul(matmul(f, cov), conj_transpose(f))).real();
}

BeamformerDesign design_for(SchemeId scheme)
{
    switch (scheme)
    {
    case SchemeId::af:
        return [](const ComplexMatrix& h, const ComplexMatrix&, const NetworkConfig&) {
            return af_beamformer(h.rows());
        };
    case SchemeId::mf:
        return [](const ComplexMatrix& h, const ComplexMatrix& g, const NetworkConfig&) {
            return mf_beamformer(h, g);
        };
    case SchemeId::mf_rzf:
        return [](const ComplexMatrix& h, const ComplexMatrix& g, const NetworkConfig& config) {
            return mf_rzf_beamformer(h, g, config.alpha);
        };
    }
    throw DomainError("design_for: unknown scheme");
}

RelayWeights build_weights(SchemeId scheme, const ChannelRealization& realization, const NetworkConfig& config)
{
    return build_weights(design_for(scheme), realization, config);
}

RelayWeights build_weights(const BeamformerDesign& design, const ChannelRealization& realization,
                           const NetworkConfig& config)
{
    if (realization.h.size() != realization.g.size())
        throw ShapeError("build_weights: backward and forward channel lists differ in length");
    RelayWeights out;
    out.f.reserve(realization.relays());
    out.rho.reserve(realization.relays());
    for (std::size_t k = 0; k < realization.relays(); ++k)
    {
        const ComplexMatrix& h = realization.h[k];
        ComplexMatrix f = design(h, realization.g[k], config);
        out.rho.push_back(power_control_factor(f, h, config.p, config.m, config.sigma1_sq, config.q));
        out.f.push_back(std::move(f));
    }
    return out;
}

} // namespace relaysim
