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

#include "relaysim/link.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "relaysim/errors.hpp"

namespace relaysim
{
namespace
{
void check_consistent(const ChannelRealization& realization, const RelayWeights& weights)
{
    if (realization.h.size() != realization.g.size() || weights.f.size() != realization.relays()
        || weights.rho.size() != realization.relays() || realization.relays() == 0)
    {
        throw ShapeError("link: realization and relay weights disagree on the number of relays");
    }
}

// y = a x for a dense matrix and a plain vector.
void apply(const ComplexMatrix& a, std::span<const Complex> x, std::span<Complex> y) noexcept
{
    for (std::size_t i = 0; i < a.rows(); ++i)
    {
        Complex s = 0.0;
        const auto row = a.row(i);
        for (std::size_t j = 0; j < a.cols(); ++j)
            s += row[j] * x[j];
        y[i] = s;
    }
}
} // namespace

ComplexMatrix effective_channel(const ChannelRealization& realization, const RelayWeights& weights)
{
    check_consistent(realization, weights);
    ComplexMatrix sum;
    for (std::size_t k = 0; k < realization.relays(); ++k)
    {
        ComplexMatrix term = weights.rho[k] * matmul(matmul(realization.g[k], weights.f[k]), realization.h[k]);
        if (k == 0)
            sum = std::move(term);
        else
            sum += term;
    }
    if (!sum.is_square())
        throw ShapeError("effective_channel: result is not square");
    return sum;
}

std::vector<double> per_stream_noise_power(const ChannelRealization& realization, const RelayWeights& weights,
                                           const QrFactors& qr, const NetworkConfig& config)
{
    check_consistent(realization, weights);
    const ComplexMatrix q_h = conj_transpose(qr.q);
    const std::size_t m = qr.r.rows();
    std::vector<double> relay_noise(m, 0.0);
    for (std::size_t k = 0; k < realization.relays(); ++k)
    {
        const ComplexMatrix rotated = weights.rho[k] * matmul(matmul(q_h, realization.g[k]), weights.f[k]);
        for (std::size_t row = 0; row < m; ++row)
            relay_noise[row] += row_norm_sq(rotated, row);
    }
    std::vector<double> out(m);
    for (std::size_t row = 0; row < m; ++row)
        out[row] = config.sigma1_sq * relay_noise[row] + config.sigma2_sq;
    return out;
}

std::vector<double> per_stream_snr(const ChannelRealization& realization, const RelayWeights& weights,
                                   const QrFactors& qr, const NetworkConfig& config)
{
    const std::vector<double> noise = per_stream_noise_power(realization, weights, qr, config);
    const double per_stream_power = config.p / static_cast<double>(config.m);
    std::vector<double> out(noise.size());
    for (std::size_t row = 0; row < noise.size(); ++row)
    {
        const double diag = qr.r(row, row).real();
        out[row] = per_stream_power * diag * diag / noise[row];
    }
    return out;
}

double instantaneous_capacity(std::span<const double> snrs)
{
    double sum = 0.0;
    for (double snr : snrs)
    {
        if (!(snr >= 0.0))
            throw DomainError("instantaneous_capacity: SNR must be non-negative");
        sum += std::log2(1.0 + snr);
    }
    return 0.5 * sum;
}

double upper_bound_capacity(const ChannelRealization& realization, const NetworkConfig& config)
{
    const std::size_t m = config.m;
    const double scale = config.p / (static_cast<double>(m) * config.sigma1_sq);
    ComplexMatrix gram(m, m);
    for (const ComplexMatrix& h : realization.h)
        gram += matmul(conj_transpose(h), h);
    gram *= scale;
    for (std::size_t i = 0; i < m; ++i)
        gram(i, i) += 1.0;
    return 0.5 * logdet_hpd(gram) / std::numbers::ln2;
}

LinkMetrics evaluate_link(const ChannelRealization& realization, const RelayWeights& weights,
                          const NetworkConfig& config)
{
    LinkMetrics out;
    out.effective_channel = effective_channel(realization, weights);
    out.qr = qr_decompose(out.effective_channel);
    out.snr_per_stream = per_stream_snr(realization, weights, out.qr, config);
    out.capacity_bits = instantaneous_capacity(out.snr_per_stream);
    return out;
}

std::vector<MeasuredStream> simulate_transmission(const ChannelRealization& realization,
                                                  const RelayWeights& weights, const QrFactors& qr,
                                                  const NetworkConfig& config, const TransmissionOptions& options,
                                                  RngStream& rng)
{
    check_consistent(realization, weights);
    if (options.noise_draws < 1)
        throw DomainError("simulate_transmission: need at least one noise draw");

    const std::size_t m = config.m;
    const std::size_t n = config.n;
    const std::size_t relays = realization.relays();
    const double source_amp = std::sqrt(config.p / static_cast<double>(m));
    const double relay_noise_amp = options.noiseless ? 0.0 : std::sqrt(config.sigma1_sq);
    const double dest_noise_amp = options.noiseless ? 0.0 : std::sqrt(config.sigma2_sq);
    const ComplexMatrix q_h = conj_transpose(qr.q);

    std::vector<Complex> s(m), r(n), t(n), gt(m), y(m), y_rot(m);
    std::vector<double> signal_acc(m, 0.0), noise_acc(m, 0.0);

    for (std::size_t draw = 0; draw < options.noise_draws; ++draw)
    {
        for (Complex& x : s)
            x = source_amp * rng.next_complex_gaussian();
        for (Complex& x : y)
            x = dest_noise_amp * rng.next_complex_gaussian();

        for (std::size_t k = 0; k < relays; ++k)
        {
            apply(realization.h[k], s, r);
            for (Complex& x : r)
                x += relay_noise_amp * rng.next_complex_gaussian();
            apply(weights.f[k], r, t);
            for (Complex& x : t)
                x *= weights.rho[k];
            apply(realization.g[k], t, gt);
            for (std::size_t i = 0; i < m; ++i)
                y[i] += gt[i];
        }
        apply(q_h, y, y_rot);

        for (std::size_t stream = 0; stream < m; ++stream)
        {
            Complex residual = y_rot[stream];
            for (std::size_t j = stream + 1; j < m; ++j)
                residual -= qr.r(stream, j) * s[j];
            const Complex wanted = qr.r(stream, stream) * s[stream];
            residual -= wanted;
            signal_acc[stream] += std::norm(wanted);
            noise_acc[stream] += std::norm(residual);
        }
    }

    const double draws = static_cast<double>(options.noise_draws);
    std::vector<MeasuredStream> out(m);
    for (std::size_t stream = 0; stream < m; ++stream)
    {
        MeasuredStream& ms = out[stream];
        ms.signal_power = signal_acc[stream] / draws;
        ms.noise_power = noise_acc[stream] / draws;
        ms.snr = ms.noise_power > 0.0 ? ms.signal_power / ms.noise_power
                                      : std::numeric_limits<double>::infinity();
    }
    return out;
}

} // namespace relaysim
