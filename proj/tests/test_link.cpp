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

#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "relaysim/errors.hpp"
#include "relaysim/link.hpp"

using namespace relaysim;
using namespace std::complex_literals;

namespace
{
constexpr SchemeId kSchemes[] = {SchemeId::af, SchemeId::mf, SchemeId::mf_rzf};

NetworkConfig identity_config()
{
    NetworkConfig c;
    c.m = c.n = 2;
    c.k = 1;
    c.p = 2.0;
    c.q = 2.0;
    c.sigma1_sq = 1.0;
    c.sigma2_sq = 1.0;
    return c;
}
} // namespace

TEST_CASE("effective_channel")
{
    SUBCASE("single AF relay with identity channels")
    {
        const NetworkConfig cfg = identity_config();
        const ChannelRealization r{{ComplexMatrix::identity(2)}, {ComplexMatrix::identity(2)}};
        const RelayWeights w = build_weights(SchemeId::af, r, cfg);
        CHECK(oracle::rel_diff(effective_channel(r, w), w.rho[0] * ComplexMatrix::identity(2)) < 1e-15);
    }
    SUBCASE("MF term-by-term expansion")
    {
        const NetworkConfig cfg = NetworkConfig::from_db(2, 3, 2, 10, 10);
        const ChannelRealization r = realization_for_trial(cfg, 31, 0);
        const RelayWeights w = build_weights(SchemeId::mf, r, cfg);
        oracle::Dense expected(2, std::vector<std::complex<double>>(2));
        for (std::size_t k = 0; k < 2; ++k)
        {
            const auto g = oracle::to_dense(r.g[k]);
            const auto h = oracle::to_dense(r.h[k]);
            const auto term = oracle::product(oracle::product(oracle::product(g, oracle::adjoint(g)), oracle::adjoint(h)), h);
            for (std::size_t i = 0; i < 2; ++i)
                for (std::size_t j = 0; j < 2; ++j)
                    expected[i][j] += w.rho[k] * term[i][j];
        }
        CHECK(oracle::rel_diff(effective_channel(r, w), oracle::from_dense(expected)) < 1e-13);
    }
    SUBCASE("MF-RZF with alpha = 0 and square forward channels is Hermitian PSD")
    {
        NetworkConfig cfg = NetworkConfig::from_db(3, 3, 4, 10, 10, 0.0);
        std::mt19937_64 gen(32);
        for (std::uint64_t t = 0; t < 20; ++t)
        {
            const ChannelRealization r = realization_for_trial(cfg, 32, t);
            const ComplexMatrix hsd = effective_channel(r, build_weights(SchemeId::mf_rzf, r, cfg));
            CHECK(frobenius_norm(hsd - conj_transpose(hsd)) < 1e-9);
            for (int rep = 0; rep < 5; ++rep)
            {
                const ComplexMatrix x = oracle::random_matrix(3, 1, gen);
                CHECK(matmul(matmul(conj_transpose(x), hsd), x)(0, 0).real() >= -1e-9);
            }
        }
    }
    SUBCASE("mismatched weights")
    {
        const NetworkConfig cfg = NetworkConfig::from_db(2, 2, 2, 10, 10);
        const ChannelRealization r = realization_for_trial(cfg, 1, 0);
        RelayWeights w = build_weights(SchemeId::mf, r, cfg);
        w.rho.pop_back();
        CHECK_THROWS_AS(effective_channel(r, w), ShapeError);
    }
}

TEST_CASE("per_stream_snr closed forms")
{
    SUBCASE("identity channels, one MF relay")
    {
        const NetworkConfig cfg = identity_config();
        const ChannelRealization r{{ComplexMatrix::identity(2)}, {ComplexMatrix::identity(2)}};
        const LinkMetrics lm = evaluate_link(r, build_weights(SchemeId::mf, r, cfg), cfg);
        REQUIRE(lm.snr_per_stream.size() == 2);
        CHECK(lm.snr_per_stream[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
        CHECK(lm.snr_per_stream[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    }
    SUBCASE("scalar MF link")
    {
        // h = 1+i, g = 2-i, P = Q = 4, unit noise:
        // rho^2 = 4 / (5 * 2 * (4 * 2 + 1)) = 2/45,
        // SNR = P rho^2 |g|^4 |h|^4 / (rho^2 |g|^4 |h|^2 + 1) = 160/29.
        NetworkConfig cfg;
        cfg.p = cfg.q = 4.0;
        const ChannelRealization r{{ComplexMatrix{{1.0 + 1i}}}, {ComplexMatrix{{2.0 - 1i}}}};
        const RelayWeights w = build_weights(SchemeId::mf, r, cfg);
        CHECK(w.rho[0] * w.rho[0] == doctest::Approx(2.0 / 45.0).epsilon(1e-14));
        const LinkMetrics lm = evaluate_link(r, w, cfg);
        CHECK(lm.snr_per_stream[0] == doctest::Approx(160.0 / 29.0).epsilon(1e-13));
    }
}

TEST_CASE("instantaneous_capacity")
{
    CHECK(instantaneous_capacity(std::vector<double>{1.0, 1.0}) == doctest::Approx(1.0));
    CHECK(instantaneous_capacity(std::vector<double>{0.0}) == 0.0);
    CHECK(instantaneous_capacity(std::vector<double>{3.0}) == doctest::Approx(1.0));
    CHECK_THROWS_AS(instantaneous_capacity(std::vector<double>{1.0, -0.1}), DomainError);
}

TEST_CASE("upper_bound_capacity")
{
    const NetworkConfig cfg = identity_config();
    CHECK(upper_bound_capacity({{ComplexMatrix::identity(2)}, {ComplexMatrix::identity(2)}}, cfg)
          == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(upper_bound_capacity({{ComplexMatrix(2, 2)}, {ComplexMatrix::identity(2)}}, cfg) == 0.0);

    const NetworkConfig rnd = NetworkConfig::from_db(3, 4, 2, 7, 10);
    for (std::uint64_t t = 0; t < 10; ++t)
    {
        const ChannelRealization r = realization_for_trial(rnd, 33, t);
        oracle::Dense a(3, std::vector<std::complex<double>>(3));
        for (const ComplexMatrix& h : r.h)
        {
            const auto hd = oracle::to_dense(h);
            const auto hh = oracle::product(oracle::adjoint(hd), hd);
            for (std::size_t i = 0; i < 3; ++i)
                for (std::size_t j = 0; j < 3; ++j)
                    a[i][j] += rnd.p / (3.0 * rnd.sigma1_sq) * hh[i][j];
        }
        for (std::size_t i = 0; i < 3; ++i)
            a[i][i] += 1.0;
        const double expected = 0.5 * std::log2(oracle::determinant(a).real());
        CHECK(std::abs(upper_bound_capacity(r, rnd) - expected) <= 1e-9 * expected);
    }
}

TEST_CASE("link properties over random realizations")
{
    for (std::size_t m : {2u, 4u})
    {
        for (std::size_t k : {1u, 3u})
        {
            const NetworkConfig cfg = NetworkConfig::from_db(m, m + 1, k, 10, 15);
            for (std::uint64_t t = 0; t < 30; ++t)
            {
                const ChannelRealization r = realization_for_trial(cfg, 34, t);
                const double bound = upper_bound_capacity(r, cfg);
                for (SchemeId s : kSchemes)
                {
                    const RelayWeights w = build_weights(s, r, cfg);
                    const LinkMetrics lm = evaluate_link(r, w, cfg);
                    CHECK(lm.capacity_bits <= bound + 1e-9);
                    CHECK(oracle::rel_diff(matmul(lm.qr.q, lm.qr.r), lm.effective_channel) < 1e-10);
                    for (double noise : per_stream_noise_power(r, w, lm.qr, cfg))
                        CHECK(noise >= cfg.sigma2_sq);
                    for (double snr : lm.snr_per_stream)
                    {
                        CHECK(snr >= 0.0);
                        CHECK(std::isfinite(snr));
                    }

                    // Pre-scaling the beamformer is undone by power control.
                    const BeamformerDesign base = design_for(s);
                    const BeamformerDesign scaled = [&](const ComplexMatrix& h, const ComplexMatrix& g,
                                                        const NetworkConfig& c) { return 3.0 * base(h, g, c); };
                    const LinkMetrics lm3 = evaluate_link(r, build_weights(scaled, r, cfg), cfg);
                    for (std::size_t i = 0; i < m; ++i)
                        CHECK(std::abs(lm3.snr_per_stream[i] - lm.snr_per_stream[i])
                              <= 1e-10 * lm.snr_per_stream[i]);
                }
            }
        }
    }
}

TEST_CASE("MF-RZF converges to MF for large alpha")
{
    NetworkConfig mf = NetworkConfig::from_db(2, 3, 2, 10, 10);
    NetworkConfig rzf = mf;
    rzf.alpha = 1e8;
    for (std::uint64_t t = 0; t < 20; ++t)
    {
        const ChannelRealization r = realization_for_trial(mf, 35, t);
        const LinkMetrics a = evaluate_link(r, build_weights(SchemeId::mf, r, mf), mf);
        const LinkMetrics b = evaluate_link(r, build_weights(SchemeId::mf_rzf, r, rzf), rzf);
        for (std::size_t i = 0; i < 2; ++i)
            CHECK(std::abs(a.snr_per_stream[i] - b.snr_per_stream[i]) <= 1e-5 * a.snr_per_stream[i]);
        CHECK(std::abs(a.capacity_bits - b.capacity_bits) < 1e-5);
    }
}

TEST_CASE("rank-deficient effective channel gives zero SNR, not an error")
{
    // Both source antennas see identical channels, so H_SD has rank one.
    NetworkConfig cfg = identity_config();
    const ComplexMatrix h{{1.0, 1.0}, {0.5i, 0.5i}};
    const ChannelRealization r{{h}, {ComplexMatrix::identity(2)}};
    const LinkMetrics lm = evaluate_link(r, build_weights(SchemeId::mf, r, cfg), cfg);
    CHECK(lm.snr_per_stream[1] < 1e-25);
    CHECK(std::isfinite(lm.capacity_bits));
}

TEST_CASE("simulate_transmission")
{
    SUBCASE("noiseless draws")
    {
        const NetworkConfig cfg = NetworkConfig::from_db(2, 2, 2, 10, 10);
        const ChannelRealization r = realization_for_trial(cfg, 36, 0);
        const RelayWeights w = build_weights(SchemeId::mf, r, cfg);
        const QrFactors qr = qr_decompose(effective_channel(r, w));
        RngStream rng(36, 0, StreamId::noise);
        const auto measured = simulate_transmission(r, w, qr, cfg, {1000, true}, rng);
        for (const MeasuredStream& ms : measured)
        {
            CHECK(ms.signal_power > 0.0);
            CHECK(ms.noise_power <= 1e-24 * ms.signal_power);
        }
    }
    SUBCASE("identity channels match 1/3")
    {
        const NetworkConfig cfg = identity_config();
        const ChannelRealization r{{ComplexMatrix::identity(2)}, {ComplexMatrix::identity(2)}};
        const RelayWeights w = build_weights(SchemeId::mf, r, cfg);
        const QrFactors qr = qr_decompose(effective_channel(r, w));
        RngStream rng(37, 0, StreamId::noise);
        for (const MeasuredStream& ms : simulate_transmission(r, w, qr, cfg, {100000, false}, rng))
            CHECK(ms.snr == doctest::Approx(1.0 / 3.0).epsilon(0.02));
    }
    SUBCASE("random realization matches the analytic SNR")
    {
        const NetworkConfig cfg = NetworkConfig::from_db(3, 3, 2, 8, 12);
        const ChannelRealization r = realization_for_trial(cfg, 38, 0);
        for (SchemeId s : kSchemes)
        {
            const RelayWeights w = build_weights(s, r, cfg);
            const LinkMetrics lm = evaluate_link(r, w, cfg);
            RngStream rng(38, 0, StreamId::noise);
            const auto measured = simulate_transmission(r, w, lm.qr, cfg, {100000, false}, rng);
            for (std::size_t i = 0; i < 3; ++i)
            {
                const double ratio = measured[i].snr / lm.snr_per_stream[i];
                CHECK(ratio >= 0.98);
                CHECK(ratio <= 1.02);
            }
        }
    }
    SUBCASE("needs a draw")
    {
        const NetworkConfig cfg = identity_config();
        const ChannelRealization r{{ComplexMatrix::identity(2)}, {ComplexMatrix::identity(2)}};
        const RelayWeights w = build_weights(SchemeId::mf, r, cfg);
        RngStream rng(1, 0);
        CHECK_THROWS_AS(simulate_transmission(r, w, qr_decompose(effective_channel(r, w)), cfg, {0, false}, rng),
                        DomainError);
    }
}
