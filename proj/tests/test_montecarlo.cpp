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
#include <cstring>
#include <random>

#include "relaysim/errors.hpp"
#include "relaysim/montecarlo.hpp"

using namespace relaysim;

namespace
{
bool bit_identical(double a, double b)
{
    return std::memcmp(&a, &b, sizeof a) == 0;
}

bool same(const CapacityEstimate& a, const CapacityEstimate& b)
{
    return a.scheme == b.scheme && a.trials == b.trials && bit_identical(a.mean_bits, b.mean_bits)
        && a.stderr_bits.has_value() == b.stderr_bits.has_value()
        && (!a.stderr_bits || bit_identical(*a.stderr_bits, *b.stderr_bits));
}

SampleSummary sample_summary(const std::vector<double>& x)
{
    return summarize(x);
}
} // namespace

TEST_CASE("summarize")
{
    const SampleSummary s = sample_summary({1.0, 2.0, 3.0, 4.0});
    CHECK(s.mean == 2.5);
    // sample sd = sqrt(5/3), stderr = sd / 2
    CHECK(*s.stderr_value == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0));
    CHECK_FALSE(sample_summary({1.0}).stderr_value.has_value());
}

TEST_CASE("estimates are deterministic and independent of worker count")
{
    const NetworkConfig cfg = NetworkConfig::from_db(2, 2, 3, 10, 10);
    const CapacityEstimate a = estimate_ergodic_capacity(cfg, SchemeId::mf_rzf, 500, 42, 1);
    const CapacityEstimate b = estimate_ergodic_capacity(cfg, SchemeId::mf_rzf, 500, 42, 1);
    const CapacityEstimate c = estimate_ergodic_capacity(cfg, SchemeId::mf_rzf, 500, 42, 7);
    CHECK(same(a, b));
    CHECK(same(a, c));
    CHECK(a.label() == "mf-rzf");
    CHECK(a.trials == 500);
    CHECK_FALSE(same(a, estimate_ergodic_capacity(cfg, SchemeId::mf_rzf, 500, 43, 1)));

    const CapacityEstimate one = estimate_ergodic_capacity(cfg, SchemeId::af, 1, 42);
    CHECK_FALSE(one.stderr_bits.has_value());
    CHECK_THROWS_AS(estimate_ergodic_capacity(cfg, SchemeId::af, 0, 42), ConfigError);
}

TEST_CASE("scalar MF capacity agrees with a closed-form Monte Carlo")
{
    const NetworkConfig cfg = NetworkConfig::from_db(1, 1, 1, 10, 10);
    const std::size_t trials = 20000;
    const CapacityEstimate est = estimate_ergodic_capacity(cfg, SchemeId::mf, trials, 5);

    // Independent draws of |h|^2 and |g|^2 ~ Exp(1).
    std::mt19937_64 gen(2718);
    std::exponential_distribution<double> expo(1.0);
    std::vector<double> c(trials);
    for (double& x : c)
    {
        const double h2 = expo(gen), g2 = expo(gen);
        const double rho2 = cfg.q / (g2 * h2 * (cfg.p * h2 + cfg.sigma1_sq));
        const double snr = cfg.p * rho2 * g2 * g2 * h2 * h2 / (rho2 * g2 * g2 * h2 * cfg.sigma1_sq + cfg.sigma2_sq);
        x = 0.5 * std::log2(1.0 + snr);
    }
    const SampleSummary ref = summarize(c);
    const double se = std::hypot(*est.stderr_bits, *ref.stderr_value);
    CHECK(std::abs(est.mean_bits - ref.mean) < 3.0 * se);
}

TEST_CASE("upper bound estimates")
{
    SUBCASE("independent of QNR")
    {
        const CapacityEstimate a = estimate_upper_bound(NetworkConfig::from_db(2, 2, 3, 10, 0), 300, 9);
        const CapacityEstimate b = estimate_upper_bound(NetworkConfig::from_db(2, 2, 3, 10, 25), 300, 9);
        CHECK(same(a, b));
        CHECK(a.label() == "upper-bound");
    }
    SUBCASE("grows with K")
    {
        const CapacityEstimate k2 = estimate_upper_bound(NetworkConfig::from_db(4, 4, 2, 10, 10), 2000, 10);
        const CapacityEstimate k8 = estimate_upper_bound(NetworkConfig::from_db(4, 4, 8, 10, 10), 2000, 10);
        CHECK(k8.mean_bits - k2.mean_bits > 3.0 * combined_stderr(k2, k8));
    }
    SUBCASE("M = 2, K = 1 against an independent log-det Monte Carlo")
    {
        const NetworkConfig cfg = NetworkConfig::from_db(2, 2, 1, 10, 10);
        const std::size_t trials = 100000;
        const CapacityEstimate est = estimate_upper_bound(cfg, trials, 11);

        std::mt19937_64 gen(1414);
        std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
        std::vector<double> c(trials);
        const double s = cfg.p / (2.0 * cfg.sigma1_sq);
        for (double& x : c)
        {
            // Gram matrix of a 2x2 channel: [[a, b], [conj b, d]].
            std::complex<double> h[2][2];
            for (auto& row : h)
                for (auto& z : row)
                    z = {normal(gen), normal(gen)};
            const double a = std::norm(h[0][0]) + std::norm(h[1][0]);
            const double d = std::norm(h[0][1]) + std::norm(h[1][1]);
            const std::complex<double> b = std::conj(h[0][0]) * h[0][1] + std::conj(h[1][0]) * h[1][1];
            const double det = (1.0 + s * a) * (1.0 + s * d) - s * s * std::norm(b);
            x = 0.5 * std::log2(det);
        }
        const SampleSummary ref = summarize(c);
        CHECK(std::abs(est.mean_bits - ref.mean) < 3.0 * std::hypot(*est.stderr_bits, *ref.stderr_value));
    }
}

TEST_CASE("estimate_point shares realizations across series")
{
    const NetworkConfig cfg = NetworkConfig::from_db(2, 2, 2, 10, 10);
    const SchemeId schemes[] = {SchemeId::af, SchemeId::mf, SchemeId::mf_rzf};
    const auto est = estimate_point(cfg, schemes, true, 400, 12, 3);
    REQUIRE(est.size() == 4);
    CHECK_FALSE(est[3].scheme.has_value());
    for (std::size_t j = 0; j < 3; ++j)
    {
        CHECK(est[j].mean_bits <= est[3].mean_bits);
        CHECK(same(est[j], estimate_ergodic_capacity(cfg, schemes[j], 400, 12)));
    }
    CHECK(same(est[3], estimate_upper_bound(cfg, 400, 12)));
}

TEST_CASE("axis labels")
{
    for (SweepAxis a : {SweepAxis::relay_count, SweepAxis::pnr_db, SweepAxis::qnr_db, SweepAxis::pnr_equals_qnr_db})
        CHECK(parse_axis(to_string(a)) == a);
    CHECK_FALSE(parse_axis("snr").has_value());
}

TEST_CASE("run_sweep")
{
    SweepSpec spec;
    spec.axis = SweepAxis::relay_count;
    spec.values = {1, 2, 3};
    spec.base = {2, 2, 1, 10, 10, 1.0};
    spec.schemes = {SchemeId::mf, SchemeId::af};
    spec.trials = 200;
    spec.seed = 3;

    SUBCASE("row layout")
    {
        const auto rows = run_sweep(spec, 2);
        REQUIRE(rows.size() == 9);
        CHECK(rows[0].estimate.label() == "mf");
        CHECK(rows[1].estimate.label() == "af");
        CHECK(rows[2].estimate.label() == "upper-bound");
        CHECK(rows[3].axis_value == 2.0);
        CHECK(rows[3].point.k == 2);
        CHECK(rows[8].point.k == 3);
        CHECK(rows[8].seed == 3);
    }
    SUBCASE("single point matches a direct estimate")
    {
        spec.values = {2};
        const auto rows = run_sweep(spec);
        CHECK(same(rows[0].estimate,
                   estimate_ergodic_capacity(NetworkConfig::from_db(2, 2, 2, 10, 10), SchemeId::mf, 200, 3)));
    }
    SUBCASE("axis semantics")
    {
        spec.axis = SweepAxis::pnr_db;
        CHECK(spec.point_at(20).pnr_db == 20);
        CHECK(spec.point_at(20).qnr_db == 10);
        spec.axis = SweepAxis::qnr_db;
        CHECK(spec.point_at(20).qnr_db == 20);
        CHECK(spec.point_at(20).pnr_db == 10);
        spec.axis = SweepAxis::pnr_equals_qnr_db;
        CHECK(spec.point_at(15).pnr_db == 15);
        CHECK(spec.point_at(15).qnr_db == 15);
        CHECK(spec.point_at(15).to_config().p == doctest::Approx(std::pow(10.0, 1.5)));
    }
    SUBCASE("invalid points")
    {
        spec.values = {0, 1};
        try
        {
            run_sweep(spec);
            FAIL("expected ConfigError");
        }
        catch (const ConfigError& e)
        {
            CHECK(std::string(e.what()).find("relay_count = 0") != std::string::npos);
        }
        spec.values = {1.5};
        CHECK_THROWS_AS(spec.validate(), ConfigError);
        spec.values = {2, 1};
        CHECK_THROWS_AS(spec.validate(), ConfigError);
        spec.values = {};
        CHECK_THROWS_AS(spec.validate(), ConfigError);
        spec.values = {1};
        spec.trials = 0;
        CHECK_THROWS_AS(spec.validate(), ConfigError);
    }
}
