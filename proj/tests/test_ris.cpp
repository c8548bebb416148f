// SPDX-License-Identifier: Apache-2.0
//
// rissim - system-level simulator for RIS-assisted multi-cell networks
// Copyright (C) 2026 The rissim Authors
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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "rissim/errors.hpp"
#include "rissim/ris.hpp"

#include <random>
#include <set>
#include <sstream>

using namespace rissim;

namespace
{

constexpr double kLambda = 3.0e8 / 2.6e9;

RISPanel panel(int rows, int cols, double dh = 0.5, double dv = 0.8)
{
    return RISPanel{rows, cols, dh, dv, {}};
}

double wrapped(double x)
{
    return std::remainder(x, 2.0 * oracle::pi);
}

} // namespace

TEST_CASE("element positions")
{
    const auto one = element_positions(panel(1, 1), kLambda);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Vec3{});

    const auto two = element_positions(panel(1, 2), 0.1153);
    REQUIRE(two.size() == 2);
    CHECK(two[0].y == doctest::Approx(-0.0288).epsilon(2e-3));
    CHECK(two[1].y == doctest::Approx(0.0288).epsilon(2e-3));
    CHECK(two[1].y == doctest::Approx(0.25 * 0.1153));

    const auto grid = element_positions(panel(16, 16), kLambda);
    CHECK(grid.size() == 256);
    double ymin = 1e9, ymax = -1e9;
    for (const auto &p : grid)
    {
        CHECK(p.x == 0.0);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    CHECK(ymax - ymin == doctest::Approx(15 * 0.5 * kLambda));
}

TEST_CASE("panel validation")
{
    CHECK_THROWS_AS(panel(0, 4).validate(), ConfigError);
    CHECK_THROWS_AS(panel(4, 4, -0.5).validate(), ConfigError);
    CHECK_THROWS_AS(panel(4, 4, 0.5, 0.0).validate(), ConfigError);
    CHECK_NOTHROW(panel(4, 4, 0.9, 0.9).validate());
}

TEST_CASE("propagation phase")
{
    for (const auto &ph : propagation_phase(panel(1, 1), {70.0, 20.0}, {100.0, -40.0}, kLambda))
        CHECK(ph == 0.0);

    for (double inc : {10.0, 30.0, 60.0})
        for (const auto &ph : propagation_phase(panel(16, 16), {90.0, inc}, {90.0, -inc}, kLambda))
            CHECK(std::abs(ph) < 1e-9);

    // 1x3 panel at dh = 0.5: outer elements sit at +-lambda/2 along y
    const auto ph = propagation_phase(panel(1, 3, 0.5), {90.0, 90.0}, {90.0, 0.0}, kLambda);
    CHECK(ph[2] == doctest::Approx(oracle::pi));
    CHECK(ph[0] == doctest::Approx(-oracle::pi));
    CHECK(ph[1] == 0.0);
}

TEST_CASE("propagation phase agrees with a brute-force grid")
{
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> zen(30.0, 150.0), az(-80.0, 80.0);
    const RISPanel p = panel(5, 7, 0.4, 0.6);
    for (int i = 0; i < 50; ++i)
    {
        const Direction in{zen(rng), az(rng)}, out{zen(rng), az(rng)};
        const auto ph = propagation_phase(p, in, out, kLambda);
        const oracle::V3 a = oracle::unit(in.zenith_deg, in.azimuth_deg);
        const oracle::V3 b = oracle::unit(out.zenith_deg, out.azimuth_deg);
        const oracle::V3 s{a.x + b.x, a.y + b.y, a.z + b.z};
        for (int r = 0; r < p.rows; ++r)
            for (int c = 0; c < p.cols; ++c)
            {
                const double y = (c - 3.0) * 0.4, z = (r - 2.0) * 0.6;
                CHECK(ph[r * p.cols + c] == doctest::Approx(2.0 * oracle::pi * (s.y * y + s.z * z)));
            }
    }
}

TEST_CASE("optimal phase negates")
{
    const PhaseProfile z = optimal_phase({0.0, 0.0, 0.0});
    CHECK(z.phases == std::vector<double>{-0.0, -0.0, -0.0});
    CHECK(z.quantization_bits == 0);
    const PhaseProfile p = optimal_phase({oracle::pi / 3.0, -oracle::pi / 2.0});
    CHECK(p.phases[0] == doctest::Approx(-oracle::pi / 3.0));
    CHECK(p.phases[1] == doctest::Approx(oracle::pi / 2.0));
}

TEST_CASE("optimal profile aligns the element sum")
{
    const RISPanel p = panel(16, 16);
    const Direction in{95.0, 20.0}, out{80.0, -35.0};
    const Vec3 g = (2.0 * kPi / kLambda) * (spherical_unit_vector(in.zenith_deg, in.azimuth_deg) +
                                            spherical_unit_vector(out.zenith_deg, out.azimuth_deg));
    const PhaseProfile opt = optimal_phase(propagation_phase(p, in, out, kLambda));
    CHECK(std::abs(ArrayPhasor(p, kLambda, opt).sum(g)) == doctest::Approx(256.0).epsilon(1e-12));

    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> ang(-kPi, kPi);
    for (int t = 0; t < 1000; ++t)
    {
        PhaseProfile rnd;
        rnd.phases.resize(256);
        for (auto &v : rnd.phases)
            v = ang(rng);
        CHECK(std::abs(ArrayPhasor(p, kLambda, rnd).sum(g)) <= 256.0 * (1.0 + 1e-12));
    }
}

TEST_CASE("array phasor agrees with the brute-force element sum")
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> zen(20.0, 160.0), az(-85.0, 85.0), ang(-kPi, kPi);
    const RISPanel p = panel(6, 9, 0.4, 0.8);
    for (int i = 0; i < 200; ++i)
    {
        PhaseProfile prof;
        prof.phases.resize(p.element_count());
        for (auto &v : prof.phases)
            v = ang(rng);
        const oracle::V3 a = oracle::unit(zen(rng), az(rng)), b = oracle::unit(zen(rng), az(rng));
        const oracle::V3 s{a.x + b.x, a.y + b.y, a.z + b.z};
        const Vec3 g = (2.0 * kPi / kLambda) * Vec3{s.x, s.y, s.z};
        const cdouble fast = ArrayPhasor(p, kLambda, prof).sum(g);
        const auto ref = oracle::element_sum(p.rows, p.cols, p.dh, p.dv, s, prof.phases);
        CHECK(std::abs(fast - ref) < 1e-9);
    }
    CHECK_THROWS_AS(ArrayPhasor(p, kLambda, PhaseProfile{{0.0, 1.0}, 0}), ConfigError);
}

TEST_CASE("aligned gain scales with the square of the element count")
{
    const Direction in{90.0, 25.0}, out{90.0, -50.0};
    auto gain = [&](int n) {
        const RISPanel p = panel(n, n);
        const Vec3 g = (2.0 * kPi / kLambda) * (spherical_unit_vector(90.0, 25.0) + spherical_unit_vector(90.0, -50.0));
        return std::norm(ArrayPhasor(p, kLambda, optimal_phase(propagation_phase(p, in, out, kLambda))).sum(g));
    };
    CHECK(10.0 * std::log10(gain(32) / gain(16)) == doctest::Approx(12.04).epsilon(1e-3));
    CHECK(std::abs(10.0 * std::log10(gain(40) / gain(16)) - 15.92) < 0.01);
    CHECK(10.0 * std::log10(gain(16)) == doctest::Approx(48.16).epsilon(1e-3));
}

TEST_CASE("quantizer reference values")
{
    CHECK(quantize_phase(0.3, 2) == doctest::Approx(oracle::pi / 4.0));
    CHECK(quantize_phase(oracle::pi, 2) == doctest::Approx(-3.0 * oracle::pi / 4.0));
    CHECK(quantize_phase(-oracle::pi / 4.0, 2) == doctest::Approx(-oracle::pi / 4.0));
    CHECK(quantize_phase(oracle::pi / 2.0 + 1e-9, 2) == doctest::Approx(3.0 * oracle::pi / 4.0));
    CHECK(quantize_phase(0.1, 1) == doctest::Approx(oracle::pi / 2.0));
    CHECK(quantize_phase(4.0, 1) == doctest::Approx(-oracle::pi / 2.0));
    CHECK_THROWS_AS(quantize_phase(0.0, 0), ConfigError);
    CHECK_THROWS_AS(quantize_phase(0.0, 4), ConfigError);
}

TEST_CASE("quantizer error bound and level set")
{
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> ang(-20.0, 20.0);
    for (int bits = 1; bits <= 3; ++bits)
    {
        PhaseProfile p;
        p.phases.resize(5000);
        for (auto &v : p.phases)
            v = ang(rng);
        const PhaseProfile q = quantize_phase(p, bits);
        CHECK(q.quantization_bits == bits);
        std::set<long> levels;
        for (std::size_t k = 0; k < p.phases.size(); ++k)
        {
            CHECK(std::abs(wrapped(q.phases[k] - p.phases[k])) <= oracle::pi / (1 << bits) + 1e-12);
            levels.insert(std::lround(q.phases[k] * 1e9));
        }
        CHECK(levels.size() == static_cast<std::size_t>(1 << bits));
    }
}

TEST_CASE("mean quantization loss follows the uniform-error law")
{
    const RISPanel p = panel(40, 40);
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> zen(60.0, 120.0), az(-70.0, 70.0);
    for (int bits = 1; bits <= 3; ++bits)
    {
        double loss = 0.0;
        const int trials = 50;
        for (int t = 0; t < trials; ++t)
        {
            const Direction in{zen(rng), az(rng)}, out{zen(rng), az(rng)};
            const Vec3 g = (2.0 * kPi / kLambda) * (spherical_unit_vector(in.zenith_deg, in.azimuth_deg) +
                                                    spherical_unit_vector(out.zenith_deg, out.azimuth_deg));
            const PhaseProfile opt = optimal_phase(propagation_phase(p, in, out, kLambda));
            const double q = std::norm(ArrayPhasor(p, kLambda, quantize_phase(opt, bits)).sum(g));
            loss += 10.0 * std::log10(1600.0 * 1600.0 / q);
        }
        CHECK(loss / trials == doctest::Approx(oracle::uniform_quantization_loss_db(bits)).epsilon(0.1));
    }
}

TEST_CASE("front hemisphere")
{
    CHECK(front_hemisphere({1.0, 0.0, 0.0}));
    CHECK_FALSE(front_hemisphere({-1.0, 0.0, 0.0}));
    CHECK_FALSE(front_hemisphere({0.0, 1.0, 0.0}));
}

TEST_CASE("zero profile reflects specularly with a flat element")
{
    auto iso = ris_element_params();
    iso.shape = PatternShape::Isotropic;
    for (double inc : {10.0, 20.0, 30.0, 45.0, 60.0})
    {
        const ScatterPattern s = scattered_pattern(panel(16, 16), {90.0, inc}, {}, 0.5, kLambda, iso);
        CHECK(std::abs(s.samples[s.peak].out_azimuth_deg + inc) <= 0.5);
        CHECK(s.samples[s.peak].gain_db == 0.0);
    }
}

TEST_CASE("sectorized element pulls the lobe toward the normal by a bounded amount")
{
    for (double inc : {10.0, 20.0, 30.0, 45.0, 60.0})
    {
        const ScatterPattern s = scattered_pattern(panel(16, 16), {90.0, inc}, {}, 0.5, kLambda);
        const double peak = -s.samples[s.peak].out_azimuth_deg;
        CHECK(peak <= inc);
        CHECK(peak >= inc - 3.0);
    }
}

TEST_CASE("steered lobe lands at the requested angle")
{
    const RISPanel p = panel(16, 16);
    const PhaseProfile opt = optimal_phase(propagation_phase(p, {90.0, 30.0}, {90.0, -45.0}, kLambda));
    const ScatterPattern s = scattered_pattern(p, {90.0, 30.0}, opt, 0.5, kLambda);
    CHECK(std::abs(s.samples[s.peak].out_azimuth_deg + 45.0) <= 1.0);
}

TEST_CASE("single element pattern is the element pattern product")
{
    const auto el = ris_element_params();
    const ScatterPattern s = scattered_pattern(panel(1, 1), {90.0, 20.0}, {{1.234}, 0}, 5.0, kLambda, el);
    const double fin = std::pow(10.0, element_gain_dbi(90.0, 20.0, el) / 10.0);
    for (const auto &x : s.samples)
        CHECK(x.gain == doctest::Approx(fin * std::pow(10.0, element_gain_dbi(90.0, x.out_azimuth_deg, el) / 10.0)));
}

TEST_CASE("front hemisphere cut covers the half space")
{
    const ScatterPattern s =
        scattered_pattern(panel(4, 4), {80.0, 10.0}, {}, 10.0, kLambda, ris_element_params(), PatternCut::FrontHemisphere);
    CHECK(s.samples.size() == 19 * 19);
    CHECK_THROWS_AS(scattered_pattern(panel(4, 4), {90.0, 120.0}, {}, 1.0, kLambda), DomainError);
    CHECK_THROWS_AS(scattered_pattern(panel(4, 4), {90.0, 10.0}, {}, 0.0, kLambda), ConfigError);
}

TEST_CASE("scatter csv dump")
{
    const ScatterPattern s = scattered_pattern(panel(4, 4), {90.0, 30.0}, {}, 45.0, kLambda);
    std::ostringstream os;
    write_scatter_csv(os, s);
    std::istringstream in(os.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "out_zenith_deg,out_azimuth_deg,gain_db");
    int rows = 0;
    while (std::getline(in, line))
        ++rows;
    CHECK(rows == 5);
}
