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
#include "rissim/geometry.hpp"

#include <cmath>
#include <random>

using namespace rissim;

TEST_CASE("hex layout: seven sites, twenty-one sectors")
{
    const NetworkLayout l = build_hex_layout(500.0, 25.0);
    CHECK(l.sites.size() == 7);
    CHECK(l.sectors.size() == 21);
    CHECK(l.cell_radius() == doctest::Approx(250.0));
    for (std::size_t s = 1; s < l.sites.size(); ++s)
    {
        CHECK(norm_2d(l.sites[s].position) == doctest::Approx(500.0).epsilon(1e-12));
        CHECK(l.sites[s].position.z == 25.0);
    }
    for (const auto &site : l.sites)
    {
        const auto &b = site.sector_bearings_deg;
        CHECK(wrap_bearing_deg(b[1] - b[0]) == doctest::Approx(120.0));
        CHECK(wrap_bearing_deg(b[2] - b[1]) == doctest::Approx(120.0));
    }
    for (const auto &sec : l.sectors)
    {
        CHECK(sec.bs.orientation.bearing_deg >= 0.0);
        CHECK(sec.bs.orientation.bearing_deg < 360.0);
        CHECK(sec.bs.position == l.sites[sec.site].position);
    }
}

TEST_CASE("hex layout scales linearly with isd")
{
    const NetworkLayout a = build_hex_layout(1.0, 25.0);
    const NetworkLayout b = build_hex_layout(500.0, 25.0);
    double nearest = 1e9;
    for (std::size_t i = 0; i < a.sites.size(); ++i)
        for (std::size_t j = i + 1; j < a.sites.size(); ++j)
            nearest = std::min(nearest, norm_2d(a.sites[i].position - a.sites[j].position));
    CHECK(nearest == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t s = 0; s < a.sites.size(); ++s)
    {
        CHECK(a.sites[s].position.x * 500.0 == doctest::Approx(b.sites[s].position.x));
        CHECK(a.sites[s].position.y * 500.0 == doctest::Approx(b.sites[s].position.y));
    }
    CHECK_THROWS_AS(build_hex_layout(0.0, 25.0), ConfigError);
    CHECK_THROWS_AS(build_hex_layout(-5.0, 25.0), ConfigError);
}

TEST_CASE("spherical unit vector")
{
    const Vec3 pole = spherical_unit_vector(0.0, 123.0);
    CHECK(pole.x == doctest::Approx(0.0));
    CHECK(pole.y == doctest::Approx(0.0));
    CHECK(pole.z == doctest::Approx(1.0));
    const Vec3 ex = spherical_unit_vector(90.0, 0.0);
    CHECK(ex.x == doctest::Approx(1.0));
    CHECK(std::abs(ex.z) < 1e-15);
    const Vec3 ey = spherical_unit_vector(90.0, 90.0);
    CHECK(ey.y == doctest::Approx(1.0));
    CHECK(std::abs(ey.x) < 1e-15);

    CHECK_THROWS_AS(spherical_unit_vector(-0.1, 0.0), DomainError);
    CHECK_THROWS_AS(spherical_unit_vector(180.1, 0.0), DomainError);
    CHECK_THROWS_AS(spherical_unit_vector(std::nan(""), 0.0), DomainError);
}

TEST_CASE("spherical unit vector has unit norm")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> zen(0.0, 180.0), az(-180.0, 180.0);
    double worst = 0.0;
    for (int i = 0; i < 1000000; ++i)
        worst = std::max(worst, std::abs(norm(spherical_unit_vector(zen(rng), az(rng))) - 1.0));
    CHECK(worst <= 1e-12);
}

TEST_CASE("link angles: boresight and right-triangle elevation")
{
    const NodeKinematics bs{{0.0, 0.0, 25.0}, {0.0, 0.0}};
    const NodeKinematics same_h{{100.0, 0.0, 25.0}, {}};
    AngleSet a = link_angles(bs, same_h);
    CHECK(a.zod == doctest::Approx(90.0));
    CHECK(a.aod == doctest::Approx(0.0));

    const NodeKinematics ue{{100.0, 0.0, 1.5}, {}};
    a = link_angles(bs, ue);
    CHECK(a.zod == doctest::Approx(90.0 + oracle::deg(std::atan(23.5 / 100.0))).epsilon(1e-12));
    CHECK(a.zod == doctest::Approx(103.2).epsilon(1e-3));

    const NodeKinematics tilted{{0.0, 0.0, 25.0}, {0.0, oracle::deg(std::atan(23.5 / 100.0))}};
    a = link_angles(tilted, ue);
    CHECK(a.zod == doctest::Approx(90.0).epsilon(1e-12));
    CHECK(std::abs(a.aod) < 1e-9);

    CHECK_THROWS_AS(link_angles(bs, bs), GeometryError);
}

TEST_CASE("link angles agree with an explicit basis projection")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> pos(-300.0, 300.0), h(1.0, 40.0), bear(0.0, 360.0), tilt(-30.0, 30.0);
    for (int i = 0; i < 2000; ++i)
    {
        const NodeKinematics a{{pos(rng), pos(rng), h(rng)}, {bear(rng), tilt(rng)}};
        const NodeKinematics b{{pos(rng), pos(rng), h(rng)}, {bear(rng), tilt(rng)}};
        const AngleSet s = link_angles(a, b);
        const oracle::V3 d{b.position.x - a.position.x, b.position.y - a.position.y, b.position.z - a.position.z};
        double zen = 0, az = 0;
        oracle::local_angles(oracle::frame(a.orientation.bearing_deg, a.orientation.downtilt_deg), d, zen, az);
        CHECK(s.zod == doctest::Approx(zen).epsilon(1e-9));
        CHECK(std::abs(s.aod - az) < 1e-9);
        oracle::local_angles(oracle::frame(b.orientation.bearing_deg, b.orientation.downtilt_deg), {-d.x, -d.y, -d.z},
                             zen, az);
        CHECK(s.zoa == doctest::Approx(zen).epsilon(1e-9));
        CHECK(std::abs(s.aoa - az) < 1e-9);
    }
}

TEST_CASE("link angles are invariant under a rigid rotation about z")
{
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> pos(-300.0, 300.0), h(1.0, 40.0), ang(0.0, 360.0), tilt(-30.0, 30.0);
    for (int i = 0; i < 1000; ++i)
    {
        NodeKinematics a{{pos(rng), pos(rng), h(rng)}, {ang(rng), tilt(rng)}};
        NodeKinematics b{{pos(rng), pos(rng), h(rng)}, {ang(rng), tilt(rng)}};
        const AngleSet before = link_angles(a, b);
        const double rot = ang(rng);
        const Mat3 r = local_to_global({rot, 0.0});
        a.position = r * a.position;
        b.position = r * b.position;
        a.orientation.bearing_deg = wrap_bearing_deg(a.orientation.bearing_deg + rot);
        b.orientation.bearing_deg = wrap_bearing_deg(b.orientation.bearing_deg + rot);
        const AngleSet after = link_angles(a, b);
        CHECK(std::abs(after.zod - before.zod) < 1e-9);
        CHECK(std::abs(after.zoa - before.zoa) < 1e-9);
        CHECK(std::abs(std::remainder(after.aod - before.aod, 360.0)) < 1e-9);
        CHECK(std::abs(std::remainder(after.aoa - before.aoa, 360.0)) < 1e-9);
    }
}

TEST_CASE("link angles swap departure and arrival when reversed")
{
    const NodeKinematics a{{10.0, -40.0, 25.0}, {30.0, 6.0}};
    const NodeKinematics b{{-80.0, 120.0, 1.5}, {200.0, 0.0}};
    const AngleSet f = link_angles(a, b), r = link_angles(b, a);
    CHECK(f.zod == doctest::Approx(r.zoa));
    CHECK(f.aod == doctest::Approx(r.aoa));
    CHECK(f.zoa == doctest::Approx(r.zod));
    CHECK(f.aoa == doctest::Approx(r.aod));
}

TEST_CASE("wrap bearing")
{
    CHECK(wrap_bearing_deg(360.0) == 0.0);
    CHECK(wrap_bearing_deg(-30.0) == doctest::Approx(330.0));
    CHECK(wrap_bearing_deg(725.0) == doctest::Approx(5.0));
    CHECK(wrap_bearing_deg(-1e-18) < 360.0);
}

TEST_CASE("scenario names")
{
    for (auto k : {ScenarioKind::UeRandomRisEdge, ScenarioKind::UeEdgeRisMiddle, ScenarioKind::UeEdgeRisEdge})
        CHECK(scenario_from_string(to_string(k)) == k);
    CHECK_THROWS_AS(scenario_from_string("d"), ConfigError);
}

namespace
{

Placement place(ScenarioKind kind, std::uint64_t seed, const NetworkLayout &l)
{
    PlacementParams p;
    p.scenario = kind;
    return place_nodes(l, p, seed);
}

} // namespace

TEST_CASE("placement: RIS counts, heights and radii")
{
    const NetworkLayout l = build_hex_layout(500.0, 25.0);
    const Placement a = place(ScenarioKind::UeRandomRisEdge, 3, l);
    REQUIRE(a.ris.size() == 168);
    CHECK(a.ues.size() == 210);
    for (const auto &r : a.ris)
    {
        const Vec3 site = l.sectors[r.sector].bs.position;
        CHECK(norm_2d(r.pose.position - site) == doctest::Approx(0.9 * 250.0));
        CHECK(r.pose.position.z == 15.0);
        CHECK(inside_sector_wedge(l, r.sector, r.pose.position));
    }

    const Placement b = place(ScenarioKind::UeEdgeRisMiddle, 3, l);
    for (const auto &r : b.ris)
    {
        CHECK(norm_2d(r.pose.position - l.sectors[r.sector].bs.position) == doctest::Approx(0.5 * 250.0));
        CHECK(r.pose.position.z == 15.0);
    }
    for (const auto &u : b.ues)
    {
        const double d = norm_2d(u.position - l.sectors[u.home_sector].bs.position);
        CHECK(d >= 0.85 * 250.0 - 1e-9);
        CHECK(d <= 250.0 + 1e-9);
    }
}

TEST_CASE("placement: RIS face their base station")
{
    const NetworkLayout l = build_hex_layout(500.0, 25.0);
    const Placement p = place(ScenarioKind::UeEdgeRisEdge, 1, l);
    for (const auto &r : p.ris)
    {
        const Vec3 to_bs = l.sectors[r.sector].bs.position - r.pose.position;
        const Vec3 local = local_to_global(r.pose.orientation).transposed() * to_bs;
        CHECK(local.x > 0.0);
        CHECK(std::abs(local.y) < 1e-6);
        CHECK(r.pose.orientation.downtilt_deg == 10.0);
    }
}

TEST_CASE("placement: UE constraints hold for every scenario and seed")
{
    const NetworkLayout l = build_hex_layout(500.0, 25.0);
    for (auto kind : {ScenarioKind::UeRandomRisEdge, ScenarioKind::UeEdgeRisMiddle, ScenarioKind::UeEdgeRisEdge})
        for (std::uint64_t seed = 0; seed < 20; ++seed)
        {
            const Placement p = place(kind, seed, l);
            for (const auto &u : p.ues)
            {
                CHECK(u.position.z == 1.5);
                CHECK(norm_2d(u.position - l.sectors[u.home_sector].bs.position) >= 35.0);
                CHECK(inside_sector_wedge(l, u.home_sector, u.position));
            }
        }
}

TEST_CASE("placement is deterministic in the seed")
{
    const NetworkLayout l = build_hex_layout(500.0, 25.0);
    const Placement a = place(ScenarioKind::UeRandomRisEdge, 42, l);
    const Placement b = place(ScenarioKind::UeRandomRisEdge, 42, l);
    const Placement c = place(ScenarioKind::UeRandomRisEdge, 43, l);
    REQUIRE(a.ues.size() == b.ues.size());
    bool differs = false;
    for (std::size_t i = 0; i < a.ues.size(); ++i)
    {
        CHECK(a.ues[i].position == b.ues[i].position);
        differs = differs || !(a.ues[i].position == c.ues[i].position);
    }
    for (std::size_t i = 0; i < a.ris.size(); ++i)
        CHECK(a.ris[i].pose == b.ris[i].pose);
    CHECK(differs);
}

TEST_CASE("sector wedge membership")
{
    const NetworkLayout l = build_hex_layout(500.0, 25.0);
    const Sector &s = l.sectors[0];
    const Vec3 on_axis = s.bs.position + spherical_unit_vector(90.0, s.bearing_deg) * 100.0;
    const Vec3 behind = s.bs.position - spherical_unit_vector(90.0, s.bearing_deg) * 100.0;
    CHECK(inside_sector_wedge(l, 0, on_axis));
    CHECK_FALSE(inside_sector_wedge(l, 0, behind));
}
