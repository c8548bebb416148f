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

#include "rissim/geometry.hpp"
#include "rissim/errors.hpp"

#include <algorithm>
#include <random>

namespace rissim
{

double wrap_bearing_deg(double bearing_deg)
{
    double b = std::fmod(bearing_deg, 360.0);
    if (b < 0.0)
        b += 360.0;
    if (b >= 360.0) // fmod of tiny negatives
        b = 0.0;
    return b;
}

Mat3 local_to_global(const Orientation &o)
{
    const double a = deg_to_rad(o.bearing_deg);
    const double t = deg_to_rad(o.downtilt_deg);
    const double ca = std::cos(a), sa = std::sin(a);
    const double ct = std::cos(t), st = std::sin(t);

    Mat3 rz;
    rz.m[0][0] = ca, rz.m[0][1] = -sa, rz.m[0][2] = 0.0;
    rz.m[1][0] = sa, rz.m[1][1] = ca, rz.m[1][2] = 0.0;
    rz.m[2][0] = 0.0, rz.m[2][1] = 0.0, rz.m[2][2] = 1.0;

    // Positive tilt maps local +x to (cos t, 0, -sin t)
    Mat3 ry;
    ry.m[0][0] = ct, ry.m[0][1] = 0.0, ry.m[0][2] = st;
    ry.m[1][0] = 0.0, ry.m[1][1] = 1.0, ry.m[1][2] = 0.0;
    ry.m[2][0] = -st, ry.m[2][1] = 0.0, ry.m[2][2] = ct;

    return rz * ry;
}

Vec3 spherical_unit_vector(double zenith_deg, double azimuth_deg)
{
    if (!(zenith_deg >= 0.0 && zenith_deg <= 180.0))
        throw DomainError("spherical_unit_vector: zenith " + std::to_string(zenith_deg) + " deg outside [0, 180]");
    const double th = deg_to_rad(zenith_deg);
    const double ph = deg_to_rad(azimuth_deg);
    const double st = std::sin(th);
    return {st * std::cos(ph), st * std::sin(ph), std::cos(th)};
}

Direction direction_angles(const Vec3 &v)
{
    const double n = norm(v);
    if (!(n > 0.0))
        throw GeometryError("direction_angles: zero-length direction");
    const double cz = std::clamp(v.z / n, -1.0, 1.0);
    return {rad_to_deg(std::acos(cz)), rad_to_deg(std::atan2(v.y, v.x))};
}

AngleSet link_angles(const NodeKinematics &from, const NodeKinematics &to)
{
    const Vec3 d = to.position - from.position;
    if (norm(d) < 1e-9)
        throw GeometryError("link_angles: coincident node positions");

    const Vec3 dep = local_to_global(from.orientation).transposed() * d;
    const Vec3 arr = local_to_global(to.orientation).transposed() * (-1.0 * d);
    const Direction dd = direction_angles(dep);
    const Direction da = direction_angles(arr);
    return {dd.zenith_deg, dd.azimuth_deg, da.zenith_deg, da.azimuth_deg};
}

NetworkLayout build_hex_layout(double isd_m, double bs_height_m, double bs_downtilt_deg)
{
    if (!(isd_m > 0.0))
        throw ConfigError("build_hex_layout: inter-site distance must be positive");
    if (bs_height_m < 0.0)
        throw ConfigError("build_hex_layout: BS height must be non-negative");

    NetworkLayout layout;
    layout.inter_site_distance = isd_m;

    constexpr std::array<double, 3> bearings = {30.0, 150.0, 270.0};
    layout.sites.push_back({{0.0, 0.0, bs_height_m}, bearings});
    for (int i = 0; i < kNumSites - 1; ++i)
    {
        const double a = deg_to_rad(60.0 * i);
        layout.sites.push_back({{isd_m * std::cos(a), isd_m * std::sin(a), bs_height_m}, bearings});
    }

    for (int s = 0; s < kNumSites; ++s)
        for (double b : layout.sites[s].sector_bearings_deg)
            layout.sectors.push_back({s, b, {layout.sites[s].position, {b, bs_downtilt_deg}}});

    return layout;
}

std::string_view to_string(ScenarioKind kind)
{
    switch (kind)
    {
    case ScenarioKind::UeRandomRisEdge:
        return "ue_random_ris_edge";
    case ScenarioKind::UeEdgeRisMiddle:
        return "ue_edge_ris_middle";
    case ScenarioKind::UeEdgeRisEdge:
        return "ue_edge_ris_edge";
    }
    return "unknown";
}

ScenarioKind scenario_from_string(std::string_view name)
{
    for (auto k : {ScenarioKind::UeRandomRisEdge, ScenarioKind::UeEdgeRisMiddle, ScenarioKind::UeEdgeRisEdge})
        if (to_string(k) == name)
            return k;
    throw ConfigError("unknown scenario kind '" + std::string(name) + "'");
}

bool inside_sector_wedge(const NetworkLayout &layout, int sector, const Position3D &p)
{
    const Sector &sec = layout.sectors.at(sector);
    const Vec3 d = p - layout.sites[sec.site].position;
    const double az = rad_to_deg(std::atan2(d.y, d.x));
    double diff = std::fmod(az - sec.bearing_deg + 540.0, 360.0) - 180.0;
    return std::abs(diff) <= 60.0 + 1e-9;
}

namespace
{

struct Band
{
    double inner;
    double outer;
};

Band ue_band(ScenarioKind kind, double radius, double min_dist)
{
    Band b = kind == ScenarioKind::UeRandomRisEdge ? Band{0.0, radius}
                                                   : Band{kUeEdgeInner * radius, kUeEdgeOuter * radius};
    b.inner = std::max(b.inner, min_dist);
    if (b.inner > b.outer)
        throw ConfigError("place_nodes: minimum UE distance exceeds the UE placement band");
    return b;
}

double ris_radius(ScenarioKind kind, double radius)
{
    return kind == ScenarioKind::UeEdgeRisMiddle ? kRisMiddleRadius * radius : kRisEdgeRadius * radius;
}

} // namespace

Placement place_nodes(const NetworkLayout &layout, const PlacementParams &params, std::uint64_t seed)
{
    if (params.ris_per_sector < 0 || params.ue_per_sector < 0)
        throw ConfigError("place_nodes: node counts must be non-negative");
    // to_string doubles as the enum range check
    if (to_string(params.scenario) == "unknown")
        throw ConfigError("place_nodes: unknown scenario kind");

    const double radius = layout.cell_radius();
    const Band band = ue_band(params.scenario, radius, params.min_ue_distance_m);
    const double r_ris = ris_radius(params.scenario, radius);

    Placement out;
    out.ris.reserve(layout.sectors.size() * params.ris_per_sector);
    out.ues.reserve(layout.sectors.size() * params.ue_per_sector);

    for (int s = 0; s < static_cast<int>(layout.sectors.size()); ++s)
    {
        const Sector &sec = layout.sectors[s];
        const Vec3 site = layout.sites[sec.site].position;
        const double step = 120.0 / std::max(params.ris_per_sector, 1);
        for (int i = 0; i < params.ris_per_sector; ++i)
        {
            const double az = deg_to_rad(sec.bearing_deg - 60.0 + (i + 0.5) * step);
            const Vec3 p{site.x + r_ris * std::cos(az), site.y + r_ris * std::sin(az), params.ris_height_m};
            const double facing = rad_to_deg(std::atan2(site.y - p.y, site.x - p.x));
            out.ris.push_back({s, {p, {wrap_bearing_deg(facing), params.ris_downtilt_deg}}});
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r2_in = band.inner * band.inner;
    const double r2_out = band.outer * band.outer;
    for (int s = 0; s < static_cast<int>(layout.sectors.size()); ++s)
    {
        const Sector &sec = layout.sectors[s];
        const Vec3 site = layout.sites[sec.site].position;
        for (int i = 0; i < params.ue_per_sector; ++i)
        {
            // Area-uniform over the annular wedge
            const double r = std::sqrt(r2_in + unit(rng) * (r2_out - r2_in));
            const double az = deg_to_rad(sec.bearing_deg - 60.0 + 120.0 * unit(rng));
            out.ues.push_back({s, {site.x + r * std::cos(az), site.y + r * std::sin(az), params.ue_height_m}});
        }
    }
    return out;
}

} // namespace rissim
