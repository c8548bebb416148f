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

#ifndef RISSIM_GEOMETRY_HPP
#define RISSIM_GEOMETRY_HPP

#include "rissim/vec3.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace rissim
{

using Position3D = Vec3;

// Boresight direction of a node. Bearing is measured counter-clockwise from the global +x axis,
// a positive downtilt points the boresight below the horizon.
struct Orientation
{
    double bearing_deg = 0.0;  // [0, 360)
    double downtilt_deg = 0.0; // [-90, 90]

    friend bool operator==(const Orientation &, const Orientation &) = default;
};

// Normalizes a bearing into [0, 360)
double wrap_bearing_deg(double bearing_deg);

// Local-to-global rotation: bearing about global z, then downtilt about the rotated y axis.
// The local boresight is +x.
Mat3 local_to_global(const Orientation &o);

struct NodeKinematics
{
    Position3D position;
    Orientation orientation;

    friend bool operator==(const NodeKinematics &, const NodeKinematics &) = default;
};

// The four angles of one hop, in degrees. Departure angles live in the frame of the transmitting
// node, arrival angles in the frame of the receiving node and point back toward the transmitter.
struct AngleSet
{
    double zod = 0.0;
    double aod = 0.0;
    double zoa = 0.0;
    double aoa = 0.0;
};

// (sin(zenith) cos(azimuth), sin(zenith) sin(azimuth), cos(zenith)); throws DomainError if zenith is
// outside [0, 180] degrees.
Vec3 spherical_unit_vector(double zenith_deg, double azimuth_deg);

struct Direction
{
    double zenith_deg = 0.0;
    double azimuth_deg = 0.0;
};

// Zenith/azimuth of a (not necessarily normalized) vector; throws GeometryError for the zero vector
Direction direction_angles(const Vec3 &v);

AngleSet link_angles(const NodeKinematics &from, const NodeKinematics &to);

struct Site
{
    Position3D position;
    std::array<double, 3> sector_bearings_deg{};
};

struct Sector
{
    int site = 0;
    double bearing_deg = 0.0;
    NodeKinematics bs;
};

struct NetworkLayout
{
    std::vector<Site> sites;
    std::vector<Sector> sectors;
    double inter_site_distance = 0.0;

    // Radius of the sector wedge used for node placement
    double cell_radius() const { return 0.5 * inter_site_distance; }
};

inline constexpr int kNumSites = 7;
inline constexpr int kSectorsPerSite = 3;
inline constexpr int kNumSectors = kNumSites * kSectorsPerSite;

// Center site plus one hexagonal ring, three sectors per site at bearings 30/150/270 degrees
NetworkLayout build_hex_layout(double isd_m, double bs_height_m, double bs_downtilt_deg = 0.0);

enum class ScenarioKind
{
    UeRandomRisEdge, // UE uniform over the sector, RIS on the edge arc
    UeEdgeRisMiddle, // UE in the edge annulus, RIS at mid radius
    UeEdgeRisEdge,   // UE in the edge annulus, RIS on the edge arc
};

std::string_view to_string(ScenarioKind kind);
ScenarioKind scenario_from_string(std::string_view name); // throws ConfigError

struct PlacementParams
{
    ScenarioKind scenario = ScenarioKind::UeRandomRisEdge;
    int ris_per_sector = 8;
    int ue_per_sector = 10;
    double ris_height_m = 15.0;
    double ris_downtilt_deg = 10.0;
    double ue_height_m = 1.5;
    double min_ue_distance_m = 35.0; // 2D, to the serving site
};

// Placement bands as fractions of the cell radius
inline constexpr double kRisEdgeRadius = 0.9;
inline constexpr double kRisMiddleRadius = 0.5;
inline constexpr double kUeEdgeInner = 0.85;
inline constexpr double kUeEdgeOuter = 1.0;

struct RisSite
{
    int sector = 0;
    NodeKinematics pose; // panel boresight faces the sector's BS
};

struct UeSite
{
    int home_sector = 0; // sector wedge the UE was dropped in
    Position3D position;
};

struct Placement
{
    std::vector<RisSite> ris;
    std::vector<UeSite> ues;
};

Placement place_nodes(const NetworkLayout &layout, const PlacementParams &params, std::uint64_t seed);

// True if the 2D position lies in the 120 degree wedge centered on the sector bearing
bool inside_sector_wedge(const NetworkLayout &layout, int sector, const Position3D &p);

} // namespace rissim

#endif
