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

#ifndef RISSIM_CHANNEL_HPP
#define RISSIM_CHANNEL_HPP

#include "rissim/antenna.hpp"
#include "rissim/geometry.hpp"
#include "rissim/ris.hpp"

#include <cstdint>

namespace rissim
{

inline constexpr double kSpeedOfLight = 3.0e8; // m/s, value used by the UMa breakpoint formula
inline constexpr double kMinUeDistance2d = 35.0;

inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

struct CarrierConfig
{
    double fc_hz = 2.6e9;
    double tx_power_w = dbm_to_watts(46.0); // per sector
    double bandwidth_hz = 100e6;
    double noise_figure_db = 9.0;

    double wavelength() const { return kSpeedOfLight / fc_hz; }
    // -174 dBm/Hz thermal floor plus receiver noise figure
    double noise_power_w() const;
    void validate() const;

    friend bool operator==(const CarrierConfig &, const CarrierConfig &) = default;
};

// ---------- UMa LOS pathloss ----------

double breakpoint_distance_m(double fc_hz, double h_bs_m, double h_ue_m);

// Dual-slope LOS pathloss in dB. The 2D distance implied by d3d and the heights must lie in [10, 5000] m,
// otherwise DomainError.
double pathloss_uma_los_db(double d3d_m, double fc_hz, double h_bs_m, double h_ue_m);

// Pathloss of a hop between two arbitrary nodes: the higher node takes the BS role and the 2D
// distance is clamped into the model's validity range.
double hop_pathloss_db(const Position3D &a, const Position3D &b, double fc_hz);

// ---------- shadow fading ----------

enum class LinkKind : std::uint64_t
{
    BsUe = 1,
    BsRis = 2,
    RisUe = 3,
};

std::uint64_t make_link_id(LinkKind kind, std::uint64_t a, std::uint64_t b);

// Zero-mean Gaussian sample in dB, a pure function of (link_id, seed)
double shadow_fading_db(std::uint64_t link_id, double sigma_db, std::uint64_t seed);

// ---------- nodes and hops ----------

struct LinkLargeScale
{
    double pathloss_db = 0.0;
    double shadow_db = 0.0; // positive = extra attenuation
    bool visible = true;

    // Linear power factor 10^(-(PL + SF) / 10)
    double attenuation() const { return std::pow(10.0, -(pathloss_db + shadow_db) / 10.0); }
};

struct BsNode
{
    NodeKinematics pose;
    BSPortConfig port = single_element_port();
};

struct UeNode
{
    NodeKinematics pose;
    ElementPatternParams element = ue_element_params();
    int receive_elements = 1; // co-located
};

struct CascadeCoefficient
{
    cdouble value{0.0, 0.0};
    bool visible = false;
};

// BS -> element k of the panel, including both patterns and the arrival steering phase
CascadeCoefficient cascade_alpha1(const BsNode &bs, const RISPanel &ris, int element, double wavelength_m,
                                  const ElementPatternParams &ris_element = ris_element_params());

// Element k of the panel -> UE, including both patterns and the departure steering phase
CascadeCoefficient cascade_alpha2(const RISPanel &ris, int element, const UeNode &ue, double wavelength_m,
                                  const ElementPatternParams &ris_element = ris_element_params());

// Received power over BS -> RIS -> UE by direct per-element summation. Zero if either hop is hidden
// behind the panel.
double ris_path_power(const BsNode &bs, const RISPanel &ris, const UeNode &ue, const PhaseProfile &profile,
                      const LinkLargeScale &bs_ris, const LinkLargeScale &ris_ue, const CarrierConfig &carrier,
                      const ElementPatternParams &ris_element = ris_element_params());

// BS -> UE without the panel. Throws DomainError below the minimum 2D distance.
double direct_path_power(const BsNode &bs, const UeNode &ue, const LinkLargeScale &bs_ue,
                         const CarrierConfig &carrier);

// Factored per-hop quantities. Element patterns are identical across the aperture in the far field,
// so a hop reduces to an amplitude and a panel-frame phase gradient.
struct HopResponse
{
    bool visible = false;
    cdouble amplitude{0.0, 0.0}; // polarization-combined pattern product
    Vec3 gradient;               // 2 pi r / wavelength, panel frame, rad/m; set even when hidden
};

HopResponse incident_hop(const BsNode &bs, const RISPanel &ris, double wavelength_m,
                         const ElementPatternParams &ris_element = ris_element_params());
HopResponse departing_hop(const RISPanel &ris, const UeNode &ue, double wavelength_m,
                          const ElementPatternParams &ris_element = ris_element_params());

// Same quantity as ris_path_power, evaluated with the separable array sum
double ris_path_power(const HopResponse &in, const HopResponse &out, const ArrayPhasor &array,
                      double attenuation_in, double attenuation_out, double tx_power_w);

// Power with every element term aligned: |sum| = K
double aligned_ris_path_power(const HopResponse &in, const HopResponse &out, int element_count,
                              double attenuation_in, double attenuation_out, double tx_power_w);

} // namespace rissim

#endif
