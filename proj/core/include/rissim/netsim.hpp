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

#ifndef RISSIM_NETSIM_HPP
#define RISSIM_NETSIM_HPP

#include "rissim/channel.hpp"
#include "rissim/geometry.hpp"
#include "rissim/ris.hpp"

#include <cstdint>
#include <vector>

namespace rissim
{

enum class DirectLinkMode
{
    Los,        // UMa LOS pathloss
    NlosOffset, // UMa LOS pathloss plus a fixed extra loss
};

struct LayoutConfig
{
    double isd_m = 500.0;

    friend bool operator==(const LayoutConfig &, const LayoutConfig &) = default;
};

struct BsConfig
{
    double height_m = 25.0;
    double downtilt_deg = 0.0;
    double tx_power_dbm = 46.0;
    int port_elements = 1;              // vertical column, uniform weights
    double port_spacing_wavelengths = 0.5;
    ElementPatternParams element = bs_element_params();

    friend bool operator==(const BsConfig &, const BsConfig &) = default;
};

struct RisConfig
{
    int per_sector = 8; // 0 gives the no-RIS baseline
    int rows = 16;
    int cols = 16;
    double dh_wavelengths = 0.5;
    double dv_wavelengths = 0.8;
    double height_m = 15.0;
    double downtilt_deg = 10.0;
    int quantization_bits = 0; // 0 = continuous phase
    PatternShape element_shape = PatternShape::Sectorized;
    bool forbid_grating_spacing = false; // reject pitches above one wavelength

    friend bool operator==(const RisConfig &, const RisConfig &) = default;
};

struct UeConfig
{
    int per_sector = 10;
    double height_m = 1.5;
    double min_distance_m = kMinUeDistance2d;
    int receive_elements = 1;

    friend bool operator==(const UeConfig &, const UeConfig &) = default;
};

struct ChannelConfig
{
    double shadow_sigma_db = 4.0;
    DirectLinkMode direct_link = DirectLinkMode::Los;
    double nlos_offset_db = 20.0;
    bool interference = true;

    friend bool operator==(const ChannelConfig &, const ChannelConfig &) = default;
};

struct ScenarioConfig
{
    ScenarioKind scenario = ScenarioKind::UeRandomRisEdge;
    std::uint64_t seed = 1;
    int drops = 20;
    LayoutConfig layout;
    BsConfig bs;
    RisConfig ris;
    UeConfig ue;
    CarrierConfig carrier; // tx_power_w is derived from bs.tx_power_dbm by resolved()
    ChannelConfig channel;

    void validate() const; // throws ConfigError naming the offending key
    ScenarioConfig resolved() const;

    PlacementParams placement() const;
    ElementPatternParams ris_element() const;
    BSPortConfig bs_port() const;

    friend bool operator==(const ScenarioConfig &, const ScenarioConfig &) = default;
};

struct InterferenceBreakdown
{
    double direct_w = 0.0;           // neighbor BS, direct path
    double via_neighbor_ris_w = 0.0; // neighbor BS through RIS of other sectors
    double via_own_ris_w = 0.0;      // neighbor BS through RIS of the serving sector

    double total() const { return direct_w + via_neighbor_ris_w + via_own_ris_w; }
};

struct DropRecord
{
    int drop = 0;
    int ue = 0;
    int serving_sector = 0;
    int serving_ris = -1; // global RIS index, -1 if none visible
    double direct_w = 0.0;
    double ris_w = 0.0;
    double signal_w = 0.0; // direct_w + ris_w
    InterferenceBreakdown interference;
    double noise_w = 0.0;
    double sinr_db = 0.0;
    double rx_power_dbm = 0.0;
};

double sinr_db(double signal_w, double interference_w, double noise_w);

// Everything about one drop that stays fixed while UEs are evaluated: node positions, large-scale
// parameters, association and the phase profile each panel holds for its own scheduled user.
class DropState
{
public:
    DropState(const ScenarioConfig &config, int drop_index);

    int ue_count() const { return static_cast<int>(ues_.size()); }
    int ris_count() const { return static_cast<int>(panels_.size()); }
    int sector_count() const { return static_cast<int>(bs_.size()); }

    const NetworkLayout &layout() const { return layout_; }
    const Placement &placement() const { return placement_; }
    const std::vector<BsNode> &base_stations() const { return bs_; }
    const std::vector<RISPanel> &panels() const { return panels_; }
    const std::vector<UeNode> &ues() const { return ues_; }
    std::uint64_t seed() const { return seed_; }

    int serving_sector(int ue) const { return serving_[ue]; }
    double direct_power(int sector, int ue) const { return direct_[idx_su(sector, ue)]; }
    // UE the panel's fixed profile was optimized for, -1 if its sector has no users
    int profile_target(int ris) const { return profile_target_[ris]; }

    // Optimal-phase power over sector -> ris -> ue (0 if hidden)
    double aligned_power(int sector, int ris, int ue) const;
    // Power over sector -> ris -> ue with the panel's fixed profile
    double fixed_profile_power(int sector, int ris, int ue) const;
    // Power over sector -> ris -> ue with a profile optimized (and quantized if configured) for this ue
    double steered_power(int sector, int ris, int ue) const;

    // Serving-sector panel with the strongest optimal-phase power, -1 if none is visible
    int select_ris(int ue) const;

    InterferenceBreakdown interference_power(int ue) const;
    DropRecord evaluate(int ue) const;

private:
    std::size_t idx_su(int s, int u) const { return static_cast<std::size_t>(s) * ues_.size() + u; }
    std::size_t idx_sl(int s, int l) const { return static_cast<std::size_t>(s) * panels_.size() + l; }
    std::size_t idx_lu(int l, int u) const { return static_cast<std::size_t>(l) * ues_.size() + u; }

    ScenarioConfig config_;
    int drop_ = 0;
    std::uint64_t seed_ = 0;
    double lambda_ = 0.0;
    double noise_w_ = 0.0;

    NetworkLayout layout_;
    Placement placement_;
    std::vector<BsNode> bs_;
    std::vector<RISPanel> panels_;
    std::vector<UeNode> ues_;

    std::vector<double> direct_;        // [sector][ue]
    std::vector<int> serving_;          // [ue]
    std::vector<HopResponse> in_;       // [sector][ris]
    std::vector<double> att_in_;        // [sector][ris]
    std::vector<HopResponse> out_;      // [ris][ue]
    std::vector<double> att_out_;       // [ris][ue]
    std::vector<ArrayPhasor> fixed_;    // [ris]
    std::vector<int> profile_target_;   // [ris]
};

// All UE records of one drop; the drop's random stream is derived from (config.seed, drop_index)
std::vector<DropRecord> run_drop(const ScenarioConfig &config, int drop_index);

struct CdfCurve
{
    std::vector<double> values; // sorted ascending
    std::vector<double> probs;  // (i + 1) / N

    static CdfCurve from_samples(std::vector<double> samples);
    // Linear interpolation between order statistics, q in [0, 1]
    double quantile(double q) const;
};

struct PercentileSummary
{
    double p5 = 0.0;
    double p50 = 0.0;
    double p95 = 0.0;
};

struct CampaignResult
{
    std::vector<DropRecord> records; // ordered by (drop, ue)
    CdfCurve rx_power_dbm;
    CdfCurve sinr_db;
    PercentileSummary rx_power_summary;
    PercentileSummary sinr_summary;
};

// Runs drops [0, n_drops) on `workers` threads. Output does not depend on the worker count.
CampaignResult run_campaign(const ScenarioConfig &config, int n_drops, int workers = 1);

PercentileSummary summarize(const CdfCurve &curve);

} // namespace rissim

#endif
