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

#include "rissim/netsim.hpp"
#include "rissim/errors.hpp"
#include "rissim/rng.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

namespace rissim
{

// ---------- configuration ----------

namespace
{

void require(bool ok, const char *key, const std::string &what)
{
    if (!ok)
        throw ConfigError(std::string(key) + ": " + what);
}

} // namespace

void ScenarioConfig::validate() const
{
    require(drops >= 1, "drops", "must be >= 1");
    require(layout.isd_m > 0.0, "layout.isd_m", "must be positive");

    require(bs.height_m >= 0.0, "bs.height_m", "must be non-negative");
    require(bs.downtilt_deg >= -90.0 && bs.downtilt_deg <= 90.0, "bs.downtilt_deg", "must lie in [-90, 90]");
    require(std::isfinite(bs.tx_power_dbm), "bs.tx_power_dbm", "must be finite");
    require(bs.port_elements >= 1, "bs.port_elements", "must be >= 1");
    require(bs.port_spacing_wavelengths > 0.0, "bs.port_spacing_wavelengths", "must be positive");
    try
    {
        bs.element.validate();
    }
    catch (const ConfigError &e)
    {
        throw ConfigError(std::string("bs.element: ") + e.what());
    }

    require(ris.per_sector >= 0, "ris.per_sector", "must be >= 0");
    require(ris.rows >= 1, "ris.rows", "must be >= 1");
    require(ris.cols >= 1, "ris.cols", "must be >= 1");
    require(ris.dh_wavelengths > 0.0, "ris.dh_wavelengths", "must be positive");
    require(ris.dv_wavelengths > 0.0, "ris.dv_wavelengths", "must be positive");
    if (ris.forbid_grating_spacing)
    {
        require(ris.dh_wavelengths <= 1.0, "ris.dh_wavelengths", "exceeds one wavelength (forbid_grating_spacing)");
        require(ris.dv_wavelengths <= 1.0, "ris.dv_wavelengths", "exceeds one wavelength (forbid_grating_spacing)");
    }
    require(ris.height_m >= 0.0, "ris.height_m", "must be non-negative");
    require(ris.downtilt_deg >= -90.0 && ris.downtilt_deg <= 90.0, "ris.downtilt_deg", "must lie in [-90, 90]");
    require(ris.quantization_bits >= 0 && ris.quantization_bits <= 3, "ris.quantization_bits", "must be 0, 1, 2 or 3");

    require(ue.per_sector >= 1, "ue.per_sector", "must be >= 1");
    require(ue.height_m >= 0.0, "ue.height_m", "must be non-negative");
    require(ue.min_distance_m >= 0.0, "ue.min_distance_m", "must be non-negative");
    require(ue.min_distance_m <= 0.5 * layout.isd_m, "ue.min_distance_m", "exceeds the cell radius");
    require(ue.receive_elements >= 1, "ue.receive_elements", "must be >= 1");

    require(carrier.fc_hz > 0.0, "carrier.frequency_hz", "must be positive");
    require(carrier.bandwidth_hz > 0.0, "carrier.bandwidth_hz", "must be positive");
    require(std::isfinite(carrier.noise_figure_db), "carrier.noise_figure_db", "must be finite");

    require(channel.shadow_sigma_db >= 0.0, "channel.shadow_sigma_db", "must be non-negative");
    require(channel.nlos_offset_db >= 0.0, "channel.nlos_offset_db", "must be non-negative");
}

ScenarioConfig ScenarioConfig::resolved() const
{
    ScenarioConfig c = *this;
    c.carrier.tx_power_w = dbm_to_watts(bs.tx_power_dbm);
    return c;
}

PlacementParams ScenarioConfig::placement() const
{
    PlacementParams p;
    p.scenario = scenario;
    p.ris_per_sector = ris.per_sector;
    p.ue_per_sector = ue.per_sector;
    p.ris_height_m = ris.height_m;
    p.ris_downtilt_deg = ris.downtilt_deg;
    p.ue_height_m = ue.height_m;
    p.min_ue_distance_m = ue.min_distance_m;
    return p;
}

ElementPatternParams ScenarioConfig::ris_element() const
{
    ElementPatternParams p = ris_element_params();
    p.shape = ris.element_shape;
    return p;
}

BSPortConfig ScenarioConfig::bs_port() const
{
    if (bs.port_elements == 1)
        return single_element_port(bs.element);
    return vertical_column_port(bs.port_elements, bs.port_spacing_wavelengths * carrier.wavelength(), bs.element);
}

double sinr_db(double signal_w, double interference_w, double noise_w)
{
    if (!(noise_w > 0.0))
        throw ConfigError("sinr_db: noise power must be positive");
    return 10.0 * std::log10(signal_w / (interference_w + noise_w));
}

// ---------- drop ----------

DropState::DropState(const ScenarioConfig &config, int drop_index)
    : config_(config.resolved()), drop_(drop_index)
{
    config_.validate();
    seed_ = derive_seed(config_.seed, static_cast<std::uint64_t>(drop_index));
    lambda_ = config_.carrier.wavelength();
    noise_w_ = config_.carrier.noise_power_w();

    layout_ = build_hex_layout(config_.layout.isd_m, config_.bs.height_m, config_.bs.downtilt_deg);
    placement_ = place_nodes(layout_, config_.placement(), derive_seed(seed_, 0, 1));

    const BSPortConfig port = config_.bs_port();
    for (const auto &sec : layout_.sectors)
        bs_.push_back({sec.bs, port});
    for (const auto &r : placement_.ris)
        panels_.push_back({config_.ris.rows, config_.ris.cols, config_.ris.dh_wavelengths, config_.ris.dv_wavelengths,
                           r.pose});
    for (const auto &u : placement_.ues)
        ues_.push_back({{u.position, {}}, ue_element_params(), config_.ue.receive_elements});

    const int n_s = sector_count(), n_l = ris_count(), n_u = ue_count();
    const double sigma = config_.channel.shadow_sigma_db;
    const double fc = config_.carrier.fc_hz;
    const double extra_direct =
        config_.channel.direct_link == DirectLinkMode::NlosOffset ? config_.channel.nlos_offset_db : 0.0;

    direct_.resize(static_cast<std::size_t>(n_s) * n_u);
    for (int s = 0; s < n_s; ++s)
        for (int u = 0; u < n_u; ++u)
        {
            LinkLargeScale ls;
            ls.pathloss_db = hop_pathloss_db(bs_[s].pose.position, ues_[u].pose.position, fc) + extra_direct;
            ls.shadow_db = shadow_fading_db(make_link_id(LinkKind::BsUe, s, u), sigma, seed_);
            direct_[idx_su(s, u)] = direct_path_power(bs_[s], ues_[u], ls, config_.carrier);
        }

    serving_.resize(n_u);
    for (int u = 0; u < n_u; ++u)
    {
        int best = 0;
        for (int s = 1; s < n_s; ++s)
            if (direct_[idx_su(s, u)] > direct_[idx_su(best, u)])
                best = s;
        serving_[u] = best;
    }

    const ElementPatternParams ris_el = config_.ris_element();
    in_.resize(static_cast<std::size_t>(n_s) * n_l);
    att_in_.assign(in_.size(), 0.0);
    for (int s = 0; s < n_s; ++s)
        for (int l = 0; l < n_l; ++l)
        {
            const auto i = idx_sl(s, l);
            in_[i] = incident_hop(bs_[s], panels_[l], lambda_, ris_el);
            if (!in_[i].visible)
                continue;
            LinkLargeScale ls;
            ls.pathloss_db = hop_pathloss_db(bs_[s].pose.position, panels_[l].kinematics.position, fc);
            ls.shadow_db = shadow_fading_db(make_link_id(LinkKind::BsRis, s, l), sigma, seed_);
            att_in_[i] = ls.attenuation();
        }

    out_.resize(static_cast<std::size_t>(n_l) * n_u);
    att_out_.assign(out_.size(), 0.0);
    for (int l = 0; l < n_l; ++l)
        for (int u = 0; u < n_u; ++u)
        {
            const auto i = idx_lu(l, u);
            out_[i] = departing_hop(panels_[l], ues_[u], lambda_, ris_el);
            if (!out_[i].visible)
                continue;
            LinkLargeScale ls;
            ls.pathloss_db = hop_pathloss_db(panels_[l].kinematics.position, ues_[u].pose.position, fc);
            ls.shadow_db = shadow_fading_db(make_link_id(LinkKind::RisUe, l, u), sigma, seed_);
            att_out_[i] = ls.attenuation();
        }

    // Each panel serves one user of its own sector, picked uniformly at random
    std::vector<std::vector<int>> users_of(n_s);
    for (int u = 0; u < n_u; ++u)
        users_of[serving_[u]].push_back(u);

    std::mt19937_64 rng(derive_seed(seed_, 0, 2));
    fixed_.reserve(n_l);
    profile_target_.assign(n_l, -1);
    for (int l = 0; l < n_l; ++l)
    {
        const int s = placement_.ris[l].sector;
        PhaseProfile profile;
        if (!users_of[s].empty())
        {
            std::uniform_int_distribution<std::size_t> pick(0, users_of[s].size() - 1);
            const int target = users_of[s][pick(rng)];
            profile_target_[l] = target;
            profile = optimal_phase(
                propagation_phase(panels_[l], in_[idx_sl(s, l)].gradient + out_[idx_lu(l, target)].gradient, lambda_));
            if (config_.ris.quantization_bits > 0)
                profile = quantize_phase(profile, config_.ris.quantization_bits);
        }
        fixed_.emplace_back(panels_[l], lambda_, profile);
    }
}

double DropState::aligned_power(int sector, int ris, int ue) const
{
    const auto i = idx_sl(sector, ris), o = idx_lu(ris, ue);
    return aligned_ris_path_power(in_[i], out_[o], panels_[ris].element_count(), att_in_[i], att_out_[o],
                                  config_.carrier.tx_power_w);
}

double DropState::fixed_profile_power(int sector, int ris, int ue) const
{
    const auto i = idx_sl(sector, ris), o = idx_lu(ris, ue);
    return ris_path_power(in_[i], out_[o], fixed_[ris], att_in_[i], att_out_[o], config_.carrier.tx_power_w);
}

double DropState::steered_power(int sector, int ris, int ue) const
{
    if (config_.ris.quantization_bits == 0)
        return aligned_power(sector, ris, ue);

    const auto i = idx_sl(sector, ris), o = idx_lu(ris, ue);
    if (!in_[i].visible || !out_[o].visible)
        return 0.0;
    const PhaseProfile q = quantize_phase(
        optimal_phase(propagation_phase(panels_[ris], in_[i].gradient + out_[o].gradient, lambda_)),
        config_.ris.quantization_bits);
    const ArrayPhasor array(panels_[ris], lambda_, q);
    return ris_path_power(in_[i], out_[o], array, att_in_[i], att_out_[o], config_.carrier.tx_power_w);
}

int DropState::select_ris(int ue) const
{
    const int s = serving_[ue];
    int best = -1;
    double best_p = 0.0;
    for (int l = 0; l < ris_count(); ++l)
    {
        if (placement_.ris[l].sector != s)
            continue;
        const double p = aligned_power(s, l, ue);
        if (p > best_p)
        {
            best_p = p;
            best = l;
        }
    }
    return best;
}

InterferenceBreakdown DropState::interference_power(int ue) const
{
    InterferenceBreakdown out;
    if (!config_.channel.interference)
        return out;

    const int serving = serving_[ue];
    for (int s = 0; s < sector_count(); ++s)
        if (s != serving)
            out.direct_w += direct_[idx_su(s, ue)];

    for (int l = 0; l < ris_count(); ++l)
    {
        if (!out_[idx_lu(l, ue)].visible)
            continue;
        const bool own = placement_.ris[l].sector == serving;
        for (int s = 0; s < sector_count(); ++s)
        {
            if (s == serving || !in_[idx_sl(s, l)].visible)
                continue;
            const double p = fixed_profile_power(s, l, ue);
            (own ? out.via_own_ris_w : out.via_neighbor_ris_w) += p;
        }
    }
    return out;
}

DropRecord DropState::evaluate(int ue) const
{
    DropRecord r;
    r.drop = drop_;
    r.ue = ue;
    r.serving_sector = serving_[ue];
    r.direct_w = direct_[idx_su(r.serving_sector, ue)];
    r.serving_ris = select_ris(ue);
    if (r.serving_ris >= 0)
        r.ris_w = steered_power(r.serving_sector, r.serving_ris, ue);
    r.signal_w = r.direct_w + r.ris_w;
    r.interference = interference_power(ue);
    r.noise_w = noise_w_;
    r.sinr_db = sinr_db(r.signal_w, r.interference.total(), r.noise_w);
    r.rx_power_dbm = watts_to_dbm(r.signal_w);
    return r;
}

std::vector<DropRecord> run_drop(const ScenarioConfig &config, int drop_index)
{
    const DropState state(config, drop_index);
    std::vector<DropRecord> records;
    records.reserve(state.ue_count());
    for (int u = 0; u < state.ue_count(); ++u)
        records.push_back(state.evaluate(u));
    return records;
}

// ---------- statistics ----------

CdfCurve CdfCurve::from_samples(std::vector<double> samples)
{
    CdfCurve c;
    std::sort(samples.begin(), samples.end());
    c.values = std::move(samples);
    const double n = static_cast<double>(c.values.size());
    c.probs.resize(c.values.size());
    for (std::size_t i = 0; i < c.probs.size(); ++i)
        c.probs[i] = static_cast<double>(i + 1) / n;
    return c;
}

double CdfCurve::quantile(double q) const
{
    if (values.empty())
        return std::numeric_limits<double>::quiet_NaN();
    q = std::clamp(q, 0.0, 1.0);
    const double pos = q * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = std::min(lo + 1, values.size() - 1);
    const double f = pos - static_cast<double>(lo);
    return values[lo] + f * (values[hi] - values[lo]);
}

PercentileSummary summarize(const CdfCurve &curve)
{
    return {curve.quantile(0.05), curve.quantile(0.50), curve.quantile(0.95)};
}

CampaignResult run_campaign(const ScenarioConfig &config, int n_drops, int workers)
{
    if (n_drops < 1)
        throw ConfigError("run_campaign: n_drops must be >= 1");
    config.resolved().validate();
    workers = std::clamp(workers, 1, n_drops);

    std::vector<std::vector<DropRecord>> per_drop(n_drops);
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        for (int d = next++; d < n_drops; d = next++)
        {
            try
            {
                per_drop[d] = run_drop(config, d);
            }
            catch (...)
            {
                std::lock_guard lock(failure_mutex);
                if (!failure)
                    failure = std::current_exception();
            }
        }
    };

    if (workers == 1)
        work();
    else
    {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(work);
    }
    if (failure)
        std::rethrow_exception(failure);

    CampaignResult out;
    std::vector<double> rx, sinr;
    for (auto &drop : per_drop)
        for (auto &r : drop)
        {
            rx.push_back(r.rx_power_dbm);
            sinr.push_back(r.sinr_db);
            out.records.push_back(r);
        }
    out.rx_power_dbm = CdfCurve::from_samples(std::move(rx));
    out.sinr_db = CdfCurve::from_samples(std::move(sinr));
    out.rx_power_summary = summarize(out.rx_power_dbm);
    out.sinr_summary = summarize(out.sinr_db);
    return out;
}

} // namespace rissim
