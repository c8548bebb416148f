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

#include "rissim/channel.hpp"
#include "rissim/errors.hpp"
#include "rissim/rng.hpp"

#include <algorithm>
#include <random>

namespace rissim
{

double CarrierConfig::noise_power_w() const
{
    return dbm_to_watts(-174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db);
}

void CarrierConfig::validate() const
{
    if (!(fc_hz > 0.0))
        throw ConfigError("carrier: frequency must be positive");
    if (!(tx_power_w >= 0.0))
        throw ConfigError("carrier: TX power must be non-negative");
    if (!(bandwidth_hz > 0.0))
        throw ConfigError("carrier: bandwidth must be positive");
}

double breakpoint_distance_m(double fc_hz, double h_bs_m, double h_ue_m)
{
    // Effective environment height 1 m
    return 4.0 * (h_bs_m - 1.0) * (h_ue_m - 1.0) * fc_hz / kSpeedOfLight;
}

double pathloss_uma_los_db(double d3d_m, double fc_hz, double h_bs_m, double h_ue_m)
{
    const double dh = h_bs_m - h_ue_m;
    const double d2d_sq = d3d_m * d3d_m - dh * dh;
    const double d2d = d2d_sq > 0.0 ? std::sqrt(d2d_sq) : 0.0;
    // 1 mm slack for distances reconstructed from clamped 3D values
    if (!(d2d >= 10.0 - 1e-3 && d2d <= 5000.0 + 1e-3))
        throw DomainError("UMa LOS pathloss: 2D distance " + std::to_string(d2d) + " m outside [10, 5000]");

    const double fc_ghz = fc_hz / 1e9;
    const double d_bp = breakpoint_distance_m(fc_hz, h_bs_m, h_ue_m);
    if (d2d <= d_bp)
        return 28.0 + 22.0 * std::log10(d3d_m) + 20.0 * std::log10(fc_ghz);
    return 28.0 + 40.0 * std::log10(d3d_m) + 20.0 * std::log10(fc_ghz) - 9.0 * std::log10(d_bp * d_bp + dh * dh);
}

double hop_pathloss_db(const Position3D &a, const Position3D &b, double fc_hz)
{
    const double h_hi = std::max(a.z, b.z);
    const double h_lo = std::min(a.z, b.z);
    const double d2d = std::clamp(norm_2d(b - a), 10.0, 5000.0);
    const double dh = h_hi - h_lo;
    return pathloss_uma_los_db(std::sqrt(d2d * d2d + dh * dh), fc_hz, h_hi, h_lo);
}

std::uint64_t make_link_id(LinkKind kind, std::uint64_t a, std::uint64_t b)
{
    return mix64(mix64(static_cast<std::uint64_t>(kind)) ^ mix64(a + 0x51ed2705ULL) ^ (mix64(b) << 1));
}

double shadow_fading_db(std::uint64_t link_id, double sigma_db, std::uint64_t seed)
{
    if (!(sigma_db > 0.0))
        return 0.0;
    std::mt19937_64 eng(mix64(seed ^ mix64(link_id)));
    std::normal_distribution<double> dist(0.0, sigma_db);
    return dist(eng);
}

namespace
{

// [F_rx_theta, F_rx_phi] diag(1, -1) [F_tx_theta, F_tx_phi]^T
cdouble polarization_product(const FieldPattern &rx, const FieldPattern &tx)
{
    return rx.f_theta * tx.f_theta - rx.f_phi * tx.f_phi;
}

Vec3 element_position(const RISPanel &ris, int k, double wavelength_m)
{
    if (k < 0 || k >= ris.element_count())
        throw ConfigError("RIS element index " + std::to_string(k) + " out of range");
    const int r = k / ris.cols;
    const int c = k % ris.cols;
    return {0.0, (c - 0.5 * (ris.cols - 1)) * ris.dh * wavelength_m, (r - 0.5 * (ris.rows - 1)) * ris.dv * wavelength_m};
}

} // namespace

HopResponse incident_hop(const BsNode &bs, const RISPanel &ris, double wavelength_m,
                         const ElementPatternParams &ris_element)
{
    const AngleSet a = link_angles(bs.pose, ris.kinematics);
    const Vec3 r_arr = spherical_unit_vector(a.zoa, a.aoa);
    HopResponse h;
    h.gradient = (kTwoPi / wavelength_m) * r_arr;
    h.visible = front_hemisphere(r_arr);
    if (h.visible)
        h.amplitude = polarization_product(field_pattern(a.zoa, a.aoa, ris_element),
                                           bs_port_pattern(a.zod, a.aod, bs.port, wavelength_m));
    return h;
}

HopResponse departing_hop(const RISPanel &ris, const UeNode &ue, double wavelength_m,
                          const ElementPatternParams &ris_element)
{
    const AngleSet a = link_angles(ris.kinematics, ue.pose);
    const Vec3 r_dep = spherical_unit_vector(a.zod, a.aod);
    HopResponse h;
    h.gradient = (kTwoPi / wavelength_m) * r_dep;
    h.visible = front_hemisphere(r_dep);
    if (h.visible)
        h.amplitude = polarization_product(field_pattern(a.zoa, a.aoa, ue.element),
                                           field_pattern(a.zod, a.aod, ris_element));
    return h;
}

CascadeCoefficient cascade_alpha1(const BsNode &bs, const RISPanel &ris, int element, double wavelength_m,
                                  const ElementPatternParams &ris_element)
{
    const Vec3 d = element_position(ris, element, wavelength_m);
    const HopResponse h = incident_hop(bs, ris, wavelength_m, ris_element);
    if (!h.visible)
        return {};
    return {h.amplitude * std::polar(1.0, dot(h.gradient, d)), true};
}

CascadeCoefficient cascade_alpha2(const RISPanel &ris, int element, const UeNode &ue, double wavelength_m,
                                  const ElementPatternParams &ris_element)
{
    const Vec3 d = element_position(ris, element, wavelength_m);
    const HopResponse h = departing_hop(ris, ue, wavelength_m, ris_element);
    if (!h.visible)
        return {};
    return {h.amplitude * std::polar(1.0, dot(h.gradient, d)), true};
}

double ris_path_power(const BsNode &bs, const RISPanel &ris, const UeNode &ue, const PhaseProfile &profile,
                      const LinkLargeScale &bs_ris, const LinkLargeScale &ris_ue, const CarrierConfig &carrier,
                      const ElementPatternParams &ris_element)
{
    if (!bs_ris.visible || !ris_ue.visible)
        return 0.0;
    const int k_count = ris.element_count();
    if (!profile.phases.empty() && static_cast<int>(profile.phases.size()) != k_count)
        throw ConfigError("ris_path_power: profile length does not match the panel");
    if (ue.receive_elements < 1)
        throw ConfigError("ris_path_power: UE needs at least one receive element");

    const double lambda = carrier.wavelength();
    double sum_u = 0.0;
    for (int u = 0; u < ue.receive_elements; ++u)
    {
        cdouble inner = 0.0;
        for (int k = 0; k < k_count; ++k)
        {
            const CascadeCoefficient a1 = cascade_alpha1(bs, ris, k, lambda, ris_element);
            const CascadeCoefficient a2 = cascade_alpha2(ris, k, ue, lambda, ris_element);
            if (!a1.visible || !a2.visible)
                return 0.0;
            const double phi = profile.phases.empty() ? 0.0 : profile.phases[k];
            inner += a2.value * std::polar(1.0, phi) * a1.value;
        }
        sum_u += std::norm(inner);
    }
    return bs_ris.attenuation() * ris_ue.attenuation() * sum_u * carrier.tx_power_w / ue.receive_elements;
}

double direct_path_power(const BsNode &bs, const UeNode &ue, const LinkLargeScale &bs_ue, const CarrierConfig &carrier)
{
    const double d2d = norm_2d(ue.pose.position - bs.pose.position);
    if (d2d < kMinUeDistance2d)
        throw DomainError("direct_path_power: BS-UE 2D distance " + std::to_string(d2d) + " m below 35 m");
    const AngleSet a = link_angles(bs.pose, ue.pose);
    const cdouble amp = polarization_product(field_pattern(a.zoa, a.aoa, ue.element),
                                             bs_port_pattern(a.zod, a.aod, bs.port, carrier.wavelength()));
    return carrier.tx_power_w * bs_ue.attenuation() * std::norm(amp);
}

double ris_path_power(const HopResponse &in, const HopResponse &out, const ArrayPhasor &array, double attenuation_in,
                      double attenuation_out, double tx_power_w)
{
    if (!in.visible || !out.visible)
        return 0.0;
    const double amp = std::norm(in.amplitude * out.amplitude);
    return attenuation_in * attenuation_out * amp * std::norm(array.sum(in.gradient + out.gradient)) * tx_power_w;
}

double aligned_ris_path_power(const HopResponse &in, const HopResponse &out, int element_count, double attenuation_in,
                              double attenuation_out, double tx_power_w)
{
    if (!in.visible || !out.visible)
        return 0.0;
    const double k = static_cast<double>(element_count);
    return attenuation_in * attenuation_out * std::norm(in.amplitude * out.amplitude) * k * k * tx_power_w;
}

} // namespace rissim
