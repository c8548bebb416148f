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

#include "rissim/antenna.hpp"
#include "rissim/errors.hpp"
#include "rissim/geometry.hpp"
#include "rissim/format.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace rissim
{

void ElementPatternParams::validate() const
{
    if (!(theta_3db > 0.0) || !(phi_3db > 0.0))
        throw ConfigError("element pattern: 3 dB beamwidths must be positive");
    if (!(sla_v >= 0.0) || !(a_max >= 0.0))
        throw ConfigError("element pattern: sla_v and a_max must be non-negative");
    if (!std::isfinite(g_e_max))
        throw ConfigError("element pattern: g_e_max must be finite");
}

ElementPatternParams bs_element_params()
{
    return {};
}

ElementPatternParams ris_element_params()
{
    ElementPatternParams p;
    p.g_e_max = 0.0;
    return p;
}

ElementPatternParams ue_element_params()
{
    ElementPatternParams p;
    p.g_e_max = 0.0;
    p.shape = PatternShape::Isotropic;
    return p;
}

double element_attenuation_db(double zenith_deg, double azimuth_deg, const ElementPatternParams &p)
{
    if (!(zenith_deg >= 0.0 && zenith_deg <= 180.0))
        throw DomainError("element pattern: zenith " + std::to_string(zenith_deg) + " deg outside [0, 180]");
    if (!(azimuth_deg >= -180.0 && azimuth_deg <= 180.0))
        throw DomainError("element pattern: azimuth " + std::to_string(azimuth_deg) + " deg outside [-180, 180]");

    if (p.shape == PatternShape::Isotropic)
        return 0.0;

    const double tv = (zenith_deg - 90.0) / p.theta_3db;
    const double th = azimuth_deg / p.phi_3db;
    const double a_v = -std::min(12.0 * tv * tv, p.sla_v);
    const double a_h = -std::min(12.0 * th * th, p.a_max);
    return -std::min(-(a_v + a_h), p.a_max);
}

double element_gain_dbi(double zenith_deg, double azimuth_deg, const ElementPatternParams &p)
{
    return p.g_e_max + element_attenuation_db(zenith_deg, azimuth_deg, p);
}

FieldPattern field_pattern(double zenith_deg, double azimuth_deg, const ElementPatternParams &p)
{
    const double g = element_gain_dbi(zenith_deg, azimuth_deg, p);
    return {std::pow(10.0, g / 20.0), 0.0};
}

void BSPortConfig::validate() const
{
    if (weights.empty())
        throw ConfigError("BS port: at least one element is required");
    if (weights.size() != element_positions.size())
        throw ConfigError("BS port: " + std::to_string(weights.size()) + " weights for " +
                          std::to_string(element_positions.size()) + " element positions");
    double pw = 0.0;
    for (const auto &w : weights)
        pw += std::norm(w);
    if (std::abs(pw - 1.0) > 1e-9)
        throw ConfigError("BS port: weight power " + std::to_string(pw) + " is not 1");
    element.validate();
}

BSPortConfig single_element_port(const ElementPatternParams &element)
{
    return {{Vec3{}}, {cdouble(1.0, 0.0)}, element};
}

BSPortConfig vertical_column_port(int count, double spacing_m, const ElementPatternParams &element)
{
    if (count < 1)
        throw ConfigError("BS port: element count must be >= 1");
    BSPortConfig port;
    port.element = element;
    const double w = 1.0 / std::sqrt(static_cast<double>(count));
    for (int s = 0; s < count; ++s)
    {
        port.element_positions.push_back({0.0, 0.0, (s - 0.5 * (count - 1)) * spacing_m});
        port.weights.emplace_back(w, 0.0);
    }
    return port;
}

FieldPattern bs_port_pattern(double zod_deg, double aod_deg, const BSPortConfig &port, double wavelength_m)
{
    if (port.weights.size() != port.element_positions.size() || port.weights.empty())
        throw ConfigError("bs_port_pattern: weight/position length mismatch");

    const FieldPattern elem = field_pattern(zod_deg, aod_deg, port.element);
    const Vec3 r = spherical_unit_vector(zod_deg, aod_deg);

    cdouble af = 0.0;
    for (std::size_t s = 0; s < port.weights.size(); ++s)
        af += port.weights[s] * std::polar(1.0, kTwoPi * dot(r, port.element_positions[s]) / wavelength_m);
    return {af * elem.f_theta, af * elem.f_phi};
}

void write_pattern_csv(std::ostream &os, const ElementPatternParams &p, double step_deg)
{
    if (!(step_deg > 0.0))
        throw ConfigError("pattern dump: grid step must be positive");
    os << "theta_deg,phi_deg,gain_db\n";
    const int nt = static_cast<int>(std::floor(180.0 / step_deg + 1e-9));
    const int np = static_cast<int>(std::floor(360.0 / step_deg + 1e-9));
    for (int i = 0; i <= nt; ++i)
    {
        const double th = i * step_deg;
        for (int j = 0; j <= np; ++j)
        {
            const double ph = -180.0 + j * step_deg;
            os << fmt_g9(th) << ',' << fmt_g9(ph) << ',' << fmt_g9(element_gain_dbi(th, ph, p)) << '\n';
        }
    }
}

} // namespace rissim
