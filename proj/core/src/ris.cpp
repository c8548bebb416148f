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

#include "rissim/ris.hpp"
#include "rissim/errors.hpp"
#include "rissim/format.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

namespace rissim
{

void RISPanel::validate() const
{
    if (rows < 1 || cols < 1)
        throw ConfigError("RIS panel: rows and cols must be >= 1");
    if (!(dh > 0.0) || !(dv > 0.0))
        throw ConfigError("RIS panel: element spacings must be positive");
}

std::vector<Vec3> element_positions(const RISPanel &panel, double wavelength_m)
{
    panel.validate();
    std::vector<Vec3> pos;
    pos.reserve(panel.element_count());
    const double py = panel.dh * wavelength_m;
    const double pz = panel.dv * wavelength_m;
    for (int r = 0; r < panel.rows; ++r)
        for (int c = 0; c < panel.cols; ++c)
            pos.push_back({0.0, (c - 0.5 * (panel.cols - 1)) * py, (r - 0.5 * (panel.rows - 1)) * pz});
    return pos;
}

std::vector<double> propagation_phase(const RISPanel &panel, const Direction &arrival, const Direction &departure,
                                      double wavelength_m)
{
    const Vec3 r = spherical_unit_vector(arrival.zenith_deg, arrival.azimuth_deg) +
                   spherical_unit_vector(departure.zenith_deg, departure.azimuth_deg);
    const auto pos = element_positions(panel, wavelength_m);
    std::vector<double> phase(pos.size());
    for (std::size_t k = 0; k < pos.size(); ++k)
        phase[k] = kTwoPi * dot(r, pos[k]) / wavelength_m;
    return phase;
}

std::vector<double> propagation_phase(const RISPanel &panel, const Vec3 &gradient, double wavelength_m)
{
    const auto pos = element_positions(panel, wavelength_m);
    std::vector<double> phase(pos.size());
    for (std::size_t k = 0; k < pos.size(); ++k)
        phase[k] = dot(gradient, pos[k]);
    return phase;
}

PhaseProfile optimal_phase(const std::vector<double> &propagation)
{
    PhaseProfile p;
    p.phases.resize(propagation.size());
    std::transform(propagation.begin(), propagation.end(), p.phases.begin(), [](double v) { return -v; });
    return p;
}

double quantize_phase(double phase, int bits)
{
    if (bits < 1 || bits > 3)
        throw ConfigError("quantize_phase: unsupported bit count " + std::to_string(bits));
    const int levels = 1 << bits;
    const double width = kTwoPi / levels;

    double m = std::fmod(phase, kTwoPi);
    if (m < 0.0)
        m += kTwoPi;
    int bin = static_cast<int>(std::floor(m / width));
    bin = std::clamp(bin, 0, levels - 1);

    const double centre = (bin + 0.5) * width;
    return centre > kPi ? centre - kTwoPi : centre;
}

PhaseProfile quantize_phase(const PhaseProfile &profile, int bits)
{
    PhaseProfile q;
    q.quantization_bits = bits;
    q.phases.resize(profile.phases.size());
    for (std::size_t k = 0; k < q.phases.size(); ++k)
        q.phases[k] = quantize_phase(profile.phases[k], bits);
    return q;
}

ArrayPhasor::ArrayPhasor(const RISPanel &panel, double wavelength_m, const PhaseProfile &profile)
    : rows_(panel.rows), cols_(panel.cols), pitch_y_(panel.dh * wavelength_m), pitch_z_(panel.dv * wavelength_m)
{
    panel.validate();
    const std::size_t k = static_cast<std::size_t>(rows_) * cols_;
    if (!profile.phases.empty() && profile.phases.size() != k)
        throw ConfigError("RIS phase profile has " + std::to_string(profile.phases.size()) + " entries for " +
                          std::to_string(k) + " elements");
    re_.assign(k, 1.0);
    im_.assign(k, 0.0);
    for (std::size_t i = 0; i < profile.phases.size(); ++i)
    {
        re_[i] = std::cos(profile.phases[i]);
        im_[i] = std::sin(profile.phases[i]);
    }
}

cdouble ArrayPhasor::sum(const Vec3 &g) const
{
    // exp(j g.d) = exp(j gy y_c) exp(j gz z_r)
    thread_local std::vector<double> cy, sy;
    cy.resize(cols_);
    sy.resize(cols_);
    const double y0 = -0.5 * (cols_ - 1) * pitch_y_;
    for (int c = 0; c < cols_; ++c)
    {
        const double a = g.y * (y0 + c * pitch_y_);
        cy[c] = std::cos(a);
        sy[c] = std::sin(a);
    }

    const double z0 = -0.5 * (rows_ - 1) * pitch_z_;
    double acc_re = 0.0, acc_im = 0.0;
    for (int r = 0; r < rows_; ++r)
    {
        const double *pr = re_.data() + static_cast<std::size_t>(r) * cols_;
        const double *pi = im_.data() + static_cast<std::size_t>(r) * cols_;
        double row_re = 0.0, row_im = 0.0;
        for (int c = 0; c < cols_; ++c)
        {
            row_re += pr[c] * cy[c] - pi[c] * sy[c];
            row_im += pr[c] * sy[c] + pi[c] * cy[c];
        }
        const double b = g.z * (z0 + r * pitch_z_);
        const double cb = std::cos(b), sb = std::sin(b);
        acc_re += row_re * cb - row_im * sb;
        acc_im += row_re * sb + row_im * cb;
    }
    return {acc_re, acc_im};
}

ScatterPattern scattered_pattern(const RISPanel &panel, const Direction &incident, const PhaseProfile &profile,
                                 double step_deg, double wavelength_m, const ElementPatternParams &element,
                                 PatternCut cut)
{
    if (!(step_deg > 0.0))
        throw ConfigError("scattered_pattern: grid step must be positive");
    const Vec3 r_in = spherical_unit_vector(incident.zenith_deg, incident.azimuth_deg);
    if (!front_hemisphere(r_in))
        throw DomainError("scattered_pattern: incidence from behind the panel");

    const ArrayPhasor array(panel, wavelength_m, profile);
    const double f_in = std::norm(field_pattern(incident.zenith_deg, incident.azimuth_deg, element).f_theta);

    std::vector<double> zeniths;
    if (cut == PatternCut::Horizontal)
        zeniths.push_back(90.0);
    else
        for (int i = 0; i * step_deg <= 180.0 + 1e-9; ++i)
            zeniths.push_back(std::min(i * step_deg, 180.0));

    const int n_az = static_cast<int>(std::floor(180.0 / step_deg + 1e-9));
    ScatterPattern out;
    out.samples.reserve(zeniths.size() * (n_az + 1));
    double best = -1.0;
    for (double zen : zeniths)
    {
        for (int j = 0; j <= n_az; ++j)
        {
            const double az = -90.0 + j * step_deg;
            const Vec3 r_out = spherical_unit_vector(zen, az);
            const double f_out = std::norm(field_pattern(zen, az, element).f_theta);
            const double g = f_in * f_out * std::norm(array.sum((kTwoPi / wavelength_m) * (r_in + r_out)));
            if (g > best)
            {
                best = g;
                out.peak = out.samples.size();
            }
            out.samples.push_back({zen, az, g, 0.0});
        }
    }

    out.peak_gain_db = 10.0 * std::log10(best);
    for (auto &s : out.samples)
        s.gain_db = 10.0 * std::log10(s.gain / best);
    return out;
}

void write_scatter_csv(std::ostream &os, const ScatterPattern &pattern)
{
    os << "out_zenith_deg,out_azimuth_deg,gain_db\n";
    for (const auto &s : pattern.samples)
        os << fmt_g9(s.out_zenith_deg) << ',' << fmt_g9(s.out_azimuth_deg) << ',' << fmt_g9(s.gain_db) << '\n';
}

} // namespace rissim
