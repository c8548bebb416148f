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

#ifndef RISSIM_ANTENNA_HPP
#define RISSIM_ANTENNA_HPP

#include "rissim/vec3.hpp"

#include <complex>
#include <iosfwd>
#include <vector>

namespace rissim
{

using cdouble = std::complex<double>;

enum class PatternShape
{
    Sectorized, // parabolic vertical and horizontal cuts with side-lobe clamps
    Isotropic,  // flat at g_e_max in every direction
};

// Single element power pattern. All angles and levels in degrees / dB.
struct ElementPatternParams
{
    double theta_3db = 65.0;
    double phi_3db = 65.0;
    double sla_v = 30.0;
    double a_max = 30.0;
    double g_e_max = 8.0; // dBi
    PatternShape shape = PatternShape::Sectorized;

    void validate() const; // throws ConfigError

    friend bool operator==(const ElementPatternParams &, const ElementPatternParams &) = default;
};

ElementPatternParams bs_element_params();  // 8 dBi sectorized
ElementPatternParams ris_element_params(); // 0 dBi sectorized
ElementPatternParams ue_element_params();  // 0 dBi isotropic

// Relative attenuation A(theta, phi) in [-a_max, 0] dB.
// Zenith in [0, 180], azimuth in [-180, 180]; anything else throws DomainError.
double element_attenuation_db(double zenith_deg, double azimuth_deg, const ElementPatternParams &p);

// Directional gain g_e_max + A(theta, phi) in dBi
double element_gain_dbi(double zenith_deg, double azimuth_deg, const ElementPatternParams &p);

// Complex far-field amplitudes in the two polarizations
struct FieldPattern
{
    cdouble f_theta;
    cdouble f_phi;

    double power() const { return std::norm(f_theta) + std::norm(f_phi); }
};

// Single (vertical) polarization: f_theta = sqrt of the linear gain, f_phi = 0
FieldPattern field_pattern(double zenith_deg, double azimuth_deg, const ElementPatternParams &p);

// Logical BS port formed from S physical elements.
struct BSPortConfig
{
    std::vector<Vec3> element_positions; // meters, BS local frame
    std::vector<cdouble> weights;        // sum |w|^2 = 1
    ElementPatternParams element = bs_element_params();

    std::size_t size() const { return weights.size(); }
    void validate() const; // length mismatch, empty port, or non-unit weight power -> ConfigError
};

BSPortConfig single_element_port(const ElementPatternParams &element = bs_element_params());

// S elements stacked along the local z axis, uniform weights 1/sqrt(S)
BSPortConfig vertical_column_port(int count, double spacing_m, const ElementPatternParams &element = bs_element_params());

// Weighted sum of element patterns with far-field steering phase 2 pi r(zod, aod) . d_s / wavelength
FieldPattern bs_port_pattern(double zod_deg, double aod_deg, const BSPortConfig &port, double wavelength_m);

// Dumps (theta_deg, phi_deg, gain_dbi) rows for theta in [0, 180], phi in [-180, 180]
void write_pattern_csv(std::ostream &os, const ElementPatternParams &p, double step_deg);

} // namespace rissim

#endif
