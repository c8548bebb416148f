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

#ifndef RISSIM_RIS_HPP
#define RISSIM_RIS_HPP

#include "rissim/antenna.hpp"
#include "rissim/geometry.hpp"

#include <iosfwd>
#include <vector>

namespace rissim
{

// Rectangular reflect-array panel. Panel axes: boresight +x, element rows along +z, columns along +y,
// so every element sits in the local x = 0 plane.
struct RISPanel
{
    int rows = 16;
    int cols = 16;
    double dh = 0.5; // column pitch, wavelengths
    double dv = 0.8; // row pitch, wavelengths
    NodeKinematics kinematics;

    int element_count() const { return rows * cols; }
    void validate() const; // throws ConfigError
};

// Per-element reflection phases in radians, row-major (k = row * cols + col)
struct PhaseProfile
{
    std::vector<double> phases;
    int quantization_bits = 0; // 0 = continuous
};

// Centered grid, row-major; the centroid is the local origin
std::vector<Vec3> element_positions(const RISPanel &panel, double wavelength_m);

// Phase accrued over BS -> element k -> UE: 2 pi (r_arrival + r_departure) . d_k / wavelength.
// Both directions in the panel frame, pointing away from the panel.
std::vector<double> propagation_phase(const RISPanel &panel, const Direction &arrival, const Direction &departure,
                                      double wavelength_m);

// Same, from the summed phase gradient 2 pi (r_arrival + r_departure) / wavelength in rad/m
std::vector<double> propagation_phase(const RISPanel &panel, const Vec3 &gradient, double wavelength_m);

// Negated propagation phase: aligns every term of the element sum
PhaseProfile optimal_phase(const std::vector<double> &propagation);

// Maps each phase, reduced mod 2 pi, to the centre of its 2 pi / 2^bits bin; centres above pi are
// reported in (-pi, 0). bits must be 1, 2 or 3.
double quantize_phase(double phase, int bits);
PhaseProfile quantize_phase(const PhaseProfile &profile, int bits);

// True if a panel-frame direction leaves through the reflecting face
inline bool front_hemisphere(const Vec3 &local_dir) { return local_dir.x > 0.0; }

// Coherent element sum  sum_k exp(j (g . d_k + phase_k))  for a panel-frame phase gradient g
// (radians per meter). Uses the separable row/column structure of the grid.
class ArrayPhasor
{
public:
    ArrayPhasor(const RISPanel &panel, double wavelength_m, const PhaseProfile &profile);

    cdouble sum(const Vec3 &gradient) const;
    int element_count() const { return rows_ * cols_; }

private:
    int rows_;
    int cols_;
    double pitch_y_; // meters
    double pitch_z_;
    std::vector<double> re_; // exp(j phase_k), row-major
    std::vector<double> im_;
};

enum class PatternCut
{
    Horizontal,      // local zenith 90, out azimuth -90..90
    FrontHemisphere, // zenith 0..180 x azimuth -90..90
};

struct ScatterSample
{
    double out_zenith_deg;
    double out_azimuth_deg;
    double gain;    // linear |sum F_in F_out exp(j...)|^2
    double gain_db; // relative to the pattern maximum
};

struct ScatterPattern
{
    std::vector<ScatterSample> samples;
    std::size_t peak = 0; // index of the maximum
    double peak_gain_db = 0.0; // raw maximum, 10 log10(gain)
};

// Bistatic pattern of a panel illuminated from `incident` (panel frame, front hemisphere).
// Throws DomainError for rear incidence.
ScatterPattern scattered_pattern(const RISPanel &panel, const Direction &incident, const PhaseProfile &profile,
                                 double step_deg, double wavelength_m,
                                 const ElementPatternParams &element = ris_element_params(),
                                 PatternCut cut = PatternCut::Horizontal);

// Columns out_zenith_deg, out_azimuth_deg, gain_db
void write_scatter_csv(std::ostream &os, const ScatterPattern &pattern);

} // namespace rissim

#endif
