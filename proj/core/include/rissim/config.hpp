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

#ifndef RISSIM_CONFIG_HPP
#define RISSIM_CONFIG_HPP

#include "rissim/netsim.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace rissim
{

// Scenario files are JSON objects, nested by component:
//
//   { "scenario": "ue_random_ris_edge", "seed": 7, "drops": 20,
//     "layout":  { "isd_m": 500 },
//     "bs":      { "height_m": 25, "downtilt_deg": 0, "tx_power_dbm": 46, "port_elements": 1,
//                  "port_spacing_wavelengths": 0.5,
//                  "element": { "theta_3db": 65, "phi_3db": 65, "sla_v": 30, "a_max": 30, "g_e_max": 8 } },
//     "ris":     { "per_sector": 8, "rows": 16, "cols": 16, "dh_wavelengths": 0.5, "dv_wavelengths": 0.8,
//                  "height_m": 15, "downtilt_deg": 10, "quantization_bits": 0,
//                  "element_pattern": "sectorized", "forbid_grating_spacing": false },
//     "ue":      { "per_sector": 10, "height_m": 1.5, "min_distance_m": 35, "receive_elements": 1 },
//     "carrier": { "frequency_hz": 2.6e9, "bandwidth_hz": 1e8, "noise_figure_db": 9 },
//     "channel": { "shadow_sigma_db": 4, "direct_link": "los", "nlos_offset_db": 20, "interference": true } }
//
// Every key is optional. Unknown keys, wrong types and invalid values raise ConfigError with the
// key path in the message. An empty document yields the default configuration.
ScenarioConfig parse_config_text(std::string_view text);
ScenarioConfig parse_config(const std::filesystem::path &path);

// Fully resolved configuration as canonical JSON (sorted keys, two-space indent)
std::string config_to_text(const ScenarioConfig &config);

// FNV-1a 64 of the canonical compact JSON, as 16 hex digits
std::string config_digest(const ScenarioConfig &config);

} // namespace rissim

#endif
