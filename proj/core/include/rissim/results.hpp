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

#ifndef RISSIM_RESULTS_HPP
#define RISSIM_RESULTS_HPP

#include "rissim/netsim.hpp"
#include "rissim/ris.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rissim
{

const char *version();

enum class OutputFormat
{
    Csv,
    Json,
};

OutputFormat format_from_string(const std::string &name); // throws ConfigError

struct RunManifest
{
    std::string config_digest;
    std::uint64_t seed = 0;
    std::string tool_version = version();
    int drops = 0;
    int workers = 1;
    double wall_clock_seconds = 0.0;
    std::vector<std::string> outputs; // file names relative to the output directory
};

// Record table writers; floats carry nine significant digits
void write_records_csv(std::ostream &os, std::span<const DropRecord> records);
void write_records_json(std::ostream &os, std::span<const DropRecord> records);
void write_cdf_csv(std::ostream &os, const CdfCurve &curve);

// Writes records.{csv,json}, cdf_rxpower.csv, cdf_sinr.csv, config.json and manifest.json (plus
// pattern_<name>.csv for every entry of `patterns`) into out_dir. Files are staged and renamed;
// on failure nothing written by this call is left behind and IoError is thrown.
struct NamedPattern
{
    std::string name;
    ScatterPattern pattern;
};

std::vector<std::filesystem::path> emit_results(const CampaignResult &result, RunManifest &manifest,
                                                const ScenarioConfig &config, const std::filesystem::path &out_dir,
                                                std::span<const OutputFormat> formats,
                                                std::span<const NamedPattern> patterns = {});

// Reads a (value, cum_prob) file written by write_cdf_csv
CdfCurve read_cdf_csv(const std::filesystem::path &path);

struct PercentileDelta
{
    std::string metric; // "rx_power_dbm" or "sinr_db"
    double q = 0.0;     // 0.05, 0.50, 0.95
    double baseline = 0.0;
    double candidate = 0.0;
    double delta_db = 0.0; // candidate - baseline
};

// Per-percentile deltas of candidate over baseline for both CDFs
std::vector<PercentileDelta> compare_result_dirs(const std::filesystem::path &baseline,
                                                 const std::filesystem::path &candidate);

} // namespace rissim

#endif
