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

// ris_sim: command line driver.
//
//   ris_sim run      --config scen.json --out results/ [--seed N] [--drops N] [--workers N] [--format csv|json]
//   ris_sim baseline --config scen.json --out results/   (same run with every RIS removed)
//   ris_sim pattern  --incidence 30 [--steer 45] [--bits 2] --out patterns/
//   ris_sim element  --which ris --step 1 --out ris_element.csv
//   ris_sim compare  baseline_dir candidate_dir
//
// Exit codes: 0 success, 2 configuration error, 3 runtime error.

#include "rissim/config.hpp"
#include "rissim/errors.hpp"
#include "rissim/format.hpp"
#include "rissim/netsim.hpp"
#include "rissim/results.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

namespace
{

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct RunOptions
{
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> drops;
    std::string out_dir = "results";
    std::vector<std::string> formats{"csv"};
    int workers = 1;
};

void add_run_options(CLI::App *cmd, RunOptions &o)
{
    cmd->add_option("--config", o.config_path, "Scenario JSON file (defaults apply when omitted)");
    cmd->add_option("--seed", o.seed, "Master seed; overrides the config and RIS_SIM_SEED");
    cmd->add_option("--drops", o.drops, "Number of Monte-Carlo drops");
    cmd->add_option("--out", o.out_dir, "Output directory");
    cmd->add_option("--format", o.formats, "Record format(s): csv, json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
}

rissim::ScenarioConfig load_config(const RunOptions &o)
{
    rissim::ScenarioConfig cfg = o.config_path.empty() ? rissim::parse_config_text("")
                                                       : rissim::parse_config(o.config_path);
    if (const char *env = std::getenv("RIS_SIM_SEED"); env && *env)
    {
        try
        {
            cfg.seed = std::stoull(env);
        }
        catch (const std::exception &)
        {
            throw rissim::ConfigError(std::string("RIS_SIM_SEED: not an unsigned integer: ") + env);
        }
    }
    if (o.seed)
        cfg.seed = *o.seed;
    if (o.drops)
        cfg.drops = *o.drops;
    cfg.validate();
    return cfg;
}

int run_campaign_cmd(const RunOptions &o, bool baseline)
{
    rissim::ScenarioConfig cfg = load_config(o);
    if (baseline)
        cfg.ris.per_sector = 0;

    std::vector<rissim::OutputFormat> formats;
    for (const auto &f : o.formats)
        formats.push_back(rissim::format_from_string(f));

    const auto t0 = std::chrono::steady_clock::now();
    const rissim::CampaignResult result = rissim::run_campaign(cfg, cfg.drops, o.workers);
    const auto t1 = std::chrono::steady_clock::now();

    rissim::RunManifest manifest;
    manifest.config_digest = rissim::config_digest(cfg);
    manifest.seed = cfg.seed;
    manifest.drops = cfg.drops;
    manifest.workers = o.workers;
    manifest.wall_clock_seconds = std::chrono::duration<double>(t1 - t0).count();
    rissim::emit_results(result, manifest, cfg, o.out_dir, formats);

    std::cout << "records        " << result.records.size() << "\n"
              << "rx power dBm   p5 " << rissim::fmt_g9(result.rx_power_summary.p5) << "  p50 "
              << rissim::fmt_g9(result.rx_power_summary.p50) << "  p95 " << rissim::fmt_g9(result.rx_power_summary.p95)
              << "\n"
              << "SINR dB        p5 " << rissim::fmt_g9(result.sinr_summary.p5) << "  p50 "
              << rissim::fmt_g9(result.sinr_summary.p50) << "  p95 " << rissim::fmt_g9(result.sinr_summary.p95) << "\n"
              << "wrote          " << o.out_dir << " (" << manifest.outputs.size() << " files, digest "
              << manifest.config_digest << ")\n";
    return 0;
}

struct PatternOptions
{
    std::string config_path;
    double incidence = 30.0;
    std::optional<double> steer;
    int bits = 0;
    double step = 0.5;
    std::string cut = "horizontal";
    std::string out_dir = "patterns";
};

int pattern_cmd(const PatternOptions &o)
{
    RunOptions ro;
    ro.config_path = o.config_path;
    const rissim::ScenarioConfig cfg = load_config(ro);

    rissim::RISPanel panel{cfg.ris.rows, cfg.ris.cols, cfg.ris.dh_wavelengths, cfg.ris.dv_wavelengths, {}};
    const double lambda = cfg.carrier.wavelength();
    const rissim::Direction in{90.0, o.incidence};

    rissim::PhaseProfile profile;
    std::string name = "in" + rissim::fmt_g9(o.incidence);
    if (o.steer)
    {
        // Steer toward the mirror side, azimuth -steer
        profile = rissim::optimal_phase(rissim::propagation_phase(panel, in, {90.0, -*o.steer}, lambda));
        name += "_out" + rissim::fmt_g9(*o.steer);
    }
    if (o.bits > 0)
    {
        if (profile.phases.empty())
            profile.phases.assign(panel.element_count(), 0.0);
        profile = rissim::quantize_phase(profile, o.bits);
        name += "_q" + std::to_string(o.bits);
    }

    const auto cut = o.cut == "hemisphere" ? rissim::PatternCut::FrontHemisphere : rissim::PatternCut::Horizontal;
    const rissim::ScatterPattern pat =
        rissim::scattered_pattern(panel, in, profile, o.step, lambda, cfg.ris_element(), cut);

    std::filesystem::create_directories(o.out_dir);
    const auto path = std::filesystem::path(o.out_dir) / ("pattern_" + name + ".csv");
    std::ofstream os(path);
    if (!os)
        throw rissim::IoError(path.string() + ": cannot open for writing");
    rissim::write_scatter_csv(os, pat);

    const auto &pk = pat.samples[pat.peak];
    std::cout << "peak at zenith " << rissim::fmt_g9(pk.out_zenith_deg) << " azimuth "
              << rissim::fmt_g9(pk.out_azimuth_deg) << " deg, " << rissim::fmt_g9(pat.peak_gain_db) << " dB\n"
              << "wrote " << path.string() << "\n";
    return 0;
}

int element_cmd(const std::string &which, double step, const std::string &out)
{
    rissim::ElementPatternParams p = which == "bs"    ? rissim::bs_element_params()
                                     : which == "ue" ? rissim::ue_element_params()
                                                     : rissim::ris_element_params();
    std::ofstream os(out);
    if (!os)
        throw rissim::IoError(out + ": cannot open for writing");
    rissim::write_pattern_csv(os, p, step);
    return 0;
}

int compare_cmd(const std::string &a, const std::string &b)
{
    const auto deltas = rissim::compare_result_dirs(a, b);
    std::cout << "metric,percentile,baseline,candidate,delta_db\n";
    for (const auto &d : deltas)
        std::cout << d.metric << ",p" << static_cast<int>(d.q * 100 + 0.5) << ',' << rissim::fmt_g9(d.baseline) << ','
                  << rissim::fmt_g9(d.candidate) << ',' << rissim::fmt_g9(d.delta_db) << '\n';
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"System-level simulator for RIS-assisted multi-cell networks"};
    app.set_version_flag("--version", rissim::version());
    app.require_subcommand(1);

    RunOptions run_opts;
    auto *run = app.add_subcommand("run", "Run a Monte-Carlo campaign");
    add_run_options(run, run_opts);

    RunOptions base_opts;
    auto *baseline = app.add_subcommand("baseline", "Run the campaign with all RIS panels removed");
    add_run_options(baseline, base_opts);

    PatternOptions pat_opts;
    auto *pattern = app.add_subcommand("pattern", "Scattered power pattern of a single panel");
    pattern->add_option("--config", pat_opts.config_path, "Scenario JSON (panel size, spacing, carrier)");
    pattern->add_option("--incidence", pat_opts.incidence, "Incidence azimuth off the panel normal, degrees");
    pattern->add_option("--steer", pat_opts.steer, "Reflection angle to steer toward, degrees");
    pattern->add_option("--bits", pat_opts.bits, "Phase quantization bits (0 = continuous)")->check(CLI::Range(0, 3));
    pattern->add_option("--step", pat_opts.step, "Grid step, degrees")->check(CLI::PositiveNumber);
    pattern->add_option("--cut", pat_opts.cut, "horizontal or hemisphere")
        ->check(CLI::IsMember({"horizontal", "hemisphere"}));
    pattern->add_option("--out", pat_opts.out_dir, "Output directory");

    std::string which = "ris", element_out = "element_pattern.csv";
    double element_step = 1.0;
    auto *element = app.add_subcommand("element", "Dump a single element power pattern");
    element->add_option("--which", which, "bs, ris or ue")->check(CLI::IsMember({"bs", "ris", "ue"}));
    element->add_option("--step", element_step, "Grid step, degrees")->check(CLI::PositiveNumber);
    element->add_option("--out", element_out, "CSV file");

    std::string cmp_a, cmp_b;
    auto *compare = app.add_subcommand("compare", "Percentile deltas between two result directories");
    compare->add_option("baseline", cmp_a, "Baseline result directory")->required();
    compare->add_option("candidate", cmp_b, "Candidate result directory")->required();

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitConfig;
    }

    try
    {
        if (*run)
            return run_campaign_cmd(run_opts, false);
        if (*baseline)
            return run_campaign_cmd(base_opts, true);
        if (*pattern)
            return pattern_cmd(pat_opts);
        if (*element)
            return element_cmd(which, element_step, element_out);
        if (*compare)
            return compare_cmd(cmp_a, cmp_b);
    }
    catch (const rissim::ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return 0;
}
