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

#include "rissim/results.hpp"
#include "rissim/config.hpp"
#include "rissim/errors.hpp"
#include "rissim/format.hpp"

#include <json.hpp>

#include <fstream>
#include <functional>
#include <sstream>

namespace rissim
{

namespace fs = std::filesystem;
using nlohmann::json;

const char *version()
{
#ifdef RISSIM_VERSION
    return RISSIM_VERSION;
#else
    return "unknown";
#endif
}

OutputFormat format_from_string(const std::string &name)
{
    if (name == "csv")
        return OutputFormat::Csv;
    if (name == "json")
        return OutputFormat::Json;
    throw ConfigError("unknown output format '" + name + "' (csv|json)");
}

namespace
{

const char *kRecordColumns[] = {"drop",           "ue",          "serving_sector",         "serving_ris",
                                "signal_w",       "direct_w",    "ris_w",                  "interference_direct_w",
                                "interference_neighbor_ris_w",   "interference_own_ris_w", "noise_w",
                                "sinr_db",        "rx_power_dbm"};

std::vector<std::string> record_fields(const DropRecord &r)
{
    return {std::to_string(r.drop),
            std::to_string(r.ue),
            std::to_string(r.serving_sector),
            std::to_string(r.serving_ris),
            fmt_g9(r.signal_w),
            fmt_g9(r.direct_w),
            fmt_g9(r.ris_w),
            fmt_g9(r.interference.direct_w),
            fmt_g9(r.interference.via_neighbor_ris_w),
            fmt_g9(r.interference.via_own_ris_w),
            fmt_g9(r.noise_w),
            fmt_g9(r.sinr_db),
            fmt_g9(r.rx_power_dbm)};
}

// Doubles rounded through the 9-digit text form so JSON and CSV carry the same values
double g9(double v)
{
    return std::stod(fmt_g9(v));
}

} // namespace

void write_records_csv(std::ostream &os, std::span<const DropRecord> records)
{
    bool first = true;
    for (const char *c : kRecordColumns)
    {
        os << (first ? "" : ",") << c;
        first = false;
    }
    os << '\n';
    for (const auto &r : records)
    {
        const auto f = record_fields(r);
        for (std::size_t i = 0; i < f.size(); ++i)
            os << (i ? "," : "") << f[i];
        os << '\n';
    }
}

void write_records_json(std::ostream &os, std::span<const DropRecord> records)
{
    json arr = json::array();
    for (const auto &r : records)
    {
        json o = json::object();
        o["drop"] = r.drop;
        o["ue"] = r.ue;
        o["serving_sector"] = r.serving_sector;
        o["serving_ris"] = r.serving_ris;
        o["signal_w"] = g9(r.signal_w);
        o["direct_w"] = g9(r.direct_w);
        o["ris_w"] = g9(r.ris_w);
        o["interference_direct_w"] = g9(r.interference.direct_w);
        o["interference_neighbor_ris_w"] = g9(r.interference.via_neighbor_ris_w);
        o["interference_own_ris_w"] = g9(r.interference.via_own_ris_w);
        o["noise_w"] = g9(r.noise_w);
        o["sinr_db"] = g9(r.sinr_db);
        o["rx_power_dbm"] = g9(r.rx_power_dbm);
        arr.push_back(std::move(o));
    }
    os << arr.dump(1) << '\n';
}

void write_cdf_csv(std::ostream &os, const CdfCurve &curve)
{
    os << "value,cum_prob\n";
    for (std::size_t i = 0; i < curve.values.size(); ++i)
        os << fmt_g9(curve.values[i]) << ',' << fmt_g9(curve.probs[i]) << '\n';
}

namespace
{

json summary_json(const PercentileSummary &s)
{
    return {{"p5", g9(s.p5)}, {"p50", g9(s.p50)}, {"p95", g9(s.p95)}};
}

// Stages files as <name>.tmp and renames them into place; rolls everything back on failure
class StagedWriter
{
public:
    explicit StagedWriter(fs::path dir) : dir_(std::move(dir)) {}

    ~StagedWriter()
    {
        if (committed_)
            return;
        std::error_code ec;
        for (const auto &p : written_)
            fs::remove(p, ec);
        for (const auto &p : staged_)
            fs::remove(p, ec);
    }

    void add(const std::string &name, const std::function<void(std::ostream &)> &body)
    {
        const fs::path final_path = dir_ / name;
        const fs::path tmp = dir_ / (name + ".tmp");
        staged_.push_back(tmp);
        {
            std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
            if (!os)
                throw IoError(tmp.string() + ": cannot open for writing");
            body(os);
            os.flush();
            if (!os)
                throw IoError(tmp.string() + ": write failed");
        }
        std::error_code ec;
        fs::rename(tmp, final_path, ec);
        if (ec)
            throw IoError(final_path.string() + ": " + ec.message());
        staged_.pop_back();
        written_.push_back(final_path);
    }

    void commit() { committed_ = true; }
    const std::vector<fs::path> &written() const { return written_; }

private:
    fs::path dir_;
    std::vector<fs::path> staged_;
    std::vector<fs::path> written_;
    bool committed_ = false;
};

} // namespace

std::vector<fs::path> emit_results(const CampaignResult &result, RunManifest &manifest, const ScenarioConfig &config,
                                   const fs::path &out_dir, std::span<const OutputFormat> formats,
                                   std::span<const NamedPattern> patterns)
{
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec || !fs::is_directory(out_dir))
        throw IoError(out_dir.string() + ": cannot create output directory");

    bool want_csv = formats.empty(), want_json = false;
    for (auto f : formats)
        (f == OutputFormat::Csv ? want_csv : want_json) = true;

    StagedWriter w(out_dir);
    manifest.outputs.clear();
    auto add = [&](const std::string &name, const std::function<void(std::ostream &)> &body) {
        w.add(name, body);
        manifest.outputs.push_back(name);
    };

    if (want_csv)
        add("records.csv", [&](std::ostream &os) { write_records_csv(os, result.records); });
    if (want_json)
        add("records.json", [&](std::ostream &os) { write_records_json(os, result.records); });
    add("cdf_rxpower.csv", [&](std::ostream &os) { write_cdf_csv(os, result.rx_power_dbm); });
    add("cdf_sinr.csv", [&](std::ostream &os) { write_cdf_csv(os, result.sinr_db); });
    for (const auto &p : patterns)
        add("pattern_" + p.name + ".csv", [&](std::ostream &os) { write_scatter_csv(os, p.pattern); });
    add("config.json", [&](std::ostream &os) { os << config_to_text(config); });

    manifest.outputs.push_back("manifest.json");
    w.add("manifest.json", [&](std::ostream &os) {
        json m;
        m["config_digest"] = manifest.config_digest;
        m["seed"] = manifest.seed;
        m["tool_version"] = manifest.tool_version;
        m["drops"] = manifest.drops;
        m["workers"] = manifest.workers;
        m["wall_clock_seconds"] = g9(manifest.wall_clock_seconds);
        m["outputs"] = manifest.outputs;
        m["records"] = result.records.size();
        m["summary"] = {{"rx_power_dbm", summary_json(result.rx_power_summary)},
                        {"sinr_db", summary_json(result.sinr_summary)}};
        os << m.dump(2) << '\n';
    });

    w.commit();
    return w.written();
}

CdfCurve read_cdf_csv(const fs::path &path)
{
    std::ifstream in(path);
    if (!in)
        throw IoError(path.string() + ": cannot open");
    std::string line;
    if (!std::getline(in, line) || line.rfind("value,cum_prob", 0) != 0)
        throw IoError(path.string() + ": missing 'value,cum_prob' header");
    CdfCurve c;
    int line_no = 1;
    while (std::getline(in, line))
    {
        ++line_no;
        if (line.empty())
            continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos)
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": expected two columns");
        try
        {
            c.values.push_back(std::stod(line.substr(0, comma)));
            c.probs.push_back(std::stod(line.substr(comma + 1)));
        }
        catch (const std::exception &)
        {
            throw IoError(path.string() + ":" + std::to_string(line_no) + ": malformed number");
        }
    }
    return c;
}

std::vector<PercentileDelta> compare_result_dirs(const fs::path &baseline, const fs::path &candidate)
{
    std::vector<PercentileDelta> out;
    for (const auto &[metric, file] : {std::pair{"rx_power_dbm", "cdf_rxpower.csv"}, std::pair{"sinr_db", "cdf_sinr.csv"}})
    {
        const CdfCurve a = read_cdf_csv(baseline / file);
        const CdfCurve b = read_cdf_csv(candidate / file);
        for (double q : {0.05, 0.50, 0.95})
        {
            PercentileDelta d{metric, q, a.quantile(q), b.quantile(q), 0.0};
            d.delta_db = d.candidate - d.baseline;
            out.push_back(d);
        }
    }
    return out;
}

} // namespace rissim
