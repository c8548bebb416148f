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

#include "rissim/config.hpp"
#include "rissim/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace rissim
{

using nlohmann::json;

namespace
{

// Walks one JSON object; every key must be consumed exactly once
class Section
{
public:
    Section(const json &node, std::string path) : node_(node), path_(std::move(path))
    {
        if (!node_.is_object())
            throw ConfigError(where() + ": expected an object");
    }

    ~Section() noexcept(false)
    {
        if (std::uncaught_exceptions() > 0)
            return;
        for (const auto &[key, _] : node_.items())
            if (!seen_.count(key))
                throw ConfigError(key_path(key) + ": unknown key");
    }

    Section(const Section &) = delete;
    Section &operator=(const Section &) = delete;

    void number(const char *key, double &out)
    {
        if (const json *v = take(key))
        {
            if (!v->is_number())
                throw ConfigError(key_path(key) + ": expected a number");
            out = v->get<double>();
        }
    }

    void integer(const char *key, int &out)
    {
        if (const json *v = take(key))
        {
            if (!v->is_number_integer())
                throw ConfigError(key_path(key) + ": expected an integer");
            out = v->get<int>();
        }
    }

    void unsigned64(const char *key, std::uint64_t &out)
    {
        if (const json *v = take(key))
        {
            if (!v->is_number_unsigned() && !(v->is_number_integer() && v->get<std::int64_t>() >= 0))
                throw ConfigError(key_path(key) + ": expected a non-negative integer");
            out = v->get<std::uint64_t>();
        }
    }

    void boolean(const char *key, bool &out)
    {
        if (const json *v = take(key))
        {
            if (!v->is_boolean())
                throw ConfigError(key_path(key) + ": expected true or false");
            out = v->get<bool>();
        }
    }

    template <class Fn>
    void text(const char *key, Fn &&assign)
    {
        if (const json *v = take(key))
        {
            if (!v->is_string())
                throw ConfigError(key_path(key) + ": expected a string");
            try
            {
                assign(v->get<std::string>());
            }
            catch (const ConfigError &e)
            {
                throw ConfigError(key_path(key) + ": " + e.what());
            }
        }
    }

    template <class Fn>
    void child(const char *key, Fn &&read)
    {
        if (const json *v = take(key))
        {
            Section s(*v, key_path(key));
            read(s);
        }
    }

private:
    const json *take(const char *key)
    {
        seen_.insert(key);
        auto it = node_.find(key);
        return it == node_.end() ? nullptr : &*it;
    }
    std::string where() const { return path_.empty() ? "<root>" : path_; }
    std::string key_path(const std::string &key) const { return path_.empty() ? key : path_ + "." + key; }

    const json &node_;
    std::string path_;
    std::set<std::string> seen_;
};

void read_element(Section &s, ElementPatternParams &e)
{
    s.number("theta_3db", e.theta_3db);
    s.number("phi_3db", e.phi_3db);
    s.number("sla_v", e.sla_v);
    s.number("a_max", e.a_max);
    s.number("g_e_max", e.g_e_max);
}

PatternShape shape_from_string(const std::string &s)
{
    if (s == "sectorized")
        return PatternShape::Sectorized;
    if (s == "isotropic")
        return PatternShape::Isotropic;
    throw ConfigError("unknown element pattern '" + s + "' (sectorized|isotropic)");
}

const char *to_cstr(PatternShape s) { return s == PatternShape::Isotropic ? "isotropic" : "sectorized"; }

DirectLinkMode direct_link_from_string(const std::string &s)
{
    if (s == "los")
        return DirectLinkMode::Los;
    if (s == "nlos_offset")
        return DirectLinkMode::NlosOffset;
    throw ConfigError("unknown direct link mode '" + s + "' (los|nlos_offset)");
}

const char *to_cstr(DirectLinkMode m) { return m == DirectLinkMode::NlosOffset ? "nlos_offset" : "los"; }

json element_json(const ElementPatternParams &e)
{
    return {{"theta_3db", e.theta_3db}, {"phi_3db", e.phi_3db}, {"sla_v", e.sla_v}, {"a_max", e.a_max},
            {"g_e_max", e.g_e_max}};
}

json config_json(const ScenarioConfig &c)
{
    json j;
    j["scenario"] = std::string(to_string(c.scenario));
    j["seed"] = c.seed;
    j["drops"] = c.drops;
    j["layout"] = {{"isd_m", c.layout.isd_m}};
    j["bs"] = {{"height_m", c.bs.height_m},
               {"downtilt_deg", c.bs.downtilt_deg},
               {"tx_power_dbm", c.bs.tx_power_dbm},
               {"port_elements", c.bs.port_elements},
               {"port_spacing_wavelengths", c.bs.port_spacing_wavelengths},
               {"element", element_json(c.bs.element)}};
    j["ris"] = {{"per_sector", c.ris.per_sector},
                {"rows", c.ris.rows},
                {"cols", c.ris.cols},
                {"dh_wavelengths", c.ris.dh_wavelengths},
                {"dv_wavelengths", c.ris.dv_wavelengths},
                {"height_m", c.ris.height_m},
                {"downtilt_deg", c.ris.downtilt_deg},
                {"quantization_bits", c.ris.quantization_bits},
                {"element_pattern", to_cstr(c.ris.element_shape)},
                {"forbid_grating_spacing", c.ris.forbid_grating_spacing}};
    j["ue"] = {{"per_sector", c.ue.per_sector},
               {"height_m", c.ue.height_m},
               {"min_distance_m", c.ue.min_distance_m},
               {"receive_elements", c.ue.receive_elements}};
    j["carrier"] = {{"frequency_hz", c.carrier.fc_hz},
                    {"bandwidth_hz", c.carrier.bandwidth_hz},
                    {"noise_figure_db", c.carrier.noise_figure_db}};
    j["channel"] = {{"shadow_sigma_db", c.channel.shadow_sigma_db},
                    {"direct_link", to_cstr(c.channel.direct_link)},
                    {"nlos_offset_db", c.channel.nlos_offset_db},
                    {"interference", c.channel.interference}};
    return j;
}

} // namespace

ScenarioConfig parse_config_text(std::string_view text)
{
    ScenarioConfig c;
    if (text.find_first_not_of(" \t\r\n") == std::string_view::npos)
        return c.resolved();

    json root;
    try
    {
        root = json::parse(text.begin(), text.end());
    }
    catch (const json::parse_error &e)
    {
        throw ConfigError(std::string("<root>: parse error: ") + e.what());
    }

    {
        Section s(root, "");
        s.text("scenario", [&](const std::string &v) { c.scenario = scenario_from_string(v); });
        s.unsigned64("seed", c.seed);
        s.integer("drops", c.drops);
        s.child("layout", [&](Section &l) { l.number("isd_m", c.layout.isd_m); });
        s.child("bs", [&](Section &b) {
            b.number("height_m", c.bs.height_m);
            b.number("downtilt_deg", c.bs.downtilt_deg);
            b.number("tx_power_dbm", c.bs.tx_power_dbm);
            b.integer("port_elements", c.bs.port_elements);
            b.number("port_spacing_wavelengths", c.bs.port_spacing_wavelengths);
            b.child("element", [&](Section &e) { read_element(e, c.bs.element); });
        });
        s.child("ris", [&](Section &r) {
            r.integer("per_sector", c.ris.per_sector);
            r.integer("rows", c.ris.rows);
            r.integer("cols", c.ris.cols);
            r.number("dh_wavelengths", c.ris.dh_wavelengths);
            r.number("dv_wavelengths", c.ris.dv_wavelengths);
            r.number("height_m", c.ris.height_m);
            r.number("downtilt_deg", c.ris.downtilt_deg);
            r.integer("quantization_bits", c.ris.quantization_bits);
            r.text("element_pattern", [&](const std::string &v) { c.ris.element_shape = shape_from_string(v); });
            r.boolean("forbid_grating_spacing", c.ris.forbid_grating_spacing);
        });
        s.child("ue", [&](Section &u) {
            u.integer("per_sector", c.ue.per_sector);
            u.number("height_m", c.ue.height_m);
            u.number("min_distance_m", c.ue.min_distance_m);
            u.integer("receive_elements", c.ue.receive_elements);
        });
        s.child("carrier", [&](Section &f) {
            f.number("frequency_hz", c.carrier.fc_hz);
            f.number("bandwidth_hz", c.carrier.bandwidth_hz);
            f.number("noise_figure_db", c.carrier.noise_figure_db);
        });
        s.child("channel", [&](Section &h) {
            h.number("shadow_sigma_db", c.channel.shadow_sigma_db);
            h.text("direct_link", [&](const std::string &v) { c.channel.direct_link = direct_link_from_string(v); });
            h.number("nlos_offset_db", c.channel.nlos_offset_db);
            h.boolean("interference", c.channel.interference);
        });
    }

    c = c.resolved();
    c.validate();
    return c;
}

ScenarioConfig parse_config(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError(path.string() + ": cannot open config file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

std::string config_to_text(const ScenarioConfig &config)
{
    return config_json(config).dump(2) + "\n";
}

std::string config_digest(const ScenarioConfig &config)
{
    const std::string canonical = config_json(config).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canonical)
    {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace rissim
