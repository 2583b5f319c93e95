// SPDX-License-Identifier: Apache-2.0
//
// beamsquint - mmWave beam-squint simulation and KPI analysis toolkit
// Copyright (C) 2026 The beamsquint authors
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

#ifndef BEAMSQUINT_IO_SCENARIO_HPP
#define BEAMSQUINT_IO_SCENARIO_HPP

#include "../array_engine.hpp"
#include "../design_explorer.hpp"
#include "../lens_engine.hpp"
#include "../link_budget.hpp"
#include "../squint_metrics.hpp"
#include "format.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace beamsquint::io {

enum class FrontEnd { phase_shifter_array, ttd_array, lens };

/// Link section of a scenario: radio parameters plus the MCS ladder and channel split.
struct LinkSection {
    LinkConfig config;
    std::vector<McsScheme> mcs_table = default_mcs_ladder();
    std::size_t subbands = 8;

    bool operator==(const LinkSection&) const = default;
};

struct SweepSection {
    std::vector<double> permittivity_values{2.25};
    std::vector<double> f_over_d_values{0.7};
    std::vector<double> diameter_values{0.060};
    double scan_loss_limit_db = 3.0;
    double loss_tangent = 3e-4;
    std::size_t aperture_samples = 256;

    bool operator==(const SweepSection&) const = default;
};

struct Scenario {
    FrontEnd front_end = FrontEnd::lens;
    std::optional<ArrayDesign> array;
    std::optional<LensDesign> lens;
    FrequencyBand band = FrequencyBand::demo_band();
    AzimuthGrid grid = AzimuthGrid::analysis_default();
    std::optional<LinkSection> link;
    DpbqConvention dpbq_convention;
    std::optional<SweepSection> sweep;

    SweepSpec sweep_spec() const {
        detail::require(sweep.has_value(), ErrorKind::schema, "scenario: no 'sweep' section");
        SweepSpec spec;
        spec.permittivity_values = sweep->permittivity_values;
        spec.f_over_d_values = sweep->f_over_d_values;
        spec.diameter_values = sweep->diameter_values;
        spec.band = band;
        spec.scan_loss_limit_db = sweep->scan_loss_limit_db;
        spec.loss_tangent = sweep->loss_tangent;
        spec.aperture_samples = sweep->aperture_samples;
        return spec;
    }

    bool operator==(const Scenario&) const = default;
};

inline constexpr int scenario_schema_version = 1;

inline std::string_view to_string(FrontEnd f) {
    switch (f) {
        case FrontEnd::phase_shifter_array: return "phase_shifter_array";
        case FrontEnd::ttd_array: return "ttd_array";
        case FrontEnd::lens: return "lens";
    }
    return "lens";
}

/// Parses "normalized|unnormalized" and "db|decibel|linear".
inline DpbqConvention parse_convention(std::string_view sinc, std::string_view domain) {
    DpbqConvention c;
    if (sinc == "normalized")
        c.sinc_kind = SincKind::normalized;
    else if (sinc == "unnormalized")
        c.sinc_kind = SincKind::unnormalized;
    else
        detail::fail(ErrorKind::validation, "unknown sinc kind '" + std::string(sinc) + "'");
    if (domain == "db" || domain == "decibel")
        c.gain_domain = GainDomain::decibel;
    else if (domain == "linear")
        c.gain_domain = GainDomain::linear;
    else
        detail::fail(ErrorKind::validation, "unknown gain domain '" + std::string(domain) + "'");
    return c;
}

namespace impl {

using nlohmann::json;
using beamsquint::detail::fail;

// Reads typed fields out of one JSON object and rejects any key it was not asked about.
class Section {
public:
    Section(const json& node, std::string path) : node_(node), path_(std::move(path)) {
        if (!node_.is_object()) fail(ErrorKind::schema, path_ + ": expected an object");
    }

    bool has(const std::string& key) {
        seen_.insert(key);
        return node_.contains(key);
    }

    const json& raw(const std::string& key) {
        seen_.insert(key);
        return node_.at(key);
    }

    std::string field(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }

    double number(const std::string& key, double fallback) {
        if (!has(key)) return fallback;
        const json& v = node_.at(key);
        if (!v.is_number()) fail(ErrorKind::schema, field(key) + ": expected a number");
        return v.get<double>();
    }

    std::optional<double> optional_number(const std::string& key) {
        if (!has(key) || node_.at(key).is_null()) return std::nullopt;
        return number(key, 0.0);
    }

    std::size_t count(const std::string& key, std::size_t fallback) {
        if (!has(key)) return fallback;
        const json& v = node_.at(key);
        if (!v.is_number_integer() || v.get<long long>() < 0)
            fail(ErrorKind::schema, field(key) + ": expected a non-negative integer");
        return v.get<std::size_t>();
    }

    std::string text(const std::string& key, const std::string& fallback) {
        if (!has(key)) return fallback;
        const json& v = node_.at(key);
        if (!v.is_string()) fail(ErrorKind::schema, field(key) + ": expected a string");
        return v.get<std::string>();
    }

    std::vector<double> numbers(const std::string& key, std::vector<double> fallback) {
        if (!has(key)) return fallback;
        const json& v = node_.at(key);
        if (!v.is_array()) fail(ErrorKind::schema, field(key) + ": expected an array of numbers");
        std::vector<double> out;
        for (const json& e : v) {
            if (!e.is_number()) fail(ErrorKind::schema, field(key) + ": expected an array of numbers");
            out.push_back(e.get<double>());
        }
        return out;
    }

    void finish() const {
        for (auto it = node_.begin(); it != node_.end(); ++it)
            if (!seen_.contains(it.key())) fail(ErrorKind::schema, field(it.key()) + ": unknown key");
    }

private:
    const json& node_;
    std::string path_;
    std::set<std::string> seen_;
};

// Validation errors are re-raised with the offending scenario section prefixed.
template <typename F>
void validated(const std::string& section, F&& check) {
    try {
        check();
    } catch (const Error& e) {
        throw Error(e.kind(), section + ": " + e.what());
    }
}

inline CodeRate parse_code_rate(const std::string& text, const std::string& field) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) fail(ErrorKind::schema, field + ": expected 'numerator/denominator'");
        std::size_t used_n = 0;
        std::size_t used_d = 0;
        const long long num = std::stoll(text.substr(0, slash), &used_n);
        const long long den = std::stoll(text.substr(slash + 1), &used_d);
        if (used_n != slash || used_d != text.size() - slash - 1)
            fail(ErrorKind::schema, field + ": expected 'numerator/denominator'");
        return {num, den};
    } catch (const std::logic_error&) {
        fail(ErrorKind::schema, field + ": expected 'numerator/denominator'");
    }
}

inline Material parse_material(const json& node, const std::string& field) {
    if (node.is_string()) {
        const auto m = find_material(node.get<std::string>());
        if (!m) fail(ErrorKind::schema, field + ": unknown material '" + node.get<std::string>() + "'");
        return *m;
    }
    Section s(node, field);
    Material m;
    m.name = s.text("name", "custom");
    m.relative_permittivity = s.number("relative_permittivity", m.relative_permittivity);
    m.loss_tangent = s.number("loss_tangent", m.loss_tangent);
    s.finish();
    return m;
}

inline LensDesign parse_lens(const json& node) {
    Section s(node, "lens");
    LensDesign d;
    if (s.has("material")) d.material = parse_material(s.raw("material"), "lens.material");
    d.diameter_m = s.number("diameter_m", d.diameter_m);
    d.f_over_d = s.number("f_over_d", d.f_over_d);
    d.feed_offset_m = s.number("feed_offset_m", d.feed_offset_m);
    d.aperture_samples = s.count("aperture_samples", d.aperture_samples);
    d.feed_exponent = s.optional_number("feed_exponent");
    s.finish();
    validated("lens", [&] { d.validate(); });
    return d;
}

inline ArrayDesign parse_array(const json& node, Weighting weighting, const FrequencyBand& band) {
    Section s(node, "array");
    ArrayDesign d;
    d.weighting = weighting;
    d.element_count = s.count("element_count", d.element_count);
    d.spacing_m = s.number("spacing_m", ArrayDesign::half_wavelength(band.center_hz()));
    d.steer_deg = s.number("steer_deg", d.steer_deg);
    d.element_exponent = s.number("element_exponent", d.element_exponent);
    d.element_peak_gain_dbi = s.number("element_peak_gain_dbi", d.element_peak_gain_dbi);
    s.finish();
    validated("array", [&] { d.validate(); });
    return d;
}

inline LinkSection parse_link(const json& node) {
    Section s(node, "link");
    LinkSection link;
    LinkConfig& c = link.config;
    c.carrier_hz = s.number("carrier_hz", c.carrier_hz);
    c.bandwidth_hz = s.number("bandwidth_hz", c.bandwidth_hz);
    c.distance_m = s.number("distance_m", c.distance_m);
    c.tx_power_dbm = s.number("tx_power_dbm", c.tx_power_dbm);
    c.overhead_fraction = s.number("overhead_fraction", c.overhead_fraction);
    c.noise_figure_db = s.number("noise_figure_db", c.noise_figure_db);
    c.rx_gain_dbi = s.number("rx_gain_dbi", c.rx_gain_dbi);
    c.boresight_deg = s.optional_number("boresight_deg");
    link.subbands = s.count("subbands", link.subbands);
    if (s.has("mcs_table")) {
        const json& table = s.raw("mcs_table");
        if (!table.is_array()) fail(ErrorKind::schema, "link.mcs_table: expected an array");
        link.mcs_table.clear();
        for (std::size_t i = 0; i < table.size(); ++i) {
            const std::string path = "link.mcs_table[" + std::to_string(i) + "]";
            Section m(table[i], path);
            McsScheme mcs;
            mcs.name = m.text("name", "");
            mcs.modulation_order = static_cast<int>(m.count("modulation_order", 6));
            mcs.code_rate = parse_code_rate(m.text("code_rate", "5/6"), path + ".code_rate");
            mcs.min_snr_db = m.number("min_snr_db", mcs.min_snr_db);
            m.finish();
            validated(path, [&] { mcs.validate(); });
            link.mcs_table.push_back(mcs);
        }
    }
    s.finish();
    validated("link", [&] { c.validate(); });
    if (link.mcs_table.empty()) fail(ErrorKind::validation, "link.mcs_table: must not be empty");
    if (link.subbands < 1) fail(ErrorKind::validation, "link.subbands: must be >= 1");
    return link;
}

inline SweepSection parse_sweep(const json& node) {
    Section s(node, "sweep");
    SweepSection w;
    w.permittivity_values = s.numbers("permittivity_values", w.permittivity_values);
    w.f_over_d_values = s.numbers("f_over_d_values", w.f_over_d_values);
    w.diameter_values = s.numbers("diameter_values", w.diameter_values);
    w.scan_loss_limit_db = s.number("scan_loss_limit_db", w.scan_loss_limit_db);
    w.loss_tangent = s.number("loss_tangent", w.loss_tangent);
    w.aperture_samples = s.count("aperture_samples", w.aperture_samples);
    s.finish();
    return w;
}

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

} // namespace impl

/*!
 * Parses a scenario document. Omitted fields take their documented defaults;
 * unknown keys and a design block that does not match front_end are schema
 * errors.
 */
inline Scenario parse_scenario(std::string_view text) {
    using detail::fail;
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = impl::line_column(text, e.byte);
        std::string what = e.what();
        const auto pos = what.find("syntax error");
        throw ParseError(pos == std::string::npos ? what : what.substr(pos), line, column);
    }

    impl::Section root(doc, "");
    const auto version = root.count("schema_version", scenario_schema_version);
    if (version != static_cast<std::size_t>(scenario_schema_version))
        fail(ErrorKind::schema, "schema_version: unsupported version " + std::to_string(version));

    Scenario sc;
    const std::string front = root.text("front_end", "");
    if (front == "lens")
        sc.front_end = FrontEnd::lens;
    else if (front == "phase_shifter_array")
        sc.front_end = FrontEnd::phase_shifter_array;
    else if (front == "ttd_array")
        sc.front_end = FrontEnd::ttd_array;
    else
        fail(ErrorKind::schema, "front_end: expected one of lens, phase_shifter_array, ttd_array");

    if (root.has("band")) {
        impl::Section b(root.raw("band"), "band");
        const FrequencyBand def = FrequencyBand::demo_band();
        const double center = b.number("center_hz", def.center_hz());
        const double lower = b.number("lower_hz", def.lower_hz());
        const double upper = b.number("upper_hz", def.upper_hz());
        const std::size_t count = b.count("sample_count", def.sample_count());
        b.finish();
        impl::validated("band", [&] { sc.band = FrequencyBand(center, lower, upper, count); sc.band.sample_frequencies(); });
    }
    if (root.has("grid")) {
        impl::Section g(root.raw("grid"), "grid");
        const AzimuthGrid def = AzimuthGrid::analysis_default();
        const double start = g.number("start_deg", def.start_deg());
        const double stop = g.number("stop_deg", def.stop_deg());
        const double step = g.number("step_deg", def.step_deg());
        g.finish();
        impl::validated("grid", [&] { sc.grid = AzimuthGrid(start, stop, step); });
    }

    const bool is_lens = sc.front_end == FrontEnd::lens;
    const bool has_lens = root.has("lens");
    const bool has_array = root.has("array");
    if (is_lens && has_array) fail(ErrorKind::schema, "array: not allowed when front_end is lens");
    if (!is_lens && has_lens) fail(ErrorKind::schema, "lens: not allowed when front_end is an array");
    if (is_lens) {
        sc.lens = has_lens ? impl::parse_lens(root.raw("lens")) : LensDesign{};
    } else {
        const Weighting w = sc.front_end == FrontEnd::ttd_array ? Weighting::true_time_delay : Weighting::phase_shifter_at_cf;
        sc.array = impl::parse_array(has_array ? root.raw("array") : nlohmann::json::object(), w, sc.band);
    }

    if (root.has("link")) sc.link = impl::parse_link(root.raw("link"));
    if (root.has("dpbq_convention")) {
        impl::Section c(root.raw("dpbq_convention"), "dpbq_convention");
        const std::string sinc = c.text("sinc", "normalized");
        const std::string domain = c.text("gain_domain", "decibel");
        c.finish();
        impl::validated("dpbq_convention", [&] { sc.dpbq_convention = parse_convention(sinc, domain); });
    }
    if (root.has("sweep")) {
        if (!is_lens) fail(ErrorKind::schema, "sweep: only valid when front_end is lens");
        sc.sweep = impl::parse_sweep(root.raw("sweep"));
        impl::validated("sweep", [&] { sc.sweep_spec().validate(); });
    }
    root.finish();
    return sc;
}

inline Scenario load_scenario(const std::filesystem::path& path) {
    if (!std::filesystem::exists(path)) detail::fail(ErrorKind::io, "scenario file not found: " + path.string());
    return parse_scenario(read_file(path));
}

/// Full document with every default written out; parse_scenario(serialize_scenario(s)) == s.
inline std::string serialize_scenario(const Scenario& sc) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["schema_version"] = scenario_schema_version;
    doc["front_end"] = std::string(to_string(sc.front_end));
    doc["band"] = {{"center_hz", sc.band.center_hz()},
                   {"lower_hz", sc.band.lower_hz()},
                   {"upper_hz", sc.band.upper_hz()},
                   {"sample_count", sc.band.sample_count()}};
    doc["grid"] = {{"start_deg", sc.grid.start_deg()}, {"stop_deg", sc.grid.stop_deg()}, {"step_deg", sc.grid.step_deg()}};
    if (sc.lens) {
        const LensDesign& d = *sc.lens;
        ordered_json lens;
        lens["material"] = {{"name", d.material.name},
                            {"relative_permittivity", d.material.relative_permittivity},
                            {"loss_tangent", d.material.loss_tangent}};
        lens["diameter_m"] = d.diameter_m;
        lens["f_over_d"] = d.f_over_d;
        lens["feed_offset_m"] = d.feed_offset_m;
        lens["aperture_samples"] = d.aperture_samples;
        if (d.feed_exponent) lens["feed_exponent"] = *d.feed_exponent;
        doc["lens"] = lens;
    }
    if (sc.array) {
        const ArrayDesign& a = *sc.array;
        doc["array"] = {{"element_count", a.element_count},
                        {"spacing_m", a.spacing_m},
                        {"steer_deg", a.steer_deg},
                        {"element_exponent", a.element_exponent},
                        {"element_peak_gain_dbi", a.element_peak_gain_dbi}};
    }
    if (sc.link) {
        const LinkConfig& c = sc.link->config;
        ordered_json link;
        link["carrier_hz"] = c.carrier_hz;
        link["bandwidth_hz"] = c.bandwidth_hz;
        link["distance_m"] = c.distance_m;
        link["tx_power_dbm"] = c.tx_power_dbm;
        link["overhead_fraction"] = c.overhead_fraction;
        link["noise_figure_db"] = c.noise_figure_db;
        link["rx_gain_dbi"] = c.rx_gain_dbi;
        if (c.boresight_deg) link["boresight_deg"] = *c.boresight_deg;
        link["subbands"] = sc.link->subbands;
        ordered_json table = ordered_json::array();
        for (const McsScheme& m : sc.link->mcs_table)
            table.push_back({{"name", m.name},
                             {"modulation_order", m.modulation_order},
                             {"code_rate", std::to_string(m.code_rate.numerator) + "/" + std::to_string(m.code_rate.denominator)},
                             {"min_snr_db", m.min_snr_db}});
        link["mcs_table"] = table;
        doc["link"] = link;
    }
    doc["dpbq_convention"] = {
        {"sinc", sc.dpbq_convention.sinc_kind == SincKind::normalized ? "normalized" : "unnormalized"},
        {"gain_domain", sc.dpbq_convention.gain_domain == GainDomain::decibel ? "decibel" : "linear"}};
    if (sc.sweep) {
        const SweepSection& w = *sc.sweep;
        doc["sweep"] = {{"permittivity_values", w.permittivity_values},
                        {"f_over_d_values", w.f_over_d_values},
                        {"diameter_values", w.diameter_values},
                        {"scan_loss_limit_db", w.scan_loss_limit_db},
                        {"loss_tangent", w.loss_tangent},
                        {"aperture_samples", w.aperture_samples}};
    }
    return doc.dump(2) + "\n";
}

} // namespace beamsquint::io

#endif
