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

#ifndef BEAMSQUINT_IO_MEASUREMENTS_HPP
#define BEAMSQUINT_IO_MEASUREMENTS_HPP

#include "../pattern_core.hpp"
#include "format.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace beamsquint::io {

/// One measured sample: received power at (frequency, azimuth).
struct MeasurementRecord {
    double frequency_hz = 0.0;
    double azimuth_deg = 0.0;
    double power_dbi = 0.0;

    bool operator==(const MeasurementRecord&) const = default;
};

inline constexpr std::string_view measurement_header = "frequency_hz,azimuth_deg,power_dbi";
inline constexpr std::string_view measurement_schema_comment = "# beamsquint-measurement v1";

namespace impl {

inline double parse_number(std::string_view field, std::size_t line, std::size_t column) {
    while (!field.empty() && field.front() == ' ') {
        field.remove_prefix(1);
        ++column;
    }
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (!field.empty() && field.front() == '+') {
        field.remove_prefix(1);
        ++column;
    }
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size() || !std::isfinite(value))
        throw ParseError("invalid number '" + std::string(field) + "'", line, column);
    return value;
}

} // namespace impl

/// Parses the measurement CSV. Lines starting with '#' and blank lines are skipped;
/// the first remaining line must be the header.
inline std::vector<MeasurementRecord> parse_measurements(std::string_view text) {
    std::vector<MeasurementRecord> records;
    bool header_seen = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t eol = text.find('\n');
        std::string_view line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty() || line.front() == '#') continue;
        if (!header_seen) {
            if (line != measurement_header)
                throw ParseError("expected header '" + std::string(measurement_header) + "'", line_no, 1);
            header_seen = true;
            continue;
        }
        double values[3];
        std::size_t start = 0;
        for (int col = 0; col < 3; ++col) {
            const std::size_t comma = line.find(',', start);
            const bool last = col == 2;
            if (last != (comma == std::string_view::npos))
                throw ParseError(last ? "too many fields" : "expected 3 comma-separated fields", line_no,
                                 (comma == std::string_view::npos ? line.size() : comma) + 1);
            const std::string_view field = line.substr(start, last ? std::string_view::npos : comma - start);
            values[col] = impl::parse_number(field, line_no, start + 1);
            start = comma + 1;
        }
        records.push_back({values[0], values[1], values[2]});
    }
    if (!header_seen) throw ParseError("missing header", line_no + 1, 1);
    return records;
}

/*!
 * Groups measurements into one BeamPattern per frequency. Every frequency must
 * share one uniformly spaced azimuth set. The CF is the middle frequency
 * (lower middle for an even count) unless cf_hz selects another one.
 */
inline PatternSet patterns_from_measurements(std::vector<MeasurementRecord> records,
                                             std::optional<double> cf_hz = std::nullopt) {
    using beamsquint::detail::fail;
    if (records.empty()) fail(ErrorKind::validation, "measurements: no data rows");
    std::sort(records.begin(), records.end(), [](const MeasurementRecord& a, const MeasurementRecord& b) {
        return std::tie(a.frequency_hz, a.azimuth_deg) < std::tie(b.frequency_hz, b.azimuth_deg);
    });
    for (std::size_t i = 1; i < records.size(); ++i)
        if (records[i].frequency_hz == records[i - 1].frequency_hz && records[i].azimuth_deg == records[i - 1].azimuth_deg)
            fail(ErrorKind::validation, "measurements: duplicate (frequency, azimuth) pair at " +
                                            fixed(records[i].frequency_hz, 0) + " Hz, " +
                                            std::to_string(records[i].azimuth_deg) + " deg");

    struct Group {
        double frequency_hz;
        std::vector<double> azimuths;
        std::vector<double> gains;
    };
    std::vector<Group> groups;
    for (const MeasurementRecord& r : records) {
        if (groups.empty() || groups.back().frequency_hz != r.frequency_hz) groups.push_back({r.frequency_hz, {}, {}});
        groups.back().azimuths.push_back(r.azimuth_deg);
        groups.back().gains.push_back(r.power_dbi);
    }
    for (const Group& g : groups)
        if (!(g.frequency_hz > 0.0)) fail(ErrorKind::validation, "measurements: frequencies must be > 0");

    std::string ragged;
    for (const Group& g : groups)
        if (g.azimuths != groups.front().azimuths) ragged += (ragged.empty() ? "" : ", ") + fixed(g.frequency_hz, 0);
    if (!ragged.empty())
        fail(ErrorKind::alignment, "measurements: azimuth sets differ from " + fixed(groups.front().frequency_hz, 0) +
                                       " Hz at: " + ragged);

    const std::vector<double>& az = groups.front().azimuths;
    if (az.size() < 2) fail(ErrorKind::grid, "measurements: need at least two azimuth samples per frequency");
    const double step = (az.back() - az.front()) / static_cast<double>(az.size() - 1);
    for (std::size_t i = 0; i < az.size(); ++i) {
        const double expected = az.front() + step * static_cast<double>(i);
        if (std::abs(az[i] - expected) > 1e-6 * std::max(1.0, std::abs(step)) + 1e-9)
            fail(ErrorKind::grid, "measurements: non-uniform azimuth spacing near " + std::to_string(az[i]) + " deg");
    }
    const AzimuthGrid grid(az.front(), az.back(), step);

    std::size_t cf_index = (groups.size() - 1) / 2;
    if (cf_hz) {
        const auto it = std::find_if(groups.begin(), groups.end(),
                                     [&](const Group& g) { return std::abs(g.frequency_hz - *cf_hz) <= 0.5; });
        if (it == groups.end())
            fail(ErrorKind::validation, "measurements: --cf " + fixed(*cf_hz, 0) + " Hz matches no measured frequency");
        cf_index = static_cast<std::size_t>(it - groups.begin());
    }

    std::vector<BeamPattern> patterns;
    patterns.reserve(groups.size());
    for (Group& g : groups) patterns.emplace_back(g.frequency_hz, grid, std::move(g.gains));
    const FrequencyBand band(groups[cf_index].frequency_hz, groups.front().frequency_hz, groups.back().frequency_hz,
                             groups.size());
    return PatternSet(std::move(patterns), band);
}

inline PatternSet ingest_measurements(const std::filesystem::path& path, std::optional<double> cf_hz = std::nullopt) {
    return patterns_from_measurements(parse_measurements(read_file(path)), cf_hz);
}

/// Pattern set in the measurement schema, so simulated cuts can be re-ingested.
inline std::string measurements_csv(const PatternSet& set) {
    std::string out;
    out += measurement_schema_comment;
    out += '\n';
    out += measurement_header;
    out += '\n';
    for (const BeamPattern& p : set.patterns()) {
        const std::string f = fixed(p.frequency_hz(), precision::frequency);
        const auto g = p.gain_dbi();
        for (std::size_t i = 0; i < g.size(); ++i) {
            out += f;
            out += ',';
            out += fixed(p.grid().angle(i), precision::angle + 2);
            out += ',';
            out += fixed(g[i], precision::sample_gain);
            out += '\n';
        }
    }
    return out;
}

} // namespace beamsquint::io

#endif
