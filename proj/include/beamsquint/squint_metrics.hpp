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

#ifndef BEAMSQUINT_SQUINT_METRICS_HPP
#define BEAMSQUINT_SQUINT_METRICS_HPP

#include "pattern_core.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace beamsquint {

/// Beam-squint KPIs of one frequency row. Signs follow the reference measurements:
/// AD = azimuth(CF) - azimuth(f), PD = gain(CF) - gain(f).
struct KpiRow {
    double frequency_hz = 0.0;
    double peak_azimuth_deg = 0.0;
    double peak_gain_dbi = 0.0;
    double hpbw_deg = 0.0;
    double ad_deg = 0.0;
    double pd_db = 0.0;
    double dpbq_percent = 0.0;

    bool operator==(const KpiRow&) const = default;
};

enum class SincKind { normalized, unnormalized };
enum class GainDomain { decibel, linear };

/// How the DPBQ expression is evaluated. The default pair reproduces the reference KPI rows.
struct DpbqConvention {
    SincKind sinc_kind = SincKind::normalized;
    GainDomain gain_domain = GainDomain::decibel;

    bool operator==(const DpbqConvention&) const = default;
};

/// Weight on AD/HPBW inside the sinc.
inline constexpr double dpbq_sinc_scale = 0.6238;

struct PeakEstimate {
    double azimuth_deg = 0.0;
    double gain_dbi = 0.0;
    bool degenerate = false; ///< true when the maximum is a plateau of three or more equal samples
};

namespace detail {

struct PeakIndex {
    std::size_t first; // first sample of the maximal run
    std::size_t last;  // last sample of the maximal run
};

inline PeakIndex locate_max_run(const BeamPattern& pattern) {
    const auto g = pattern.gain_dbi();
    std::size_t k = 0;
    for (std::size_t i = 1; i < g.size(); ++i)
        if (g[i] > g[k]) k = i;
    std::size_t end = k;
    while (end + 1 < g.size() && g[end + 1] == g[k]) ++end;
    const bool constant = (k == 0 && end == g.size() - 1);
    require(!constant, ErrorKind::validation, "refine_peak: pattern is constant");
    return {k, end};
}

} // namespace detail

/*!
 * Peak of a sampled cut: grid argmax refined by the vertex of the parabola
 * through the three dB samples around it. Plateaus of three or more equal
 * maxima return their midpoint and set the degeneracy flag.
 */
inline PeakEstimate refine_peak(const BeamPattern& pattern) {
    const auto [first, last] = detail::locate_max_run(pattern);
    const auto g = pattern.gain_dbi();
    const AzimuthGrid& grid = pattern.grid();
    if (first == 0 || last == g.size() - 1)
        detail::fail(ErrorKind::boundary, "refine_peak: peak at grid boundary; widen the azimuth grid");
    if (last - first >= 2)
        return {0.5 * (grid.angle(first) + grid.angle(last)), g[first], true};

    const double y0 = g[first - 1];
    const double y1 = g[first];
    const double y2 = g[first + 1];
    const double denom = y0 - 2.0 * y1 + y2;
    const double delta = 0.5 * (y0 - y2) / denom;
    const double step = grid.angle(first + 1) - grid.angle(first);
    return {grid.angle(first) + delta * step, y1 - 0.25 * (y0 - y2) * delta, false};
}

/// Separation of the -3 dB crossings either side of the refined peak, each
/// located by linear interpolation between bracketing samples.
inline double half_power_beamwidth(const BeamPattern& pattern) {
    const PeakEstimate peak = refine_peak(pattern);
    const auto [first, last] = detail::locate_max_run(pattern);
    const auto g = pattern.gain_dbi();
    const AzimuthGrid& grid = pattern.grid();
    const double level = peak.gain_dbi - 3.0;

    std::size_t i = first;
    while (i > 0 && g[i - 1] > level) --i;
    if (i == 0) detail::fail(ErrorKind::beamwidth_undefined, "half_power_beamwidth: no -3 dB crossing below the peak");
    const double left = grid.angle(i - 1) + (level - g[i - 1]) / (g[i] - g[i - 1]) * (grid.angle(i) - grid.angle(i - 1));

    std::size_t j = last;
    while (j + 1 < g.size() && g[j + 1] > level) ++j;
    if (j + 1 == g.size())
        detail::fail(ErrorKind::beamwidth_undefined, "half_power_beamwidth: no -3 dB crossing above the peak");
    const double right = grid.angle(j) + (g[j] - level) / (g[j] - g[j + 1]) * (grid.angle(j + 1) - grid.angle(j));
    return right - left;
}

struct SquintDelta {
    double frequency_hz = 0.0;
    double ad_deg = 0.0;
    double pd_db = 0.0;
};

inline std::vector<SquintDelta> squint_deltas(const PatternSet& set) {
    const PeakEstimate cf = refine_peak(set.center_pattern());
    std::vector<SquintDelta> out;
    out.reserve(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
        const BeamPattern& p = set.patterns()[i];
        if (i == set.center_index()) {
            out.push_back({p.frequency_hz(), 0.0, 0.0});
            continue;
        }
        const PeakEstimate pk = refine_peak(p);
        out.push_back({p.frequency_hz(), cf.azimuth_deg - pk.azimuth_deg, cf.gain_dbi - pk.gain_dbi});
    }
    return out;
}

inline double sinc(double x, SincKind kind) noexcept {
    if (x == 0.0) return 1.0;
    const double arg = kind == SincKind::normalized ? std::numbers::pi * x : x;
    return std::sin(arg) / arg;
}

/*!
 * Degraded power over beam squint, in percent:
 *
 *   DPBQ = (Gain(CF) - PD) * |sinc(0.6238 * AD / HPBW)| / Gain(CF) * 100
 *
 * In the decibel domain the gains are used as dB numbers directly. In the
 * linear domain Gain(CF) and PD are converted to power ratios first.
 */
inline double dpbq(double gain_cf_dbi, double pd_db, double ad_deg, double hpbw_deg,
                   DpbqConvention convention = {}) {
    detail::require(std::isfinite(gain_cf_dbi) && std::isfinite(pd_db) && std::isfinite(ad_deg),
                    ErrorKind::validation, "dpbq: inputs must be finite");
    detail::require(hpbw_deg > 0.0 && std::isfinite(hpbw_deg), ErrorKind::validation, "dpbq: hpbw_deg must be > 0");
    const double factor = std::abs(sinc(dpbq_sinc_scale * ad_deg / hpbw_deg, convention.sinc_kind));
    if (convention.gain_domain == GainDomain::decibel) {
        if (gain_cf_dbi == 0.0)
            detail::fail(ErrorKind::singularity, "dpbq: Gain(CF) = 0 dBi makes the decibel-domain ratio singular");
        return (gain_cf_dbi - pd_db) * factor / gain_cf_dbi * 100.0;
    }
    const double gain_cf = std::pow(10.0, gain_cf_dbi / 10.0);
    const double pd = gain_cf - std::pow(10.0, (gain_cf_dbi - pd_db) / 10.0);
    return (gain_cf - pd) * factor / gain_cf * 100.0;
}

/// One KPI row per pattern. The CF row is the identity row (AD 0, PD 0, DPBQ 100).
inline std::vector<KpiRow> kpi_table(const PatternSet& set, DpbqConvention convention = {}) {
    const auto deltas = squint_deltas(set);
    const double gain_cf = refine_peak(set.center_pattern()).gain_dbi;
    std::vector<KpiRow> rows;
    rows.reserve(set.size());
    for (std::size_t i = 0; i < set.size(); ++i) {
        const BeamPattern& p = set.patterns()[i];
        const PeakEstimate pk = refine_peak(p);
        KpiRow row;
        row.frequency_hz = p.frequency_hz();
        row.peak_azimuth_deg = pk.azimuth_deg;
        row.peak_gain_dbi = pk.gain_dbi;
        row.hpbw_deg = half_power_beamwidth(p);
        if (i == set.center_index()) {
            row.ad_deg = 0.0;
            row.pd_db = 0.0;
            row.dpbq_percent = 100.0;
        } else {
            row.ad_deg = deltas[i].ad_deg;
            row.pd_db = deltas[i].pd_db;
            row.dpbq_percent = dpbq(gain_cf, row.pd_db, row.ad_deg, row.hpbw_deg, convention);
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace beamsquint

#endif
