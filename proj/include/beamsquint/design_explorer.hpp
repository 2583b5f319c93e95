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

#ifndef BEAMSQUINT_DESIGN_EXPLORER_HPP
#define BEAMSQUINT_DESIGN_EXPLORER_HPP

#include "lens_engine.hpp"
#include "squint_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

namespace beamsquint {

struct SweepSpec {
    std::vector<double> permittivity_values{2.25};
    std::vector<double> f_over_d_values{0.7};
    std::vector<double> diameter_values{0.060};
    FrequencyBand band = FrequencyBand::demo_band();
    double scan_loss_limit_db = 3.0;
    double loss_tangent = 3e-4;          ///< used for permittivities missing from the material catalog
    std::size_t aperture_samples = 256;

    void validate() const {
        using detail::require;
        require(!permittivity_values.empty() && !f_over_d_values.empty() && !diameter_values.empty(),
                ErrorKind::validation, "SweepSpec: value lists must be non-empty");
        for (double v : permittivity_values)
            require(v > 1.0 && std::isfinite(v), ErrorKind::validation, "SweepSpec: permittivity values must be > 1");
        for (double v : f_over_d_values)
            require(v > 0.0 && std::isfinite(v), ErrorKind::validation, "SweepSpec: f/D values must be > 0");
        for (double v : diameter_values)
            require(v > 0.0 && std::isfinite(v), ErrorKind::validation, "SweepSpec: diameters must be > 0");
        require(scan_loss_limit_db > 0.0, ErrorKind::validation, "SweepSpec: scan_loss_limit_db must be > 0");
        require(loss_tangent >= 0.0, ErrorKind::validation, "SweepSpec: loss_tangent must be >= 0");
    }

    bool operator==(const SweepSpec&) const = default;
};

struct DesignReport {
    LensDesign design;
    double peak_gain_dbi = 0.0;
    double total_loss_db = 0.0;
    double max_scan_deg = 0.0;
    double band_edge_dpbq_percent = 0.0;

    bool operator==(const DesignReport&) const = default;
};

/// Grid used for design evaluation; wide enough for strongly scanned beams.
inline AzimuthGrid explorer_grid() { return AzimuthGrid(-89.0, 89.0, 0.05); }

/// Catalog material with this permittivity, or an unnamed one with the given loss tangent.
inline Material material_for_permittivity(double relative_permittivity, double fallback_loss_tangent) {
    for (const Material& m : material_catalog())
        if (m.relative_permittivity == relative_permittivity) return m;
    char label[48];
    std::snprintf(label, sizeof label, "er=%g", relative_permittivity);
    return {label, relative_permittivity, fallback_loss_tangent};
}

namespace detail {

struct ScanSample {
    double beam_deg;
    double loss_db;
};

inline ScanSample scan_sample(const LensDesign& design, double offset_m, double frequency_hz, double reference_dbi,
                              const AzimuthGrid& grid) {
    const PeakEstimate peak = refine_peak(synthesize_lens_cut(design.with_offset(offset_m), frequency_hz, grid));
    return {peak.azimuth_deg, reference_dbi - peak.gain_dbi};
}

} // namespace detail

/*!
 * Largest beam angle whose scan loss stays within limit_db. Feed offsets are
 * searched on [0, min(f_L, D/2)]: a coarse march brackets the first crossing
 * of the limit, bisection refines it.
 */
inline double max_scan_angle(const LensDesign& design, double frequency_hz, double limit_db,
                             const AzimuthGrid& grid = explorer_grid()) {
    const LensDesign on_axis = design.with_offset(0.0);
    const double reference = refine_peak(synthesize_lens_cut(on_axis, frequency_hz, grid)).gain_dbi;
    const double upper = std::min(design.focal_length_m() * (1.0 - 1e-6), 0.5 * design.diameter_m);
    constexpr int coarse_steps = 16;

    double ok_offset = 0.0;
    double ok_beam = 0.0;
    for (int k = 1; k <= coarse_steps; ++k) {
        const double offset = upper * k / coarse_steps;
        const detail::ScanSample s = detail::scan_sample(on_axis, offset, frequency_hz, reference, grid);
        if (s.loss_db > limit_db) {
            double lo = ok_offset;
            double hi = offset;
            while (hi - lo > 1e-6) {
                const double mid = 0.5 * (lo + hi);
                const detail::ScanSample m = detail::scan_sample(on_axis, mid, frequency_hz, reference, grid);
                if (m.loss_db > limit_db) {
                    hi = mid;
                } else {
                    lo = mid;
                    ok_beam = m.beam_deg;
                }
            }
            return std::abs(ok_beam);
        }
        ok_offset = offset;
        ok_beam = s.beam_deg;
    }
    return std::abs(ok_beam);
}

/// Gain, loss, scan range and band-edge DPBQ of one lens design.
inline DesignReport evaluate_design(const LensDesign& design, const FrequencyBand& band, double limit_db,
                                    const AzimuthGrid& grid = explorer_grid(), DpbqConvention convention = {}) {
    design.validate();
    detail::require(limit_db > 0.0, ErrorKind::validation, "evaluate_design: scan-loss limit must be > 0");
    const PatternSet set = synthesize_lens_pattern(design, band, grid);
    const auto rows = kpi_table(set, convention);
    const ApertureField field = aperture_field(design, band.center_hz());

    DesignReport report;
    report.design = design;
    report.peak_gain_dbi = rows[set.center_index()].peak_gain_dbi;
    report.total_loss_db = field.transmission_db + 10.0 * std::log10(field.spillover_efficiency);
    report.max_scan_deg = max_scan_angle(design, band.center_hz(), limit_db, grid);
    report.band_edge_dpbq_percent = std::min(rows.front().dpbq_percent, rows.back().dpbq_percent);
    return report;
}

/// Every permittivity x f/D x diameter combination, in that nesting order.
inline std::vector<DesignReport> sweep(const SweepSpec& spec, const AzimuthGrid& grid = explorer_grid(),
                                       DpbqConvention convention = {}) {
    spec.validate();
    std::vector<DesignReport> out;
    for (double er : spec.permittivity_values)
        for (double fd : spec.f_over_d_values)
            for (double d : spec.diameter_values) {
                LensDesign design;
                design.material = material_for_permittivity(er, spec.loss_tangent);
                design.f_over_d = fd;
                design.diameter_m = d;
                design.aperture_samples = spec.aperture_samples;
                out.push_back(evaluate_design(design, spec.band, spec.scan_loss_limit_db, grid, convention));
            }
    return out;
}

inline bool dominates(const DesignReport& a, const DesignReport& b) noexcept {
    return a.peak_gain_dbi >= b.peak_gain_dbi && a.max_scan_deg >= b.max_scan_deg &&
           (a.peak_gain_dbi > b.peak_gain_dbi || a.max_scan_deg > b.max_scan_deg);
}

/// Reports not dominated in (peak gain, scan range), ordered by gain descending; ties keep input order.
inline std::vector<DesignReport> pareto_front(const std::vector<DesignReport>& reports) {
    detail::require(!reports.empty(), ErrorKind::validation, "pareto_front: no reports");
    std::vector<DesignReport> front;
    for (const DesignReport& candidate : reports) {
        const bool dominated = std::any_of(reports.begin(), reports.end(),
                                           [&](const DesignReport& other) { return dominates(other, candidate); });
        if (!dominated) front.push_back(candidate);
    }
    std::stable_sort(front.begin(), front.end(),
                     [](const DesignReport& a, const DesignReport& b) { return a.peak_gain_dbi > b.peak_gain_dbi; });
    return front;
}

} // namespace beamsquint

#endif
