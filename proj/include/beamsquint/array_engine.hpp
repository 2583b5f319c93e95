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

#ifndef BEAMSQUINT_ARRAY_ENGINE_HPP
#define BEAMSQUINT_ARRAY_ENGINE_HPP

#include "pattern_core.hpp"
#include "squint_metrics.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <vector>

namespace beamsquint {

enum class Weighting {
    phase_shifter_at_cf, ///< phases computed once at the CF; the beam squints off-CF
    true_time_delay,     ///< per-element delays; phase tracks the operating frequency
};

/// Uniform linear array with cos^q elements and uniform amplitude taper.
struct ArrayDesign {
    std::size_t element_count = 16;
    double spacing_m = 0.0;
    Weighting weighting = Weighting::phase_shifter_at_cf;
    double steer_deg = 0.0;
    double element_exponent = 1.0;
    double element_peak_gain_dbi = 5.0;

    /// Half-wavelength spacing at the given frequency.
    static double half_wavelength(double frequency_hz) { return 0.5 * wavelength(frequency_hz); }

    void validate() const {
        using detail::require;
        require(element_count >= 1, ErrorKind::validation, "ArrayDesign: element_count must be >= 1");
        require(spacing_m > 0.0 && std::isfinite(spacing_m), ErrorKind::validation, "ArrayDesign: spacing_m must be > 0");
        require(std::abs(steer_deg) < 90.0, ErrorKind::validation, "ArrayDesign: |steer_deg| must be < 90");
        require(element_exponent >= 0.0 && std::isfinite(element_exponent), ErrorKind::validation,
                "ArrayDesign: element_exponent must be >= 0");
        require(std::isfinite(element_peak_gain_dbi), ErrorKind::validation,
                "ArrayDesign: element_peak_gain_dbi must be finite");
    }

    bool operator==(const ArrayDesign&) const = default;
};

/*!
 * Complex element weights. Element n carries phase
 * -2*pi*f_w*n*d*sin(steer)/c, where f_w is the CF for phase shifters and the
 * evaluation frequency for true time delay. Every magnitude is exactly 1.
 */
inline std::vector<std::complex<double>> element_weights(const ArrayDesign& design, double center_hz, double eval_hz) {
    design.validate();
    detail::require(center_hz > 0.0 && eval_hz > 0.0, ErrorKind::validation,
                    "element_weights: frequencies must be > 0");
    const double f_w = design.weighting == Weighting::phase_shifter_at_cf ? center_hz : eval_hz;
    const double sin_steer = std::sin(deg_to_rad(design.steer_deg));
    std::vector<std::complex<double>> w(design.element_count);
    for (std::size_t n = 0; n < w.size(); ++n) {
        const double phase = -2.0 * std::numbers::pi * f_w * static_cast<double>(n) * design.spacing_m * sin_steer /
                             speed_of_light;
        w[n] = {std::cos(phase), std::sin(phase)};
    }
    return w;
}

namespace detail {

// 20*log10(|AF| * cos^q(theta)) on the grid, unnormalized.
inline std::vector<double> raw_array_pattern_db(const ArrayDesign& design, double center_hz, double eval_hz,
                                                const AzimuthGrid& grid) {
    const auto w = element_weights(design, center_hz, eval_hz);
    const double k_d = 2.0 * std::numbers::pi * eval_hz * design.spacing_m / speed_of_light;
    std::vector<double> out(grid.point_count());
    for (std::size_t i = 0; i < out.size(); ++i) {
        const double theta = deg_to_rad(grid.angle(i));
        const double u = k_d * std::sin(theta);
        std::complex<double> af{0.0, 0.0};
        for (std::size_t n = 0; n < w.size(); ++n) {
            const double ph = u * static_cast<double>(n);
            af += w[n] * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        const double element = std::pow(std::max(std::cos(theta), 0.0), design.element_exponent);
        const double mag = std::abs(af) * element;
        out[i] = mag > 0.0 ? std::max(20.0 * std::log10(mag), pattern_floor_db) : pattern_floor_db;
    }
    return out;
}

} // namespace detail

/// 10*log10(N) plus the element peak gain.
inline double array_reference_gain_dbi(const ArrayDesign& design) {
    return 10.0 * std::log10(static_cast<double>(design.element_count)) + design.element_peak_gain_dbi;
}

/*!
 * Per-frequency array patterns. One dB offset, chosen so the refined CF peak
 * equals reference_gain_dbi (default: array_reference_gain_dbi), is applied to
 * every frequency, so off-CF patterns keep their level relative to the CF.
 */
inline PatternSet synthesize_array_pattern(const ArrayDesign& design, const FrequencyBand& band,
                                           const AzimuthGrid& grid,
                                           std::optional<double> reference_gain_dbi = std::nullopt) {
    design.validate();
    const auto freqs = band.sample_frequencies();
    std::vector<std::vector<double>> raw;
    raw.reserve(freqs.size());
    std::size_t cf_index = 0;
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        raw.push_back(detail::raw_array_pattern_db(design, band.center_hz(), freqs[i], grid));
        if (freqs[i] == band.center_hz()) cf_index = i;
    }
    const double reference = reference_gain_dbi.value_or(array_reference_gain_dbi(design));
    const double cf_peak = refine_peak(BeamPattern(band.center_hz(), grid, raw[cf_index])).gain_dbi;
    const double offset = reference - cf_peak;

    std::vector<BeamPattern> patterns;
    patterns.reserve(freqs.size());
    for (std::size_t i = 0; i < freqs.size(); ++i) {
        for (double& g : raw[i]) g += offset;
        patterns.emplace_back(freqs[i], grid, std::move(raw[i]));
    }
    return PatternSet(std::move(patterns), band);
}

} // namespace beamsquint

#endif
