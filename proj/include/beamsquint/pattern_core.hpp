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

#ifndef BEAMSQUINT_PATTERN_CORE_HPP
#define BEAMSQUINT_PATTERN_CORE_HPP

#include "error.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace beamsquint {

inline constexpr double speed_of_light = 299792458.0; // m/s, exact

inline constexpr double deg_to_rad(double deg) noexcept { return deg * std::numbers::pi / 180.0; }
inline constexpr double rad_to_deg(double rad) noexcept { return rad * 180.0 / std::numbers::pi; }

/// Floor applied to nulls so every sample stays finite.
inline constexpr double pattern_floor_db = -200.0;

inline double wavelength(double frequency_hz) { return speed_of_light / frequency_hz; }

/*!
 * Operating band: a center frequency (CF) inside [lower, upper] and the number
 * of frequency samples taken across it.
 */
class FrequencyBand {
public:
    FrequencyBand(double center_hz, double lower_hz, double upper_hz, std::size_t sample_count)
        : center_hz_(center_hz), lower_hz_(lower_hz), upper_hz_(upper_hz), sample_count_(sample_count) {
        using detail::require;
        require(std::isfinite(center_hz) && std::isfinite(lower_hz) && std::isfinite(upper_hz),
                ErrorKind::validation, "FrequencyBand: frequencies must be finite");
        require(lower_hz > 0.0 && center_hz > 0.0 && upper_hz > 0.0, ErrorKind::validation,
                "FrequencyBand: all frequencies must be > 0");
        require(lower_hz <= center_hz && center_hz <= upper_hz, ErrorKind::validation,
                "FrequencyBand: requires lower_hz <= center_hz <= upper_hz");
        require(sample_count >= 1, ErrorKind::validation, "FrequencyBand: sample_count must be >= 1");
        require(sample_count == 1 || lower_hz < upper_hz, ErrorKind::validation,
                "FrequencyBand: sample_count > 1 needs lower_hz < upper_hz");
    }

    /// The 27.5-29.5 GHz demo band with CF 28.5 GHz, sampled at band edges and center.
    static FrequencyBand demo_band(std::size_t sample_count = 3) {
        return FrequencyBand(28.5e9, 27.5e9, 29.5e9, sample_count);
    }

    double center_hz() const noexcept { return center_hz_; }
    double lower_hz() const noexcept { return lower_hz_; }
    double upper_hz() const noexcept { return upper_hz_; }
    std::size_t sample_count() const noexcept { return sample_count_; }

    /// Evenly spaced samples from lower to upper. The sample nearest the CF is
    /// snapped onto it; a band whose samples miss the CF is rejected.
    std::vector<double> sample_frequencies() const {
        if (sample_count_ == 1) return {center_hz_};
        std::vector<double> out(sample_count_);
        const double span = upper_hz_ - lower_hz_;
        const auto intervals = static_cast<double>(sample_count_ - 1);
        for (std::size_t i = 0; i < sample_count_; ++i)
            out[i] = lower_hz_ + span * static_cast<double>(i) / intervals;
        out.back() = upper_hz_;
        auto nearest = std::min_element(out.begin(), out.end(), [&](double a, double b) {
            return std::abs(a - center_hz_) < std::abs(b - center_hz_);
        });
        detail::require(std::abs(*nearest - center_hz_) <= 1e-9 * center_hz_, ErrorKind::validation,
                        "FrequencyBand: evenly spaced samples do not include center_hz");
        *nearest = center_hz_;
        return out;
    }

    bool operator==(const FrequencyBand&) const = default;

private:
    double center_hz_;
    double lower_hz_;
    double upper_hz_;
    std::size_t sample_count_;
};

/// Uniform azimuth sampling from start to stop inclusive.
class AzimuthGrid {
public:
    AzimuthGrid(double start_deg, double stop_deg, double step_deg)
        : start_deg_(start_deg), stop_deg_(stop_deg), step_deg_(step_deg) {
        using detail::require;
        require(std::isfinite(start_deg) && std::isfinite(stop_deg) && std::isfinite(step_deg),
                ErrorKind::validation, "AzimuthGrid: angles must be finite");
        require(start_deg < stop_deg, ErrorKind::validation, "AzimuthGrid: requires start_deg < stop_deg");
        require(step_deg > 0.0, ErrorKind::validation, "AzimuthGrid: requires step_deg > 0");
        const double ratio = (stop_deg - start_deg) / step_deg;
        require(std::abs(ratio - std::round(ratio)) <= 1e-9, ErrorKind::validation,
                "AzimuthGrid: (stop_deg - start_deg) / step_deg must be an integer");
        intervals_ = static_cast<std::size_t>(std::llround(ratio));
    }

    /// -60..+60 deg at 0.01 deg.
    static AzimuthGrid analysis_default() { return AzimuthGrid(-60.0, 60.0, 0.01); }

    double start_deg() const noexcept { return start_deg_; }
    double stop_deg() const noexcept { return stop_deg_; }
    double step_deg() const noexcept { return step_deg_; }
    std::size_t point_count() const noexcept { return intervals_ + 1; }

    double angle(std::size_t i) const noexcept {
        if (i == intervals_) return stop_deg_;
        return start_deg_ + (stop_deg_ - start_deg_) * static_cast<double>(i) / static_cast<double>(intervals_);
    }

    bool operator==(const AzimuthGrid& other) const noexcept {
        return start_deg_ == other.start_deg_ && stop_deg_ == other.stop_deg_ && step_deg_ == other.step_deg_;
    }

private:
    double start_deg_;
    double stop_deg_;
    double step_deg_;
    std::size_t intervals_ = 0;
};

/// Angles of every grid point, start to stop inclusive.
inline std::vector<double> sample_grid(const AzimuthGrid& grid) {
    std::vector<double> out(grid.point_count());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = grid.angle(i);
    return out;
}

/// Gain-vs-azimuth cut at one frequency.
class BeamPattern {
public:
    BeamPattern(double frequency_hz, AzimuthGrid grid, std::vector<double> gain_dbi)
        : frequency_hz_(frequency_hz), grid_(grid), gain_dbi_(std::move(gain_dbi)) {
        using detail::require;
        require(std::isfinite(frequency_hz) && frequency_hz > 0.0, ErrorKind::validation,
                "BeamPattern: frequency_hz must be finite and > 0");
        require(gain_dbi_.size() == grid_.point_count(), ErrorKind::validation,
                "BeamPattern: gain list length " + std::to_string(gain_dbi_.size()) +
                    " does not match grid point count " + std::to_string(grid_.point_count()));
        require(std::all_of(gain_dbi_.begin(), gain_dbi_.end(), [](double g) { return std::isfinite(g); }),
                ErrorKind::validation, "BeamPattern: gain values must be finite");
    }

    double frequency_hz() const noexcept { return frequency_hz_; }
    const AzimuthGrid& grid() const noexcept { return grid_; }
    std::span<const double> gain_dbi() const noexcept { return gain_dbi_; }

    /// Same cut with every sample shifted by offset_db.
    BeamPattern shifted(double offset_db) const {
        std::vector<double> g(gain_dbi_);
        for (double& v : g) v += offset_db;
        return BeamPattern(frequency_hz_, grid_, std::move(g));
    }

    bool operator==(const BeamPattern&) const = default;

private:
    double frequency_hz_;
    AzimuthGrid grid_;
    std::vector<double> gain_dbi_;
};

/// One pattern per band sample on a shared grid; the CF pattern is always present.
class PatternSet {
public:
    PatternSet(std::vector<BeamPattern> patterns, FrequencyBand band)
        : patterns_(std::move(patterns)), band_(band) {
        using detail::require;
        require(!patterns_.empty(), ErrorKind::validation, "PatternSet: no patterns");
        require(patterns_.size() == band_.sample_count(), ErrorKind::validation,
                "PatternSet: expected " + std::to_string(band_.sample_count()) + " patterns, got " +
                    std::to_string(patterns_.size()));
        const AzimuthGrid& grid = patterns_.front().grid();
        bool found_center = false;
        for (std::size_t i = 0; i < patterns_.size(); ++i) {
            const BeamPattern& p = patterns_[i];
            require(p.grid() == grid, ErrorKind::validation, "PatternSet: patterns use mismatched azimuth grids");
            if (i > 0)
                require(patterns_[i - 1].frequency_hz() < p.frequency_hz(), ErrorKind::validation,
                        "PatternSet: frequencies must be strictly increasing");
            require(p.frequency_hz() >= band_.lower_hz() && p.frequency_hz() <= band_.upper_hz(),
                    ErrorKind::validation, "PatternSet: pattern frequency outside band");
            if (p.frequency_hz() == band_.center_hz()) {
                found_center = true;
                center_index_ = i;
            }
        }
        require(found_center, ErrorKind::validation, "PatternSet: no pattern at the center frequency");
    }

    std::span<const BeamPattern> patterns() const noexcept { return patterns_; }
    const FrequencyBand& band() const noexcept { return band_; }
    const AzimuthGrid& grid() const noexcept { return patterns_.front().grid(); }
    std::size_t size() const noexcept { return patterns_.size(); }
    std::size_t center_index() const noexcept { return center_index_; }
    const BeamPattern& center_pattern() const noexcept { return patterns_[center_index_]; }

    bool operator==(const PatternSet&) const = default;

private:
    std::vector<BeamPattern> patterns_;
    FrequencyBand band_;
    std::size_t center_index_ = 0;
};

/*!
 * Gain at an arbitrary azimuth, linear in dB between the bracketing samples.
 * Queries that hit a grid node return the stored sample unchanged.
 */
inline double interpolate_gain(const BeamPattern& pattern, double azimuth_deg) {
    const AzimuthGrid& grid = pattern.grid();
    if (!(azimuth_deg >= grid.start_deg() && azimuth_deg <= grid.stop_deg()))
        throw RangeError("interpolate_gain: azimuth " + std::to_string(azimuth_deg) + " outside [" +
                             std::to_string(grid.start_deg()) + ", " + std::to_string(grid.stop_deg()) + "]",
                         grid.start_deg(), grid.stop_deg());
    const auto gains = pattern.gain_dbi();
    const std::size_t last = grid.point_count() - 1;
    const double pos = (azimuth_deg - grid.start_deg()) / (grid.stop_deg() - grid.start_deg()) * static_cast<double>(last);
    auto lo = static_cast<std::size_t>(std::clamp(std::floor(pos), 0.0, static_cast<double>(last)));
    // floating-point index estimate may be off by one near nodes
    while (lo > 0 && grid.angle(lo) > azimuth_deg) --lo;
    while (lo < last && grid.angle(lo + 1) <= azimuth_deg) ++lo;
    if (grid.angle(lo) == azimuth_deg || lo == last) return gains[lo];
    const double a0 = grid.angle(lo);
    const double a1 = grid.angle(lo + 1);
    const double t = (azimuth_deg - a0) / (a1 - a0);
    return gains[lo] + t * (gains[lo + 1] - gains[lo]);
}

} // namespace beamsquint

#endif
