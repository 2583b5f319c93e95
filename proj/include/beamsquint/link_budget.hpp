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

#ifndef BEAMSQUINT_LINK_BUDGET_HPP
#define BEAMSQUINT_LINK_BUDGET_HPP

#include "pattern_core.hpp"
#include "squint_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace beamsquint {

/// Code rate as an exact fraction.
struct CodeRate {
    std::int64_t numerator = 1;
    std::int64_t denominator = 1;

    double value() const noexcept { return static_cast<double>(numerator) / static_cast<double>(denominator); }

    bool operator==(const CodeRate&) const = default;
};

struct McsScheme {
    std::string name;
    int modulation_order = 6; ///< bits per symbol
    CodeRate code_rate{5, 6};
    double min_snr_db = 20.0;

    void validate() const {
        using detail::require;
        require(modulation_order == 2 || modulation_order == 4 || modulation_order == 6 || modulation_order == 8,
                ErrorKind::validation, "McsScheme: modulation_order must be one of 2, 4, 6, 8");
        require(code_rate.denominator > 0 && code_rate.numerator > 0 && code_rate.numerator <= code_rate.denominator,
                ErrorKind::validation, "McsScheme: code rate must lie in (0, 1]");
        require(std::isfinite(min_snr_db), ErrorKind::validation, "McsScheme: min_snr_db must be finite");
    }

    bool operator==(const McsScheme&) const = default;
};

/// QPSK 1/2, 16-QAM 1/2, 64-QAM 5/6 at 5/11/20 dB. Thresholds are assumed receiver values.
inline std::vector<McsScheme> default_mcs_ladder() {
    return {
        {"qpsk-1/2", 2, {1, 2}, 5.0},
        {"16qam-1/2", 4, {1, 2}, 11.0},
        {"64qam-5/6", 6, {5, 6}, 20.0},
    };
}

struct LinkConfig {
    double carrier_hz = 28.5e9;
    double bandwidth_hz = 800e6;
    double distance_m = 5.0;
    double tx_power_dbm = 0.0;
    double overhead_fraction = 0.35;
    double noise_figure_db = 7.0;
    double rx_gain_dbi = 0.0;
    std::optional<double> boresight_deg; ///< Rx direction in the Tx pattern; unset: CF beam peak

    void validate() const {
        using detail::require;
        require(carrier_hz > 0.0 && std::isfinite(carrier_hz), ErrorKind::validation, "LinkConfig: carrier_hz must be > 0");
        require(bandwidth_hz > 0.0 && std::isfinite(bandwidth_hz), ErrorKind::validation,
                "LinkConfig: bandwidth_hz must be > 0");
        require(distance_m > 0.0 && std::isfinite(distance_m), ErrorKind::validation, "LinkConfig: distance_m must be > 0");
        require(std::isfinite(tx_power_dbm), ErrorKind::validation, "LinkConfig: tx_power_dbm must be finite");
        require(overhead_fraction >= 0.0 && overhead_fraction < 1.0, ErrorKind::validation,
                "LinkConfig: overhead_fraction must lie in [0, 1)");
        require(std::isfinite(noise_figure_db) && std::isfinite(rx_gain_dbi), ErrorKind::validation,
                "LinkConfig: noise_figure_db and rx_gain_dbi must be finite");
        require(!boresight_deg || std::isfinite(*boresight_deg), ErrorKind::validation,
                "LinkConfig: boresight_deg must be finite");
    }

    bool operator==(const LinkConfig&) const = default;
};

/// Friis loss 20*log10(4 pi d f / c).
inline double free_space_path_loss(double distance_m, double frequency_hz) {
    detail::require(distance_m > 0.0 && frequency_hz > 0.0, ErrorKind::validation,
                    "free_space_path_loss: distance and frequency must be > 0");
    return 20.0 * std::log10(4.0 * std::numbers::pi * distance_m * frequency_hz / speed_of_light);
}

/// kTB at 290 K plus the noise figure, in dBm.
inline double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db) {
    return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

/// bandwidth * bits/symbol * code rate * (1 - overhead), in bit/s.
inline double throughput(const LinkConfig& config, const McsScheme& mcs) {
    config.validate();
    mcs.validate();
    return config.bandwidth_hz * static_cast<double>(mcs.modulation_order) *
           static_cast<double>(mcs.code_rate.numerator) / static_cast<double>(mcs.code_rate.denominator) *
           (1.0 - config.overhead_fraction);
}

struct SubbandResult {
    double center_hz = 0.0;
    double gain_dbi = 0.0;
    double snr_db = 0.0;
    std::optional<std::size_t> mcs_index; ///< index into the ladder; unset when below every threshold
    double bits_per_second = 0.0;
};

struct BandThroughput {
    std::vector<SubbandResult> subbands;
    double boresight_deg = 0.0;
    double total_bits_per_second = 0.0;
};

/// Pattern gain at (frequency, azimuth): dB-linear in azimuth within a cut, then across frequency.
inline double gain_at(const PatternSet& set, double frequency_hz, double azimuth_deg) {
    const auto patterns = set.patterns();
    const double lo = patterns.front().frequency_hz();
    const double hi = patterns.back().frequency_hz();
    const double tol = 1e-9 * hi;
    if (frequency_hz < lo - tol || frequency_hz > hi + tol)
        throw RangeError("gain_at: frequency " + std::to_string(frequency_hz) + " Hz outside the pattern set", lo, hi);
    if (patterns.size() == 1 || frequency_hz <= lo) return interpolate_gain(patterns.front(), azimuth_deg);
    if (frequency_hz >= hi) return interpolate_gain(patterns.back(), azimuth_deg);
    std::size_t i = 1;
    while (patterns[i].frequency_hz() < frequency_hz) ++i;
    const BeamPattern& p0 = patterns[i - 1];
    const BeamPattern& p1 = patterns[i];
    if (p1.frequency_hz() == frequency_hz) return interpolate_gain(p1, azimuth_deg);
    const double t = (frequency_hz - p0.frequency_hz()) / (p1.frequency_hz() - p0.frequency_hz());
    const double g0 = interpolate_gain(p0, azimuth_deg);
    const double g1 = interpolate_gain(p1, azimuth_deg);
    return g0 + t * (g1 - g0);
}

/*!
 * Splits the channel into equal subbands and picks, per subband, the highest
 * MCS whose threshold the subband SNR meets:
 *
 *   SNR = P_tx + G_tx(f, boresight) + G_rx - FSPL(d, f) - (kTB_sub + NF)
 *
 * A subband below every threshold carries nothing.
 */
inline BandThroughput band_throughput(const PatternSet& set, const LinkConfig& config,
                                      const std::vector<McsScheme>& mcs_table, std::size_t subbands) {
    using detail::require;
    config.validate();
    require(!mcs_table.empty(), ErrorKind::validation, "band_throughput: MCS table is empty");
    for (const McsScheme& m : mcs_table) m.validate();
    for (std::size_t i = 1; i < mcs_table.size(); ++i)
        require(mcs_table[i - 1].min_snr_db <= mcs_table[i].min_snr_db, ErrorKind::validation,
                "band_throughput: MCS table must be sorted by min_snr_db ascending");
    require(subbands >= 1, ErrorKind::validation, "band_throughput: subbands must be >= 1");
    require(config.carrier_hz >= set.band().lower_hz() && config.carrier_hz <= set.band().upper_hz(),
            ErrorKind::validation, "band_throughput: carrier outside the pattern band");

    BandThroughput result;
    result.boresight_deg = config.boresight_deg ? *config.boresight_deg : refine_peak(set.center_pattern()).azimuth_deg;
    const double sub_bw = config.bandwidth_hz / static_cast<double>(subbands);
    const double noise = thermal_noise_dbm(sub_bw, config.noise_figure_db);
    const double channel_lo = config.carrier_hz - 0.5 * config.bandwidth_hz;
    for (std::size_t s = 0; s < subbands; ++s) {
        SubbandResult sub;
        sub.center_hz = subbands == 1 ? config.carrier_hz : channel_lo + (static_cast<double>(s) + 0.5) * sub_bw;
        sub.gain_dbi = gain_at(set, sub.center_hz, result.boresight_deg);
        sub.snr_db = config.tx_power_dbm + sub.gain_dbi + config.rx_gain_dbi -
                     free_space_path_loss(config.distance_m, sub.center_hz) - noise;
        for (std::size_t m = mcs_table.size(); m-- > 0;) {
            if (mcs_table[m].min_snr_db <= sub.snr_db) {
                sub.mcs_index = m;
                LinkConfig slice = config;
                slice.bandwidth_hz = sub_bw;
                sub.bits_per_second = throughput(slice, mcs_table[m]);
                break;
            }
        }
        result.total_bits_per_second += sub.bits_per_second;
        result.subbands.push_back(sub);
    }
    return result;
}

} // namespace beamsquint

#endif
