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

#ifndef BEAMSQUINT_LENS_ENGINE_HPP
#define BEAMSQUINT_LENS_ENGINE_HPP

#include "pattern_core.hpp"
#include "squint_metrics.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

namespace beamsquint {

struct Material {
    std::string name;
    double relative_permittivity = 2.25;
    double loss_tangent = 3e-4;

    double refractive_index() const { return std::sqrt(relative_permittivity); }

    void validate() const {
        detail::require(relative_permittivity > 1.0 && std::isfinite(relative_permittivity), ErrorKind::validation,
                        "Material: relative_permittivity must be > 1");
        detail::require(loss_tangent >= 0.0 && std::isfinite(loss_tangent), ErrorKind::validation,
                        "Material: loss_tangent must be >= 0");
    }

    bool operator==(const Material&) const = default;
};

/// Built-in dielectric table. Only polyethylene is tied to the fabricated lens;
/// the rest are typical catalog values near 30 GHz.
inline const std::vector<Material>& material_catalog() {
    static const std::vector<Material> table = {
        {"polyethylene", 2.25, 3e-4},
        {"ptfe", 2.1, 2e-4},
        {"polystyrene", 2.53, 5e-4},
        {"abs", 2.7, 5e-3},
        {"pla", 2.75, 1e-2},
        {"alumina", 9.8, 1e-4},
    };
    return table;
}

inline std::optional<Material> find_material(const std::string& name) {
    for (const Material& m : material_catalog())
        if (m.name == name) return m;
    return std::nullopt;
}

inline Material polyethylene() { return material_catalog().front(); }

/*!
 * Plano-convex hyperbolic lens: the hyperbolic face looks at the feed, the
 * flat face is the radiating aperture. Focal length f_L = f_over_d * D is the
 * feed-to-vertex distance.
 */
struct LensDesign {
    Material material = polyethylene();
    double diameter_m = 0.060;
    double f_over_d = 0.7;
    double feed_offset_m = 0.0;
    std::size_t aperture_samples = 256;
    std::optional<double> feed_exponent; ///< unset: -10 dB edge taper at the rim

    double focal_length_m() const { return f_over_d * diameter_m; }

    LensDesign with_offset(double offset_m) const {
        LensDesign d = *this;
        d.feed_offset_m = offset_m;
        return d;
    }

    void validate() const {
        using detail::require;
        material.validate();
        require(diameter_m > 0.0 && std::isfinite(diameter_m), ErrorKind::validation, "LensDesign: diameter_m must be > 0");
        require(f_over_d > 0.0 && std::isfinite(f_over_d), ErrorKind::validation, "LensDesign: f_over_d must be > 0");
        require(aperture_samples >= 16, ErrorKind::validation, "LensDesign: aperture_samples must be >= 16");
        require(std::isfinite(feed_offset_m) && std::abs(feed_offset_m) < focal_length_m(), ErrorKind::validation,
                "LensDesign: |feed_offset_m| must be < focal length");
        require(!feed_exponent || (*feed_exponent >= 0.0 && std::isfinite(*feed_exponent)), ErrorKind::validation,
                "LensDesign: feed_exponent must be >= 0");
    }

    bool operator==(const LensDesign&) const = default;
};

/// Geometric-optics aperture distribution on the flat face, one entry per feed ray.
struct ApertureField {
    std::vector<double> positions_m;
    std::vector<double> amplitude;
    std::vector<double> delay_s;
    double spillover_efficiency = 1.0;
    double transmission_db = 0.0;
};

/// Angle from the axis beyond which the hyperbola has no surface.
inline double asymptote_angle(const Material& material) { return std::acos(1.0 / material.refractive_index()); }

/// Focus-to-surface distance r(psi) = (n - 1) f_L / (n cos(psi) - 1).
inline double lens_profile(const LensDesign& design, double psi_rad) {
    const double n = design.material.refractive_index();
    const double limit = asymptote_angle(design.material);
    if (!(psi_rad >= 0.0 && psi_rad < limit))
        detail::fail(ErrorKind::domain, "lens_profile: feed-ray angle " + std::to_string(psi_rad) +
                                            " rad outside [0, " + std::to_string(limit) + ")");
    return (n - 1.0) * design.focal_length_m() / (n * std::cos(psi_rad) - 1.0);
}

/// Feed-ray angle that reaches the lens rim, r(psi) sin(psi) = D/2, by bisection.
inline double edge_angle(const LensDesign& design) {
    design.validate();
    const double half = 0.5 * design.diameter_m;
    double lo = 0.0;
    double hi = asymptote_angle(design.material);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (lens_profile(design, mid) * std::sin(mid) < half)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

/// On-axis thickness; the rim has zero thickness.
inline double central_thickness(const LensDesign& design) {
    const double edge = edge_angle(design);
    return lens_profile(design, edge) * std::cos(edge) - design.focal_length_m();
}

/// Feed exponent q with cos^q(psi_max) = -taper_db.
inline double edge_taper_feed_exponent(const LensDesign& design, double taper_db = 10.0) {
    return -(taper_db / 20.0) / std::log10(std::cos(edge_angle(design)));
}

inline double resolved_feed_exponent(const LensDesign& design) {
    return design.feed_exponent ? *design.feed_exponent : edge_taper_feed_exponent(design);
}

/// Two-surface normal-incidence reflection loss, 2 * 10*log10(1 - Gamma^2).
inline double fresnel_transmission_db(const Material& material) {
    const double n = material.refractive_index();
    const double gamma = (n - 1.0) / (n + 1.0);
    return 2.0 * 10.0 * std::log10(1.0 - gamma * gamma);
}

/// alpha = pi f sqrt(eps_r) tan(delta) / c, in Np/m.
inline double dielectric_attenuation_np_per_m(const Material& material, double frequency_hz) {
    return std::numbers::pi * frequency_hz * material.refractive_index() * material.loss_tangent / speed_of_light;
}

inline double dielectric_transmission_db(const Material& material, double frequency_hz, double thickness_m) {
    constexpr double db_per_neper = 8.685889638065037; // 20 / ln(10)
    return -db_per_neper * dielectric_attenuation_np_per_m(material, frequency_hz) * thickness_m;
}

/*!
 * Fraction of feed power landing on the lens. Each rim is seen from the
 * (possibly displaced) feed at a signed angle; a cos^q amplitude feed puts
 * 1 - cos^(2q+1)(psi) of a half-space inside psi.
 */
inline double spillover_efficiency(const LensDesign& design) {
    const double edge = edge_angle(design);
    const double z_rim = lens_profile(design, edge) * std::cos(edge);
    const double q = resolved_feed_exponent(design);
    const auto captured = [q](double psi) {
        return std::copysign(1.0 - std::pow(std::cos(psi), 2.0 * q + 1.0), psi);
    };
    const double half = 0.5 * design.diameter_m;
    const double upper = std::atan2(half - design.feed_offset_m, z_rim);
    const double lower = std::atan2(half + design.feed_offset_m, z_rim);
    return 0.5 * (captured(upper) + captured(lower));
}

/*!
 * Aperture field from ray tracing the feed through the lens. Rays are spaced
 * uniformly in on-axis feed angle across [-psi_max, psi_max]. Each ray carries
 * amplitude cos^q(feed angle) / (air path) and delay
 * (air path from the feed + n * axial path in the dielectric) / c. With the
 * feed at the focus every delay is identical.
 */
inline ApertureField aperture_field(const LensDesign& design, double frequency_hz) {
    design.validate();
    detail::require(frequency_hz > 0.0 && std::isfinite(frequency_hz), ErrorKind::validation,
                    "aperture_field: frequency must be > 0");
    const double n = design.material.refractive_index();
    const double edge = edge_angle(design);
    const double q = resolved_feed_exponent(design);
    const double z_back = lens_profile(design, edge) * std::cos(edge);
    const std::size_t m = design.aperture_samples;

    std::vector<double> psi(m);
    for (std::size_t i = 0; i < m; ++i) psi[i] = -edge + 2.0 * edge * static_cast<double>(i) / static_cast<double>(m - 1);
    for (std::size_t i = 0; i < m / 2; ++i) psi[m - 1 - i] = -psi[i];
    if (m % 2 == 1) psi[m / 2] = 0.0;

    ApertureField field;
    field.positions_m.resize(m);
    field.amplitude.resize(m);
    field.delay_s.resize(m);
    std::vector<double> thickness(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double r = lens_profile(design, std::abs(psi[i]));
        const double x = r * std::sin(psi[i]);
        const double z = r * std::cos(psi[i]);
        const double dx = x - design.feed_offset_m;
        const double path = design.feed_offset_m == 0.0 ? r : std::hypot(dx, z);
        const double cos_feed = z / path;
        field.positions_m[i] = x;
        field.amplitude[i] = std::pow(std::max(cos_feed, 0.0), q) / path;
        thickness[i] = z_back - z;
        field.delay_s[i] = (path + n * thickness[i]) / speed_of_light;
    }

    double area = 0.0;
    for (std::size_t i = 1; i < m; ++i)
        area += 0.5 * (thickness[i] + thickness[i - 1]) * (field.positions_m[i] - field.positions_m[i - 1]);
    const double mean_thickness = area / design.diameter_m;

    field.spillover_efficiency = spillover_efficiency(design);
    field.transmission_db = fresnel_transmission_db(design.material) +
                            dielectric_transmission_db(design.material, frequency_hz, mean_thickness);
    return field;
}

/// 41253 / HPBW^2 with HPBW in degrees and equal principal-plane beamwidths.
inline double kraus_directivity_dbi(double hpbw_deg) { return 10.0 * std::log10(41253.0 / (hpbw_deg * hpbw_deg)); }

namespace detail {

// 20*log10 |sum_i a_i exp(j 2 pi f (tau_i - x_i sin(theta) / c))| on the grid.
inline std::vector<double> raw_aperture_pattern_db(const ApertureField& field, double frequency_hz,
                                                   const AzimuthGrid& grid) {
    const std::size_t m = field.positions_m.size();
    const double tau_ref = field.delay_s[m / 2];
    const double omega = 2.0 * std::numbers::pi * frequency_hz;
    std::vector<std::complex<double>> source(m);
    std::vector<double> wavenumber_x(m);
    for (std::size_t i = 0; i < m; ++i) {
        source[i] = std::polar(field.amplitude[i], omega * (field.delay_s[i] - tau_ref));
        wavenumber_x[i] = omega * field.positions_m[i] / speed_of_light;
    }
    std::vector<double> out(grid.point_count());
    for (std::size_t k = 0; k < out.size(); ++k) {
        const double s = std::sin(deg_to_rad(grid.angle(k)));
        std::complex<double> sum{0.0, 0.0};
        for (std::size_t i = 0; i < m; ++i) {
            const double ph = -wavenumber_x[i] * s;
            sum += source[i] * std::complex<double>(std::cos(ph), std::sin(ph));
        }
        const double mag = std::abs(sum);
        out[k] = mag > 0.0 ? 20.0 * std::log10(mag) : -std::numeric_limits<double>::infinity();
    }
    double peak = -std::numeric_limits<double>::infinity();
    for (double v : out) peak = std::max(peak, v);
    for (double& v : out) v = std::max(v, peak + pattern_floor_db);
    return out;
}

} // namespace detail

/// Calibrated cut at one frequency.
inline BeamPattern synthesize_lens_cut(const LensDesign& design, double frequency_hz, const AzimuthGrid& grid) {
    const ApertureField field = aperture_field(design, frequency_hz);
    std::vector<double> raw = detail::raw_aperture_pattern_db(field, frequency_hz, grid);
    const BeamPattern raw_pattern(frequency_hz, grid, raw);
    const double raw_peak = refine_peak(raw_pattern).gain_dbi;
    const double gain = kraus_directivity_dbi(half_power_beamwidth(raw_pattern)) + field.transmission_db +
                        10.0 * std::log10(field.spillover_efficiency);
    for (double& v : raw) v += gain - raw_peak;
    return BeamPattern(frequency_hz, grid, std::move(raw));
}

/*!
 * Far field of the lens at every band frequency. Each cut is scaled so its
 * refined peak equals the Kraus directivity estimate from its own HPBW plus
 * the bulk transmission and spillover terms.
 */
inline PatternSet synthesize_lens_pattern(const LensDesign& design, const FrequencyBand& band, const AzimuthGrid& grid) {
    design.validate();
    const double shortest = wavelength(band.upper_hz());
    const double needed = 4.0 * design.diameter_m / shortest;
    if (static_cast<double>(design.aperture_samples) < needed)
        detail::fail(ErrorKind::resolution, "synthesize_lens_pattern: aperture_samples " +
                                                std::to_string(design.aperture_samples) + " < " +
                                                std::to_string(static_cast<std::size_t>(std::ceil(needed))) +
                                                " (4 samples per wavelength across the aperture)");
    std::vector<BeamPattern> patterns;
    for (double f : band.sample_frequencies()) patterns.push_back(synthesize_lens_cut(design, f, grid));
    return PatternSet(std::move(patterns), band);
}

struct ScanPoint {
    double offset_m = 0.0;
    double beam_deg = 0.0;     ///< refined peak azimuth; opposite in sign to the offset
    double scan_loss_db = 0.0; ///< on-axis peak gain minus this peak gain
};

/// Beam angle and scan loss for each feed offset at one frequency.
inline std::vector<ScanPoint> scan_curve(const LensDesign& design, const std::vector<double>& offsets_m,
                                         double frequency_hz,
                                         const AzimuthGrid& grid = AzimuthGrid::analysis_default()) {
    const FrequencyBand single(frequency_hz, frequency_hz, frequency_hz, 1);
    const double reference =
        refine_peak(synthesize_lens_pattern(design.with_offset(0.0), single, grid).center_pattern()).gain_dbi;
    std::vector<ScanPoint> out;
    out.reserve(offsets_m.size());
    for (double offset : offsets_m) {
        const PatternSet set = synthesize_lens_pattern(design.with_offset(offset), single, grid);
        const PeakEstimate peak = refine_peak(set.center_pattern());
        out.push_back({offset, peak.azimuth_deg, reference - peak.gain_dbi});
    }
    return out;
}

} // namespace beamsquint

#endif
