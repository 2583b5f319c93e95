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

#include "beamsquint/array_engine.hpp"
#include "beamsquint/squint_metrics.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace beamsquint;

namespace {

ArrayDesign ula(std::size_t n, double steer, Weighting w = Weighting::phase_shifter_at_cf, double q = 0.0) {
    ArrayDesign d;
    d.element_count = n;
    d.spacing_m = ArrayDesign::half_wavelength(28.5e9);
    d.steer_deg = steer;
    d.weighting = w;
    d.element_exponent = q;
    return d;
}

// Expected beam direction of a phase-shifter array: sin(theta) = (fc / f) sin(theta0).
double squint_law_deg(double fc, double f, double steer) {
    return rad_to_deg(std::asin(fc / f * std::sin(deg_to_rad(steer))));
}

// Half-power half-width of the normalized Dirichlet kernel at broadside, by bisection on theta.
double dirichlet_hpbw_deg(std::size_t n) {
    const double target = std::pow(10.0, -3.0 / 20.0);
    const auto mag = [n](double theta) {
        const double psi = std::numbers::pi * std::sin(theta);
        return std::abs(std::sin(n * psi / 2.0) / (static_cast<double>(n) * std::sin(psi / 2.0)));
    };
    double lo = 1e-9;
    double hi = 1.0 / static_cast<double>(n);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (mag(mid) > target ? lo : hi) = mid;
    }
    return 2.0 * rad_to_deg(lo);
}

} // namespace

TEST(ElementWeights, UnitMagnitude) {
    for (Weighting w : {Weighting::phase_shifter_at_cf, Weighting::true_time_delay})
        for (const auto& x : element_weights(ula(64, 37.0, w), 28.5e9, 29.5e9)) EXPECT_NEAR(std::abs(x), 1.0, 1e-12);
}

TEST(ElementWeights, PhaseShifterIgnoresEvaluationFrequency) {
    EXPECT_EQ(element_weights(ula(8, 20.0), 28.5e9, 27.5e9), element_weights(ula(8, 20.0), 28.5e9, 29.5e9));
    const auto ttd = ula(8, 20.0, Weighting::true_time_delay);
    EXPECT_NE(element_weights(ttd, 28.5e9, 27.5e9), element_weights(ttd, 28.5e9, 29.5e9));
}

TEST(ArrayDesign, RejectsInvalidDesigns) {
    ArrayDesign d = ula(16, 0.0);
    d.element_count = 0;
    EXPECT_THROW(d.validate(), Error);
    d = ula(16, 90.0);
    EXPECT_THROW(d.validate(), Error);
    d = ula(16, 0.0);
    d.spacing_m = 0.0;
    EXPECT_THROW(d.validate(), Error);
}

TEST(ArrayPattern, BroadsideSymmetric) {
    const AzimuthGrid grid = AzimuthGrid::analysis_default();
    const auto set = synthesize_array_pattern(ula(16, 0.0, Weighting::phase_shifter_at_cf, 1.0), FrequencyBand::demo_band(), grid);
    for (const BeamPattern& p : set.patterns()) {
        const auto g = p.gain_dbi();
        for (std::size_t i = 0; i < g.size(); ++i) EXPECT_NEAR(g[i], g[g.size() - 1 - i], 1e-9);
    }
}

TEST(ArrayPattern, CenterPeakMatchesReference) {
    const auto d = ula(16, 30.0);
    const auto set = synthesize_array_pattern(d, FrequencyBand::demo_band(), AzimuthGrid::analysis_default());
    EXPECT_NEAR(refine_peak(set.center_pattern()).gain_dbi, array_reference_gain_dbi(d), 1e-9);
    EXPECT_NEAR(array_reference_gain_dbi(d), 10.0 * std::log10(16.0) + 5.0, 1e-12);
    const auto custom = synthesize_array_pattern(d, FrequencyBand::demo_band(), AzimuthGrid::analysis_default(), 12.5);
    EXPECT_NEAR(refine_peak(custom.center_pattern()).gain_dbi, 12.5, 1e-9);
}

TEST(ArrayPattern, PhaseShifterFollowsSquintLaw) {
    const FrequencyBand band = FrequencyBand::demo_band();
    const AzimuthGrid grid = AzimuthGrid::analysis_default();
    for (std::size_t n : {8u, 16u, 64u}) {
        for (double steer : {10.0, 20.0, 30.0, 45.0}) {
            const auto set = synthesize_array_pattern(ula(n, steer), band, grid);
            for (const BeamPattern& p : set.patterns())
                EXPECT_NEAR(refine_peak(p).azimuth_deg, squint_law_deg(band.center_hz(), p.frequency_hz(), steer), 0.05)
                    << "N=" << n << " steer=" << steer << " f=" << p.frequency_hz();
        }
    }
}

TEST(ArrayPattern, PhaseShifterAngleDistortionSigns) {
    const auto rows = kpi_table(synthesize_array_pattern(ula(16, 30.0), FrequencyBand::demo_band(), AzimuthGrid::analysis_default()));
    // Below the CF the beam moves away from broadside, above it moves toward broadside.
    EXPECT_NEAR(rows[0].peak_azimuth_deg, 31.21, 0.05);
    EXPECT_NEAR(rows[2].peak_azimuth_deg, 28.88, 0.05);
    EXPECT_LT(rows[0].ad_deg, 0.0);
    EXPECT_GT(rows[2].ad_deg, 0.0);
    EXPECT_EQ(rows[1].dpbq_percent, 100.0);
}

TEST(ArrayPattern, TrueTimeDelayHoldsPointing) {
    const FrequencyBand band = FrequencyBand::demo_band(5);
    for (double steer : {10.0, 30.0, 45.0}) {
        const auto rows = kpi_table(synthesize_array_pattern(ula(16, steer, Weighting::true_time_delay), band,
                                                             AzimuthGrid::analysis_default()));
        for (const KpiRow& r : rows) {
            EXPECT_NEAR(r.peak_azimuth_deg, steer, 0.01);
            EXPECT_NEAR(r.ad_deg, 0.0, 0.005);
        }
    }
}

TEST(ArrayPattern, BroadsideBeamwidthMatchesDirichletKernel) {
    const FrequencyBand cf(28.5e9, 28.5e9, 28.5e9, 1);
    const double hpbw = half_power_beamwidth(
        synthesize_array_pattern(ula(16, 0.0), cf, AzimuthGrid::analysis_default()).center_pattern());
    EXPECT_NEAR(hpbw, dirichlet_hpbw_deg(16), 0.02);
    EXPECT_NEAR(hpbw, 6.35, 0.05);
}

TEST(ArrayPattern, BeamwidthShrinksWithAperture) {
    const FrequencyBand cf(28.5e9, 28.5e9, 28.5e9, 1);
    const AzimuthGrid grid(-60.0, 60.0, 0.005);
    double previous = 1e9;
    for (std::size_t n : {8u, 16u, 32u, 64u}) {
        const double hpbw = half_power_beamwidth(synthesize_array_pattern(ula(n, 0.0), cf, grid).center_pattern());
        EXPECT_LT(hpbw, previous);
        EXPECT_NEAR(hpbw, dirichlet_hpbw_deg(n), 0.02) << "N=" << n;
        previous = hpbw;
    }
}

TEST(ArrayPattern, SingleElementWithoutTaperIsConstant) {
    const FrequencyBand cf(28.5e9, 28.5e9, 28.5e9, 1);
    EXPECT_THROW(synthesize_array_pattern(ula(1, 0.0), cf, AzimuthGrid::analysis_default()), Error);
}
