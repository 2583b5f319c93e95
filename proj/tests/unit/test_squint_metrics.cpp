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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

using namespace beamsquint;

namespace {

BeamPattern from_samples(std::vector<double> angles, std::vector<double> gains) {
    const double step = angles[1] - angles[0];
    return BeamPattern(28.5e9, AzimuthGrid(angles.front(), angles.back(), step), std::move(gains));
}

// Parabola in dB peaking at (peak_az, peak_db) with the given -3 dB width.
BeamPattern parabolic_beam(double frequency_hz, double peak_az, double peak_db, double hpbw, const AzimuthGrid& grid) {
    std::vector<double> g(grid.point_count());
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double x = (grid.angle(i) - peak_az) / hpbw;
        g[i] = peak_db - 12.0 * x * x;
    }
    return BeamPattern(frequency_hz, grid, std::move(g));
}

// Reference KPI rows rebuilt as parabolic beams with HPBW 14.0 deg.
PatternSet reference_set() {
    const AzimuthGrid grid(0.0, 20.0, 0.01);
    std::vector<BeamPattern> ps{parabolic_beam(27.5e9, 9.52, -6.9, 14.0, grid),
                                parabolic_beam(28.5e9, 9.26, -7.5, 14.0, grid),
                                parabolic_beam(29.5e9, 9.34, -6.9, 14.0, grid)};
    return PatternSet(ps, FrequencyBand::demo_band());
}

} // namespace

TEST(RefinePeak, SymmetricNeighbours) {
    const auto pk = refine_peak(from_samples({8.5, 9.0, 9.5, 10.0, 10.5}, {-8.0, -7.0, -6.8, -7.0, -8.0}));
    EXPECT_DOUBLE_EQ(pk.azimuth_deg, 9.5);
    EXPECT_DOUBLE_EQ(pk.gain_dbi, -6.8);
    EXPECT_FALSE(pk.degenerate);
}

TEST(RefinePeak, ThreePointVertex) {
    const auto pk = refine_peak(from_samples({8.5, 9.0, 9.5, 10.0, 10.5}, {-8.0, -7.0, -6.8, -6.9, -8.0}));
    // 9.5 + 0.5 * 0.5*(y0-y2)/(y0-2y1+y2) with y = (-7.0, -6.8, -6.9)
    const double expected = 9.5 + 0.5 * (0.5 * (-7.0 - -6.9) / (-7.0 - 2 * -6.8 + -6.9));
    EXPECT_NEAR(pk.azimuth_deg, expected, 1e-12);
    EXPECT_NEAR(pk.azimuth_deg, 9.583, 5e-4);
}

TEST(RefinePeak, ErrorsAndPlateaus) {
    try {
        refine_peak(from_samples({0, 1, 2, 3}, {-1, -1, -1, -1}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::validation);
    }
    try {
        refine_peak(from_samples({0, 1, 2, 3}, {0, -1, -2, -3}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::boundary);
    }
    const auto plateau = refine_peak(from_samples({0, 1, 2, 3, 4, 5}, {-5, 0, 0, 0, -4, -6}));
    EXPECT_TRUE(plateau.degenerate);
    EXPECT_DOUBLE_EQ(plateau.azimuth_deg, 2.0);
    EXPECT_DOUBLE_EQ(plateau.gain_dbi, 0.0);
    EXPECT_THROW(refine_peak(from_samples({0, 1, 2, 3}, {-5, 0, 0, 0})), Error);
}

// Oracle: argmax on a 10x finer grid of the same synthesized array pattern.
TEST(RefinePeak, AgreesWithFineGridArgmax) {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> steer(-40.0, 40.0);
    std::uniform_int_distribution<int> count(4, 64);
    for (int trial = 0; trial < 20; ++trial) {
        ArrayDesign d;
        d.element_count = static_cast<std::size_t>(count(rng));
        d.spacing_m = ArrayDesign::half_wavelength(28.5e9);
        d.steer_deg = steer(rng);
        const FrequencyBand band(27.5e9, 27.5e9, 27.5e9, 1);
        const double lo = std::floor(d.steer_deg) - 5.0;
        const AzimuthGrid coarse(lo, lo + 12.0, 0.01);
        const AzimuthGrid fine(lo, lo + 12.0, 0.001);
        const auto c = synthesize_array_pattern(d, band, coarse).center_pattern();
        const auto f = synthesize_array_pattern(d, band, fine).center_pattern();
        const auto g = f.gain_dbi();
        const auto best = static_cast<std::size_t>(std::max_element(g.begin(), g.end()) - g.begin());
        EXPECT_NEAR(refine_peak(c).azimuth_deg, fine.angle(best), 0.005) << "N=" << d.element_count;
    }
}

TEST(HalfPowerBeamwidth, TriangularPattern) {
    const AzimuthGrid grid(-10, 10, 0.5);
    std::vector<double> g(grid.point_count());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = -std::abs(grid.angle(i));
    EXPECT_NEAR(half_power_beamwidth(BeamPattern(28.5e9, grid, g)), 6.0, 1e-12);
}

TEST(HalfPowerBeamwidth, ClippedPatternIsUndefined) {
    const AzimuthGrid grid(-10, 10, 0.5);
    std::vector<double> g(grid.point_count());
    for (std::size_t i = 0; i < g.size(); ++i) g[i] = -0.1 * std::abs(grid.angle(i));
    try {
        half_power_beamwidth(BeamPattern(28.5e9, grid, g));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::beamwidth_undefined);
    }
}

TEST(HalfPowerBeamwidth, ParabolicBeamWidth) {
    EXPECT_NEAR(half_power_beamwidth(parabolic_beam(28.5e9, 9.26, -7.5, 14.0, AzimuthGrid(0, 20, 0.01))), 14.0, 1e-6);
}

TEST(SquintDeltas, ReferenceRowSigns) {
    const auto d = squint_deltas(reference_set());
    ASSERT_EQ(d.size(), 3u);
    EXPECT_NEAR(d[0].ad_deg, -0.26, 1e-9);
    EXPECT_NEAR(d[0].pd_db, -0.6, 1e-9);
    EXPECT_EQ(d[1].ad_deg, 0.0);
    EXPECT_EQ(d[1].pd_db, 0.0);
    EXPECT_NEAR(d[2].ad_deg, -0.08, 1e-9);
    EXPECT_NEAR(d[2].pd_db, -0.6, 1e-9);
}

TEST(Dpbq, ReferenceValues) {
    EXPECT_NEAR(dpbq(-7.5, -0.6, -0.26, 14.0), 91.98, 0.005);
    EXPECT_NEAR(dpbq(-7.5, -0.6, -0.08, 14.0), 91.99, 0.03);
    EXPECT_EQ(dpbq(-7.5, 0.0, 0.0, 14.0), 100.0);
    // (20 - 1) / 20 * sinc(0.06238) * 100
    EXPECT_NEAR(dpbq(20.0, 1.0, 1.0, 10.0), 94.39, 0.005);
}

// Pre-build oracle: invert the 27.5 GHz row for HPBW by bisection.
TEST(Dpbq, ReferenceBeamwidthInversion) {
    double lo = 5.0;
    double hi = 40.0;
    for (int i = 0; i < 100; ++i) {
        const double mid = 0.5 * (lo + hi);
        (dpbq(-7.5, -0.6, -0.26, mid) < 91.98 ? lo : hi) = mid;
    }
    EXPECT_NEAR(lo, 14.0, 0.15);
}

TEST(Dpbq, SingularAtZeroGain) {
    try {
        dpbq(0.0, 0.0, 0.1, 10.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::singularity);
    }
    EXPECT_NO_THROW(dpbq(0.0, 0.0, 0.1, 10.0, {SincKind::normalized, GainDomain::linear}));
    EXPECT_THROW(dpbq(10.0, 0.0, 0.1, 0.0), Error);
}

TEST(Dpbq, AlternativeConventions) {
    const double x = dpbq_sinc_scale * 1.0 / 10.0;
    EXPECT_NEAR(dpbq(20.0, 1.0, 1.0, 10.0, {SincKind::unnormalized, GainDomain::decibel}), 95.0 * std::sin(x) / x, 1e-12);
    // linear domain: (G - PD) / G is the power ratio 10^(-PD/10)
    const double s = std::sin(std::numbers::pi * x) / (std::numbers::pi * x);
    EXPECT_NEAR(dpbq(20.0, 1.0, 1.0, 10.0, {SincKind::normalized, GainDomain::linear}), std::pow(10.0, -0.1) * s * 100.0,
                1e-9);
}

TEST(Dpbq, IdentityAndMonotoneInBeamwidth) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> gain(-30.0, 30.0);
    std::uniform_real_distribution<double> width(0.1, 60.0);
    std::uniform_real_distribution<double> ad(-5.0, 5.0);
    std::uniform_real_distribution<double> pd(-3.0, 3.0);
    for (int trial = 0; trial < 1000; ++trial) {
        double g = gain(rng);
        if (g == 0.0) g = 1.0;
        EXPECT_EQ(dpbq(g, 0.0, 0.0, width(rng)), 100.0);
        const double a = ad(rng);
        const double p = pd(rng);
        const double h1 = width(rng);
        const double h2 = h1 + width(rng);
        // stay inside the sinc main lobe
        if (dpbq_sinc_scale * std::abs(a) / h1 >= 1.0) continue;
        const double factor = std::abs(sinc(dpbq_sinc_scale * a / h1, SincKind::normalized));
        EXPECT_GT(factor, 0.0);
        EXPECT_LE(factor, 1.0);
        if (g == p) continue;
        const double d1 = dpbq(g, p, a, h1) * g / (g - p);
        const double d2 = dpbq(g, p, a, h2) * g / (g - p);
        EXPECT_LE(d1, d2 + 1e-9);
    }
}

TEST(KpiTable, ReproducesReferenceRows) {
    const auto rows = kpi_table(reference_set());
    ASSERT_EQ(rows.size(), 3u);
    const double ad[] = {-0.26, 0.0, -0.08};
    const double pd[] = {-0.6, 0.0, -0.6};
    const double dp[] = {91.98, 100.0, 91.99};
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(rows[i].ad_deg, ad[i], 0.005);
        EXPECT_NEAR(rows[i].pd_db, pd[i], 0.005);
        EXPECT_NEAR(rows[i].dpbq_percent, dp[i], 0.03);
        EXPECT_NEAR(rows[i].hpbw_deg, 14.0, 1e-6);
    }
    EXPECT_EQ(rows[1].ad_deg, 0.0);
    EXPECT_EQ(rows[1].pd_db, 0.0);
    EXPECT_EQ(rows[1].dpbq_percent, 100.0);
}

TEST(KpiTable, SingleFrequencyIsIdentityRow) {
    const AzimuthGrid grid(0.0, 20.0, 0.01);
    const PatternSet set({parabolic_beam(28.5e9, 9.26, -7.5, 14.0, grid)}, FrequencyBand(28.5e9, 28.5e9, 28.5e9, 1));
    const auto rows = kpi_table(set);
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].ad_deg, 0.0);
    EXPECT_EQ(rows[0].pd_db, 0.0);
    EXPECT_EQ(rows[0].dpbq_percent, 100.0);
}

TEST(KpiTable, TrueTimeDelayHasNoAngleDistortion) {
    ArrayDesign d;
    d.element_count = 16;
    d.spacing_m = ArrayDesign::half_wavelength(28.5e9);
    d.steer_deg = 30.0;
    d.element_exponent = 0.0;
    d.weighting = Weighting::true_time_delay;
    for (const KpiRow& r : kpi_table(synthesize_array_pattern(d, FrequencyBand::demo_band(), AzimuthGrid::analysis_default())))
        EXPECT_NEAR(r.ad_deg, 0.0, 0.005);
}

TEST(KpiTable, ConstantOffsetInvariance) {
    const PatternSet base = reference_set();
    std::vector<BeamPattern> shifted;
    for (const BeamPattern& p : base.patterns()) shifted.push_back(p.shifted(3.0));
    const PatternSet moved(shifted, base.band());
    const auto a = kpi_table(base);
    const auto b = kpi_table(moved);
    for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_NEAR(a[i].ad_deg, b[i].ad_deg, 1e-9);
        EXPECT_NEAR(a[i].hpbw_deg, b[i].hpbw_deg, 1e-9);
        EXPECT_NEAR(a[i].pd_db, b[i].pd_db, 1e-9);
    }
    // Gain(CF) enters undifferenced, so decibel-domain DPBQ moves with the offset.
    EXPECT_GT(std::abs(a[0].dpbq_percent - b[0].dpbq_percent), 1.0);
}
