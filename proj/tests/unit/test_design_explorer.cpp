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

#include "beamsquint/design_explorer.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace beamsquint;

namespace {

DesignReport point(double gain, double scan) {
    DesignReport r;
    r.peak_gain_dbi = gain;
    r.max_scan_deg = scan;
    return r;
}

// Brute force: keep every report that no other report beats on both axes.
std::vector<std::pair<double, double>> brute_front(const std::vector<DesignReport>& all) {
    std::vector<std::pair<double, double>> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        bool beaten = false;
        for (std::size_t j = 0; j < all.size() && !beaten; ++j) {
            const bool ge = all[j].peak_gain_dbi >= all[i].peak_gain_dbi && all[j].max_scan_deg >= all[i].max_scan_deg;
            const bool gt = all[j].peak_gain_dbi > all[i].peak_gain_dbi || all[j].max_scan_deg > all[i].max_scan_deg;
            beaten = ge && gt;
        }
        if (!beaten) out.emplace_back(all[i].peak_gain_dbi, all[i].max_scan_deg);
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

TEST(Pareto, MatchesBruteForceOracle) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> gain(10.0, 30.0);
    std::uniform_real_distribution<double> scan(0.0, 40.0);
    std::uniform_int_distribution<int> coarse(0, 5);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<DesignReport> all;
        for (int i = 0; i < 100; ++i) {
            // mix continuous and coarse values so ties occur
            if (trial % 2 == 0)
                all.push_back(point(gain(rng), scan(rng)));
            else
                all.push_back(point(20.0 + coarse(rng), 10.0 * coarse(rng)));
        }
        const auto front = pareto_front(all);
        std::vector<std::pair<double, double>> got;
        for (const DesignReport& r : front) got.emplace_back(r.peak_gain_dbi, r.max_scan_deg);
        for (std::size_t i = 1; i < front.size(); ++i) EXPECT_GE(front[i - 1].peak_gain_dbi, front[i].peak_gain_dbi);
        std::sort(got.begin(), got.end());
        ASSERT_EQ(got, brute_front(all));
        for (const DesignReport& a : front)
            for (const DesignReport& b : front) EXPECT_FALSE(dominates(a, b));
    }
}

TEST(Pareto, Idempotent) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<DesignReport> all;
    for (int i = 0; i < 200; ++i) all.push_back(point(u(rng), u(rng)));
    const auto once = pareto_front(all);
    EXPECT_EQ(pareto_front(once), once);
}

TEST(Pareto, EmptyInputRejected) { EXPECT_THROW(pareto_front({}), Error); }

TEST(Pareto, DominanceIsStrict) {
    EXPECT_TRUE(dominates(point(2, 2), point(1, 2)));
    EXPECT_FALSE(dominates(point(2, 2), point(2, 2)));
    EXPECT_FALSE(dominates(point(2, 1), point(1, 2)));
    EXPECT_EQ(pareto_front({point(2, 2), point(2, 2)}).size(), 2u);
}

TEST(Materials, CatalogLookupAndFallback) {
    EXPECT_EQ(material_for_permittivity(2.25, 1e-3).name, "polyethylene");
    EXPECT_EQ(material_for_permittivity(2.25, 1e-3).loss_tangent, 3e-4);
    const Material m = material_for_permittivity(4.0, 1e-3);
    EXPECT_EQ(m.name, "er=4");
    EXPECT_EQ(m.loss_tangent, 1e-3);
}

TEST(SweepSpec, Validation) {
    SweepSpec s;
    s.permittivity_values.clear();
    EXPECT_THROW(s.validate(), Error);
    s = SweepSpec{};
    s.f_over_d_values = {0.7, -1.0};
    EXPECT_THROW(s.validate(), Error);
    s = SweepSpec{};
    s.scan_loss_limit_db = 0.0;
    EXPECT_THROW(s.validate(), Error);
}

TEST(Explorer, LowerFocalRatioScansFurther) {
    SweepSpec s;
    s.f_over_d_values = {0.5, 0.7, 0.9};
    const auto reports = sweep(s);
    ASSERT_EQ(reports.size(), 3u);
    EXPECT_GT(reports[0].max_scan_deg, reports[1].max_scan_deg);
    EXPECT_GT(reports[1].max_scan_deg, reports[2].max_scan_deg);
    EXPECT_LT(reports[0].peak_gain_dbi, reports[2].peak_gain_dbi);
    for (const DesignReport& r : reports) {
        EXPECT_LT(r.total_loss_db, 0.0);
        EXPECT_GT(r.band_edge_dpbq_percent, 90.0);
        EXPECT_EQ(r.design.material.name, "polyethylene");
    }
    EXPECT_EQ(reports[1].design.f_over_d, 0.7);
}

TEST(Explorer, HigherPermittivityCostsGain) {
    SweepSpec s;
    s.permittivity_values = {2.25, 6.0};
    const auto reports = sweep(s);
    ASSERT_EQ(reports.size(), 2u);
    EXPECT_LT(reports[1].total_loss_db, reports[0].total_loss_db);
    EXPECT_LT(reports[1].peak_gain_dbi, reports[0].peak_gain_dbi);
}

TEST(Explorer, MaxScanRespectsLossLimit) {
    const LensDesign d;
    const double f = 28.5e9;
    const double tight = max_scan_angle(d, f, 1.0);
    const double loose = max_scan_angle(d, f, 3.0);
    EXPECT_GT(tight, 0.0);
    EXPECT_LE(tight, loose);
}
