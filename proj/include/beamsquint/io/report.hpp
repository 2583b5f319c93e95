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

#ifndef BEAMSQUINT_IO_REPORT_HPP
#define BEAMSQUINT_IO_REPORT_HPP

#include "../design_explorer.hpp"
#include "../link_budget.hpp"
#include "../squint_metrics.hpp"
#include "format.hpp"
#include "measurements.hpp"

#include <json.hpp>

#include <cmath>
#include <string>
#include <vector>

namespace beamsquint::io {

inline constexpr std::string_view kpi_header = "frequency_hz,peak_azimuth_deg,peak_gain_dbi,hpbw_deg,ad_deg,pd_db,dpbq_percent";

/// Two-column (x y) series for external plotting; one file per series.
struct PlotSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
    int x_decimals = 2;
    int y_decimals = 2;
};

inline std::string plot_data(const PlotSeries& s) {
    std::string out;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        out += fixed(s.x[i], s.x_decimals);
        out += ' ';
        out += fixed(s.y[i], s.y_decimals);
        out += '\n';
    }
    return out;
}

inline void add_plots(OutputBundle& bundle, const std::vector<PlotSeries>& series) {
    for (const PlotSeries& s : series) bundle["plot/" + s.name + ".dat"] = plot_data(s);
}

// ---- KPI table ----------------------------------------------------------

inline std::string kpi_csv(const std::vector<KpiRow>& rows) {
    std::string out = "# beamsquint-kpi v1\n";
    out += kpi_header;
    out += '\n';
    for (const KpiRow& r : rows) {
        out += fixed(r.frequency_hz, precision::frequency) + ',' + fixed(r.peak_azimuth_deg, precision::angle) + ',' +
               fixed(r.peak_gain_dbi, precision::gain) + ',' + fixed(r.hpbw_deg, precision::angle) + ',' +
               fixed(r.ad_deg, precision::angle) + ',' + fixed(r.pd_db, precision::gain) + ',' +
               fixed(r.dpbq_percent, precision::percent) + '\n';
    }
    return out;
}

inline double rounded(double value, int decimals) {
    const double scale = std::pow(10.0, decimals);
    const double r = std::round(value * scale) / scale;
    return r == 0.0 ? 0.0 : r;
}

/// Columns in reporting order (frequency, azimuth, power, AD, PD, DPBQ) plus HPBW.
inline std::string kpi_json(const std::vector<KpiRow>& rows) {
    nlohmann::ordered_json doc;
    doc["schema"] = "beamsquint-kpi v1";
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const KpiRow& r : rows) {
        nlohmann::ordered_json row;
        row["frequency_hz"] = rounded(r.frequency_hz, precision::frequency);
        row["peak_azimuth_deg"] = rounded(r.peak_azimuth_deg, precision::angle);
        row["peak_gain_dbi"] = rounded(r.peak_gain_dbi, precision::gain);
        row["ad_deg"] = rounded(r.ad_deg, precision::angle);
        row["pd_db"] = rounded(r.pd_db, precision::gain);
        row["dpbq_percent"] = rounded(r.dpbq_percent, precision::percent);
        row["hpbw_deg"] = rounded(r.hpbw_deg, precision::angle);
        list.push_back(row);
    }
    doc["rows"] = list;
    return doc.dump(2) + "\n";
}

inline OutputBundle kpi_outputs(const std::vector<KpiRow>& rows) {
    OutputBundle b;
    b["kpi.csv"] = kpi_csv(rows);
    b["kpi.json"] = kpi_json(rows);
    const auto column = [&](std::string name, double KpiRow::*field, int decimals) {
        PlotSeries s{std::move(name), {}, {}, precision::frequency, decimals};
        for (const KpiRow& r : rows) {
            s.x.push_back(r.frequency_hz);
            s.y.push_back(r.*field);
        }
        return s;
    };
    add_plots(b, {column("kpi_peak_azimuth_deg", &KpiRow::peak_azimuth_deg, precision::angle),
                  column("kpi_peak_gain_dbi", &KpiRow::peak_gain_dbi, precision::gain),
                  column("kpi_hpbw_deg", &KpiRow::hpbw_deg, precision::angle),
                  column("kpi_ad_deg", &KpiRow::ad_deg, precision::angle),
                  column("kpi_pd_db", &KpiRow::pd_db, precision::gain),
                  column("kpi_dpbq_percent", &KpiRow::dpbq_percent, precision::percent)});
    return b;
}

// ---- simulated patterns -------------------------------------------------

inline OutputBundle pattern_outputs(const PatternSet& set) {
    OutputBundle b;
    b["patterns.csv"] = measurements_csv(set);
    std::vector<PlotSeries> series;
    for (const BeamPattern& p : set.patterns()) {
        PlotSeries s{"pattern_" + fixed(p.frequency_hz(), 0), {}, {}, precision::angle + 2, precision::sample_gain};
        const auto g = p.gain_dbi();
        for (std::size_t i = 0; i < g.size(); ++i) {
            s.x.push_back(p.grid().angle(i));
            s.y.push_back(g[i]);
        }
        series.push_back(std::move(s));
    }
    add_plots(b, series);
    return b;
}

// ---- design sweep -------------------------------------------------------

inline std::string design_csv(const std::vector<DesignReport>& reports) {
    std::string out = "# beamsquint-sweep v1\n";
    out += "material,relative_permittivity,loss_tangent,f_over_d,diameter_m,peak_gain_dbi,total_loss_db,max_scan_deg,"
           "band_edge_dpbq_percent\n";
    for (const DesignReport& r : reports) {
        const LensDesign& d = r.design;
        char geometry[160];
        std::snprintf(geometry, sizeof geometry, "%s,%g,%g,%g,%g", d.material.name.c_str(),
                      d.material.relative_permittivity, d.material.loss_tangent, d.f_over_d, d.diameter_m);
        out += geometry;
        out += ',' + fixed(r.peak_gain_dbi, precision::gain) + ',' + fixed(r.total_loss_db, precision::gain + 1) + ',' +
               fixed(r.max_scan_deg, precision::angle) + ',' + fixed(r.band_edge_dpbq_percent, precision::percent) + '\n';
    }
    return out;
}

inline OutputBundle sweep_outputs(const std::vector<DesignReport>& reports, const std::vector<DesignReport>& front) {
    OutputBundle b;
    b["sweep.csv"] = design_csv(reports);
    b["pareto.csv"] = design_csv(front);
    const auto tradeoff = [](std::string name, const std::vector<DesignReport>& rs) {
        PlotSeries s{std::move(name), {}, {}, precision::angle, precision::gain};
        for (const DesignReport& r : rs) {
            s.x.push_back(r.max_scan_deg);
            s.y.push_back(r.peak_gain_dbi);
        }
        return s;
    };
    add_plots(b, {tradeoff("sweep_all", reports), tradeoff("sweep_pareto", front)});
    return b;
}

// ---- link ---------------------------------------------------------------

inline std::string link_csv(const BandThroughput& result, const std::vector<McsScheme>& ladder) {
    std::string out = "# beamsquint-link v1\n";
    out += "subband,center_hz,gain_dbi,snr_db,mcs,bits_per_second,gbps\n";
    for (std::size_t i = 0; i < result.subbands.size(); ++i) {
        const SubbandResult& s = result.subbands[i];
        out += std::to_string(i) + ',' + fixed(s.center_hz, precision::frequency) + ',' + fixed(s.gain_dbi, precision::gain) +
               ',' + fixed(s.snr_db, precision::gain) + ',' + (s.mcs_index ? ladder[*s.mcs_index].name : "none") + ',' +
               fixed(s.bits_per_second, 0) + ',' + fixed(s.bits_per_second / 1e9, 3) + '\n';
    }
    out += "total,,,,," + fixed(result.total_bits_per_second, 0) + ',' + fixed(result.total_bits_per_second / 1e9, 2) + '\n';
    return out;
}

inline OutputBundle link_outputs(const BandThroughput& result, const std::vector<McsScheme>& ladder) {
    OutputBundle b;
    b["link.csv"] = link_csv(result, ladder);
    PlotSeries tp{"link_throughput_gbps", {}, {}, precision::frequency, 3};
    PlotSeries snr{"link_snr_db", {}, {}, precision::frequency, precision::gain};
    for (const SubbandResult& s : result.subbands) {
        tp.x.push_back(s.center_hz);
        tp.y.push_back(s.bits_per_second / 1e9);
        snr.x.push_back(s.center_hz);
        snr.y.push_back(s.snr_db);
    }
    add_plots(b, {tp, snr});
    return b;
}

} // namespace beamsquint::io

#endif
