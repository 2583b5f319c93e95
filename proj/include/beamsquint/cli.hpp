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

#ifndef BEAMSQUINT_CLI_HPP
#define BEAMSQUINT_CLI_HPP

#include "array_engine.hpp"
#include "design_explorer.hpp"
#include "io/format.hpp"
#include "io/measurements.hpp"
#include "io/report.hpp"
#include "io/scenario.hpp"
#include "lens_engine.hpp"
#include "link_budget.hpp"
#include "squint_metrics.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace beamsquint::cli {

/// Patterns for the scenario's front end over its band and grid.
inline PatternSet synthesize(const io::Scenario& sc) {
    if (sc.front_end == io::FrontEnd::lens) return synthesize_lens_pattern(*sc.lens, sc.band, sc.grid);
    return synthesize_array_pattern(*sc.array, sc.band, sc.grid);
}

inline std::string error_json(std::string_view kind, std::string_view message) {
    nlohmann::ordered_json doc;
    doc["error"] = {{"kind", std::string(kind)}, {"message", std::string(message)}};
    return doc.dump();
}

namespace impl {

inline void emit(const io::OutputBundle& bundle, const std::string& out_dir, std::ostream& out) {
    io::write_bundle(out_dir, bundle);
    for (const auto& [name, _] : bundle) out << "wrote " << (std::filesystem::path(out_dir) / name).string() << '\n';
}

} // namespace impl

/*!
 * Entry point behind the `beamsquint` executable. args excludes the program
 * name. Returns the process exit status: 0 on success, 1 on a module error,
 * 2 on a usage error. Errors are written to err as one JSON object.
 */
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mmWave beam-squint simulation and KPI analysis", "beamsquint"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string out_dir = ".";
    std::string convention_text;
    std::optional<double> cf_hz;
    bool seedless = false;
    app.add_option("--out", out_dir, "output directory");
    app.add_option("--convention", convention_text, "DPBQ convention: <normalized|unnormalized>,<db|linear>");
    app.add_option("--cf", cf_hz, "center frequency in Hz (ingest-kpi only)");
    app.add_flag("--seedless", seedless, "reserved; rejected");

    std::string input;
    auto* simulate = app.add_subcommand("simulate", "scenario -> pattern CSV");
    auto* kpi = app.add_subcommand("kpi", "scenario -> KPI table");
    auto* sweep_cmd = app.add_subcommand("sweep", "scenario sweep block -> design reports and Pareto subset");
    auto* link = app.add_subcommand("link", "scenario -> per-subband throughput");
    auto* ingest = app.add_subcommand("ingest-kpi", "measurement CSV -> KPI table");
    for (auto* sub : {simulate, kpi, sweep_cmd, link}) sub->add_option("scenario", input, "scenario file")->required();
    ingest->add_option("measurements", input, "measurement CSV")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << error_json("usage", e.what()) << '\n';
        return 2;
    }

    try {
        if (seedless) detail::fail(ErrorKind::usage, "--seedless is reserved: every computation is already deterministic");
        if (cf_hz && !ingest->parsed()) detail::fail(ErrorKind::usage, "--cf applies only to ingest-kpi");
        std::optional<DpbqConvention> convention;
        if (!convention_text.empty()) {
            const auto comma = convention_text.find(',');
            if (comma == std::string::npos)
                detail::fail(ErrorKind::usage, "--convention expects <normalized|unnormalized>,<db|linear>");
            convention = io::parse_convention(convention_text.substr(0, comma), convention_text.substr(comma + 1));
        }

        if (ingest->parsed()) {
            const PatternSet set = io::ingest_measurements(input, cf_hz);
            impl::emit(io::kpi_outputs(kpi_table(set, convention.value_or(DpbqConvention{}))), out_dir, out);
            return 0;
        }

        const io::Scenario sc = io::load_scenario(input);
        const DpbqConvention conv = convention.value_or(sc.dpbq_convention);
        if (simulate->parsed()) {
            impl::emit(io::pattern_outputs(synthesize(sc)), out_dir, out);
        } else if (kpi->parsed()) {
            impl::emit(io::kpi_outputs(kpi_table(synthesize(sc), conv)), out_dir, out);
        } else if (sweep_cmd->parsed()) {
            const auto reports = sweep(sc.sweep_spec(), explorer_grid(), conv);
            impl::emit(io::sweep_outputs(reports, pareto_front(reports)), out_dir, out);
        } else if (link->parsed()) {
            const io::LinkSection section = sc.link.value_or(io::LinkSection{});
            const BandThroughput result =
                band_throughput(synthesize(sc), section.config, section.mcs_table, section.subbands);
            impl::emit(io::link_outputs(result, section.mcs_table), out_dir, out);
            out << "total_throughput_gbps " << io::fixed(result.total_bits_per_second / 1e9, 2) << '\n';
        }
        return 0;
    } catch (const Error& e) {
        err << error_json(to_string(e.kind()), e.what()) << '\n';
        return e.kind() == ErrorKind::usage ? 2 : 1;
    } catch (const std::exception& e) {
        err << error_json("internal", e.what()) << '\n';
        return 1;
    }
}

} // namespace beamsquint::cli

#endif
