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

#ifndef BEAMSQUINT_IO_FORMAT_HPP
#define BEAMSQUINT_IO_FORMAT_HPP

#include "../error.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <system_error>

namespace beamsquint::io {

/// Report precisions: angles to 0.01 deg, gains to 0.1 dB, DPBQ to 0.01 %.
namespace precision {
inline constexpr int angle = 2;
inline constexpr int gain = 1;
inline constexpr int percent = 2;
inline constexpr int frequency = 0;
inline constexpr int sample_gain = 3; ///< raw pattern samples, kept finer so dumps re-ingest cleanly
} // namespace precision

/// Fixed-point text; never prints a negative zero.
inline std::string fixed(double value, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, value);
    std::string s(buf);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
    return s;
}

inline std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) detail::fail(ErrorKind::io, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Named output files, relative to an output directory.
using OutputBundle = std::map<std::string, std::string>;

/*!
 * Writes every file of the bundle to a temporary sibling first and renames
 * them into place only after all temporaries are complete. On failure the
 * temporaries are removed and nothing is left behind.
 */
inline void write_bundle(const std::filesystem::path& dir, const OutputBundle& bundle) {
    namespace fs = std::filesystem;
    std::error_code ec;
    std::vector<std::pair<fs::path, fs::path>> staged;
    const auto cleanup = [&] {
        for (const auto& [tmp, _] : staged) fs::remove(tmp, ec);
    };
    for (const auto& [name, content] : bundle) {
        const fs::path target = dir / name;
        fs::create_directories(target.parent_path(), ec);
        if (ec) {
            cleanup();
            detail::fail(ErrorKind::io, "cannot create directory " + target.parent_path().string());
        }
        fs::path tmp = target;
        tmp += ".tmp";
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (out) out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (out) out.close();
        staged.emplace_back(tmp, target);
        if (!out) {
            cleanup();
            detail::fail(ErrorKind::io, "cannot write " + target.string());
        }
    }
    for (const auto& [tmp, target] : staged) {
        fs::rename(tmp, target, ec);
        if (ec) {
            cleanup();
            detail::fail(ErrorKind::io, "cannot move " + tmp.string() + " into place");
        }
    }
}

} // namespace beamsquint::io

#endif
