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

#ifndef BEAMSQUINT_ERROR_HPP
#define BEAMSQUINT_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace beamsquint {

/// Category of a failure, reported verbatim in the CLI's machine-readable error object.
enum class ErrorKind {
    validation,
    range,
    domain,
    boundary,
    beamwidth_undefined,
    singularity,
    resolution,
    alignment,
    grid,
    parse,
    schema,
    io,
    usage,
};

inline std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::validation: return "validation";
        case ErrorKind::range: return "range";
        case ErrorKind::domain: return "domain";
        case ErrorKind::boundary: return "boundary";
        case ErrorKind::beamwidth_undefined: return "beamwidth_undefined";
        case ErrorKind::singularity: return "singularity";
        case ErrorKind::resolution: return "resolution";
        case ErrorKind::alignment: return "alignment";
        case ErrorKind::grid: return "grid";
        case ErrorKind::parse: return "parse";
        case ErrorKind::schema: return "schema";
        case ErrorKind::io: return "io";
        case ErrorKind::usage: return "usage";
    }
    return "unknown";
}

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// An out-of-range query; carries the valid interval.
class RangeError : public Error {
public:
    RangeError(const std::string& message, double lower, double upper)
        : Error(ErrorKind::range, message), lower_(lower), upper_(upper) {}

    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }

private:
    double lower_;
    double upper_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column)
        : Error(ErrorKind::parse, message + " (line " + std::to_string(line) + ", column " +
                                      std::to_string(column) + ")"),
          line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

namespace detail {

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

inline void require(bool condition, ErrorKind kind, const std::string& message) {
    if (!condition) fail(kind, message);
}

} // namespace detail

} // namespace beamsquint

#endif
