// SPDX-License-Identifier: Apache-2.0
//
// relaysim: link-level simulator for dual-hop AF MIMO relay networks
// Copyright (C) 2026 The relaysim authors
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

// Result tables: CSV serialization and a dependency-free SVG line plot.

#ifndef RELAYSIM_REPORT_HPP
#define RELAYSIM_REPORT_HPP

#include <filesystem>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "relaysim/montecarlo.hpp"

namespace relaysim
{

// Shortest decimal text that parses back to exactly `value`.
std::string format_number(double value);

inline constexpr std::string_view kCsvHeader =
    "scheme,axis,axis_value,m,n,k,pnr_db,qnr_db,alpha,trials,seed,capacity_mean_bits,capacity_stderr_bits";

// Header plus one newline-terminated line per row. A missing standard
// error (single trial) is written as an empty field.
void write_csv(std::ostream& out, std::span<const SweepRow> rows);
std::string to_csv(std::span<const SweepRow> rows);

/// SVG document with one polyline per series (in first-appearance order),
/// +/-1 stderr error bars, labelled axes and a legend. Throws
/// std::invalid_argument on an empty table.
std::string render_svg(std::span<const SweepRow> rows, std::string_view title = {});

// render_svg() written to `path`; throws std::runtime_error on I/O failure.
void emit_plot(std::span<const SweepRow> rows, const std::filesystem::path& path, std::string_view title = {});

std::string_view axis_caption(SweepAxis axis) noexcept;

} // namespace relaysim

#endif
