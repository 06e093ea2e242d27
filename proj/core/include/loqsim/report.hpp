// Copyright 2026 The loqsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LOQSIM_REPORT_HPP
#define LOQSIM_REPORT_HPP

#include <string>
#include <vector>

#include "loqsim/cascade.hpp"
#include "loqsim/conformance.hpp"
#include "loqsim/protocol.hpp"

namespace loqsim {

/// Version tag stamped on every JSON report.
inline constexpr const char *kReportSchemaVersion = "1";

enum class ReportFormat { Json, Csv, Table };

std::string to_string(ReportFormat fmt);
/// Parses "json" / "csv" / "table" (case-insensitive); throws
/// InvalidArgumentError.
ReportFormat report_format_from_string(const std::string &s);

/// Shortest deterministic decimal rendering ("%.12g").
std::string format_double(double value);

/// Optional sampled-count block attached to teleport/budget reports.
struct SampledCounts {
    long long shots = 0;
    std::uint64_t seed = 0;
    /// Counts per record, aligned with the report rows; entries hold the
    /// two identified outcomes then the no-event remainder.
    std::vector<std::array<long long, 3>> per_record;
};

std::string render_teleport(const std::vector<TeleportReport> &records, const NoiseParams &noise,
                            ReportFormat fmt, const SampledCounts *counts = nullptr);

std::string render_budget(const std::vector<TeleportReport> &records, const NoiseParams &noise,
                          ReportFormat fmt);

std::string render_bsm_table(const std::vector<ConformanceRow> &pbs_rows,
                             const std::vector<ConformanceRow> &bs_rows, ReportFormat fmt);

std::string render_hom(const HomScanResult &scan, Interferometer which, double tau_fs,
                       double max_overlap, ReportFormat fmt);

std::string render_cascade(const CascadeResult &result, ReportFormat fmt);

}  // namespace loqsim

#endif  // LOQSIM_REPORT_HPP
