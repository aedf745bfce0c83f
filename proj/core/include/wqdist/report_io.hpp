// Copyright 2026 The wqdist Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WQDIST_REPORT_IO_HPP
#define WQDIST_REPORT_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "wqdist/sweep.hpp"

namespace wqdist {

/// Rounds to `digits` significant decimal digits.
double round_sig(double v, int digits = 12);

/// Compact closed form when v is within 1e-12 of p/q, pi*p/q or
/// sqrt(2)*p/q with small q: "1/2", "pi/6", "sqrt2/3", "pi", "0", ...
std::optional<std::string> exact_form(double v);

/// One JSON object {graph, metric, results:[...]} per metric; a sweep over
/// several metrics serializes as an array of such objects. Values carry 12
/// significant digits plus optional "*_exact" strings; the numeric field
/// is authoritative.
std::string sweep_to_json(const SweepResult& result);
/// Inverse of sweep_to_json; value groups are recomputed with `tolerance`.
SweepResult sweep_from_json(const std::string& text, double tolerance = kTieTolerance);

std::string sweep_to_markdown(const SweepResult& result);

std::string marginals_to_json(const MarginalVerification& verification);
std::string marginals_to_markdown(const MarginalVerification& verification);

std::string conjecture_to_json(const std::vector<ConjectureRow>& rows, Metric metric);
std::string conjecture_to_markdown(const std::vector<ConjectureRow>& rows, Metric metric);

std::string block_table_to_json(const std::string& graph_name, const std::string& error,
                                const std::vector<BlockDistanceTable>& tables);
std::string block_table_to_markdown(const std::string& graph_name, const std::string& error,
                                    const std::vector<BlockDistanceTable>& tables);

/// Writes to a temp file in the target directory and renames on success,
/// so a failure never leaves a partial output file.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace wqdist

#endif  // WQDIST_REPORT_IO_HPP
