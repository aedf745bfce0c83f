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

#ifndef WQDIST_SWEEP_HPP
#define WQDIST_SWEEP_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wqdist/error_channel.hpp"
#include "wqdist/graph_state.hpp"
#include "wqdist/weighted.hpp"

namespace wqdist {

/// Bad user input (flags, files, tokens) as opposed to a failed
/// computation. The CLI maps these to exit code 1, everything else to 2.
struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { json, markdown };

OutputFormat parse_format(std::string_view name);

struct ExperimentConfig {
    /// Preset/generator spec ("line3", "ring4", "grid2x3") or an edge-list
    /// file path.
    std::string graph;
    /// Error tokens ("X1", "chan2") or "all" for the 3n single-qubit Paulis.
    std::vector<std::string> errors{"all"};
    std::vector<Metric> metrics{Metric::bures, Metric::hilbert_schmidt};
    OutputFormat format = OutputFormat::markdown;
    int dense_limit = kDefaultDenseLimit;
    double tolerance = kTieTolerance;
    std::uint64_t seed = 0;
    /// Diagnostic mode: compare the state against itself instead of the
    /// corrupted state; all distances must come out zero.
    bool self_check = false;
};

struct ValueGroup {
    double value = 0.0;
    std::vector<int> error_indices;  // into SweepResult::errors, sweep order
};

struct MetricSweep {
    Metric metric = Metric::bures;
    std::vector<DistanceReport> reports;  // aligned with SweepResult::errors
    std::vector<ValueGroup> groups;       // ascending value
};

struct SweepResult {
    std::string graph_name;
    Graph graph;
    std::vector<std::string> errors;
    std::vector<MetricSweep> per_metric;
};

/// Resolves a graph spec: named preset/generator first, then an edge-list
/// file path. Throws config_error when neither works.
Graph resolve_graph(const std::string& spec);

/// Expands error tokens ("all" or explicit list) against graph size n.
std::vector<ErrorSpec> resolve_errors(const std::vector<std::string>& tokens, int n,
                                      std::uint64_t seed);

/// Groups indices whose values agree within `tolerance`, ascending.
std::vector<ValueGroup> group_by_value(const std::vector<double>& values, double tolerance);

SweepResult run_sweep(const ExperimentConfig& cfg);

struct MarginalCheck {
    std::vector<int> qubits;
    bool pass = false;
    std::string detail;  // mismatch description, empty when passing
};

struct MarginalVerification {
    std::string preset;
    bool pass = false;
    std::vector<MarginalCheck> checks;
};

/// Compares every computed marginal of the preset cluster state against
/// the reference catalog, term for term. Presets: line3, line4, ring4,
/// line5.
MarginalVerification verify_marginals(const std::string& preset);

struct ConjectureRow {
    int n = 0;
    std::string error;
    double weighted = 0.0;
    int block_count = 0;
    int max_block = 0;
    /// True when the row has no reference value and is fresh output.
    bool exploratory = false;
};

/// Weighted distance of every Z_i error on line(n) for n = 3..n_max.
/// n_max <= 10.
std::vector<ConjectureRow> run_conjecture_sweep(int n_max, Metric metric,
                                                int dense_limit = kDefaultDenseLimit);

}  // namespace wqdist

#endif  // WQDIST_SWEEP_HPP
