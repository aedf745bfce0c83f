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

#include "wqdist/sweep.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "wqdist/marginal_catalog.hpp"

namespace wqdist {

OutputFormat parse_format(std::string_view name) {
    if (name == "json") return OutputFormat::json;
    if (name == "markdown" || name == "md") return OutputFormat::markdown;
    throw config_error("unknown output format \"" + std::string(name) + "\"");
}

Graph resolve_graph(const std::string& spec) {
    if (is_graph_spec(spec)) {
        try {
            return parse_graph_spec(spec);
        } catch (const std::exception& e) {
            throw config_error(e.what());
        }
    }
    std::ifstream file(spec);
    if (!file) {
        throw config_error("graph \"" + spec +
                           "\" is neither a known preset nor a readable edge-list file");
    }
    try {
        return parse_edge_list(file);
    } catch (const std::exception& e) {
        throw config_error("graph file \"" + spec + "\": " + e.what());
    }
}

std::vector<ErrorSpec> resolve_errors(const std::vector<std::string>& tokens, int n,
                                      std::uint64_t seed) {
    std::vector<ErrorSpec> out;
    for (const std::string& token : tokens) {
        if (token == "all") {
            auto paulis = all_single_qubit_paulis(n);
            out.insert(out.end(), paulis.begin(), paulis.end());
            continue;
        }
        try {
            out.push_back(parse_error_token(token, n, seed));
        } catch (const std::exception& e) {
            throw config_error(std::string("error token \"") + token + "\": " + e.what());
        }
    }
    if (out.empty()) {
        throw config_error("no errors requested");
    }
    return out;
}

std::vector<ValueGroup> group_by_value(const std::vector<double>& values, double tolerance) {
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return values[a] < values[b]; });
    std::vector<ValueGroup> groups;
    for (int index : order) {
        if (groups.empty() || values[index] - groups.back().value > tolerance) {
            groups.push_back(ValueGroup{values[index], {}});
        }
        groups.back().error_indices.push_back(index);
    }
    // Sweep-order membership within each group.
    for (ValueGroup& group : groups) {
        std::sort(group.error_indices.begin(), group.error_indices.end());
    }
    return groups;
}

SweepResult run_sweep(const ExperimentConfig& cfg) {
    if (cfg.metrics.empty()) {
        throw config_error("at least one metric is required");
    }
    SweepResult result;
    result.graph_name = cfg.graph;
    result.graph = resolve_graph(cfg.graph);

    const std::vector<ErrorSpec> errors = resolve_errors(cfg.errors, result.graph.n, cfg.seed);
    for (const ErrorSpec& e : errors) result.errors.push_back(error_name(e));

    const PauliSum ideal = cluster_state(result.graph);
    for (Metric metric : cfg.metrics) {
        MetricSweep sweep;
        sweep.metric = metric;
        for (const ErrorSpec& e : errors) {
            const PauliSum corrupted = cfg.self_check ? ideal : apply_error(ideal, e);
            sweep.reports.push_back(
                weighted_distance(ideal, corrupted, metric, cfg.dense_limit, cfg.tolerance));
        }
        std::vector<double> values;
        values.reserve(sweep.reports.size());
        for (const DistanceReport& r : sweep.reports) values.push_back(r.weighted_value);
        sweep.groups = group_by_value(values, cfg.tolerance);
        result.per_metric.push_back(std::move(sweep));
    }
    return result;
}

MarginalVerification verify_marginals(const std::string& preset) {
    const CatalogEntry* entry = find_catalog_entry(preset);
    if (entry == nullptr) {
        throw config_error("no marginal catalog for preset \"" + preset +
                           "\" (known: line3, line4, ring4, line5)");
    }
    MarginalVerification verification;
    verification.preset = preset;
    verification.pass = true;

    const PauliSum state = cluster_state(parse_graph_spec(preset));
    for (const CatalogMarginal& marginal : entry->marginals) {
        MarginalCheck check;
        check.qubits = marginal.keep;
        const PauliSum computed = partial_trace(state, marginal.keep);
        const PauliSum expected = build_catalog_marginal(marginal, entry->n);
        check.pass = computed.same_terms(expected);
        if (!check.pass) {
            std::ostringstream detail;
            detail << "expected " << expected.str() << " but computed " << computed.str();
            check.detail = detail.str();
            verification.pass = false;
        }
        verification.checks.push_back(std::move(check));
    }
    return verification;
}

std::vector<ConjectureRow> run_conjecture_sweep(int n_max, Metric metric, int dense_limit) {
    if (n_max < 3 || n_max > 10) {
        throw config_error("conjecture sweep requires 3 <= n_max <= 10, got " +
                           std::to_string(n_max));
    }
    std::vector<ConjectureRow> rows;
    for (int n = 3; n <= n_max; ++n) {
        const PauliSum ideal = cluster_state(line_graph(n));
        for (int q = 1; q <= n; ++q) {
            const ErrorSpec error = PauliError{'Z', q};
            const DistanceReport report =
                weighted_distance(ideal, apply_error(ideal, error), metric, dense_limit);
            ConjectureRow row;
            row.n = n;
            row.error = error_name(error);
            row.weighted = report.weighted_value;
            row.block_count = report.optimal_partition.block_count();
            for (const auto& block : report.optimal_partition.blocks) {
                row.max_block = std::max(row.max_block, static_cast<int>(block.size()));
            }
            row.exploratory = n > 5;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

}  // namespace wqdist
