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

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wqdist/report_io.hpp"
#include "wqdist/sweep.hpp"

namespace {

using namespace wqdist;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitCompute = 2;

struct CommonOptions {
    std::string graph;
    std::vector<std::string> errors{"all"};
    std::string metric = "both";
    std::string format = "markdown";
    std::string output;
    int dense_limit = kDefaultDenseLimit;
    double tolerance = kTieTolerance;
    std::uint64_t seed = 0;
};

std::vector<Metric> resolve_metrics(const std::string& name) {
    if (name == "both") return {Metric::bures, Metric::hilbert_schmidt};
    return {parse_metric(name)};
}

void emit(const std::string& output, const std::string& content) {
    if (output.empty()) {
        std::cout << content;
    } else {
        write_file_atomic(output, content);
    }
}

void add_common_flags(CLI::App* cmd, CommonOptions& options) {
    cmd->add_option("--graph", options.graph,
                    "graph preset (line3, ring4, lineN, ringN, gridRxC) or edge-list file")
        ->required();
    cmd->add_option("--errors", options.errors,
                    "error tokens: X1, Y2, Z14, chan3, or \"all\" (default)");
    cmd->add_option("--metric", options.metric, "bures, hilbert_schmidt/hs, or both (default)")
        ->check(CLI::IsMember({"bures", "hilbert_schmidt", "hs", "both"}));
    cmd->add_option("--format", options.format, "json or markdown (default)")
        ->check(CLI::IsMember({"json", "markdown", "md"}));
    cmd->add_option("--output,-o", options.output,
                    "write to file (atomic rename) instead of stdout");
    cmd->add_option("--dense-limit", options.dense_limit, "max qubits for dense conversions");
    cmd->add_option("--tolerance", options.tolerance, "value-grouping / tie tolerance");
    cmd->add_option("--seed", options.seed, "seed for randomized error tokens (chanN)");
}

int run(int argc, char** argv) {
    CLI::App app{"weighted Bures / Hilbert-Schmidt distances of cluster states under local errors"};
    app.require_subcommand(1);

    CommonOptions sweep_options;
    bool self_check = false;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "apply errors to a cluster state and report distances");
    add_common_flags(sweep_cmd, sweep_options);
    sweep_cmd->add_flag("--self-check", self_check,
                        "compare the ideal state against itself (all distances must be 0)");

    std::string marginals_graph;
    std::string marginals_format = "markdown";
    std::string marginals_output;
    CLI::App* marginals_cmd = app.add_subcommand(
        "verify-marginals", "check preset marginals against the built-in reference catalog");
    marginals_cmd->add_option("--graph", marginals_graph, "preset: line3, line4, ring4, line5")
        ->required();
    marginals_cmd->add_option("--format", marginals_format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown", "md"}));
    marginals_cmd->add_option("--output,-o", marginals_output, "write to file instead of stdout");

    int n_max = 6;
    std::string conjecture_metric = "bures";
    std::string conjecture_format = "markdown";
    std::string conjecture_output;
    int conjecture_dense_limit = kDefaultDenseLimit;
    CLI::App* conjecture_cmd = app.add_subcommand(
        "conjecture", "Z-error position profile on line clusters of growing size");
    conjecture_cmd->add_option("--n-max", n_max, "largest line size, 3..10")->required();
    conjecture_cmd->add_option("--metric", conjecture_metric, "bures or hilbert_schmidt/hs")
        ->check(CLI::IsMember({"bures", "hilbert_schmidt", "hs"}));
    conjecture_cmd->add_option("--format", conjecture_format, "json or markdown")
        ->check(CLI::IsMember({"json", "markdown", "md"}));
    conjecture_cmd->add_option("--output,-o", conjecture_output, "write to file instead of stdout");
    conjecture_cmd->add_option("--dense-limit", conjecture_dense_limit,
                               "max qubits for dense conversions");

    CommonOptions partitions_options;
    CLI::App* partitions_cmd = app.add_subcommand(
        "partitions", "debug dump of the per-subset block distance table for one error");
    add_common_flags(partitions_cmd, partitions_options);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (sweep_cmd->parsed()) {
            ExperimentConfig cfg;
            cfg.graph = sweep_options.graph;
            cfg.errors = sweep_options.errors;
            cfg.metrics = resolve_metrics(sweep_options.metric);
            cfg.format = parse_format(sweep_options.format);
            cfg.dense_limit = sweep_options.dense_limit;
            cfg.tolerance = sweep_options.tolerance;
            cfg.seed = sweep_options.seed;
            cfg.self_check = self_check;
            const SweepResult result = run_sweep(cfg);
            emit(sweep_options.output, cfg.format == OutputFormat::json
                                           ? sweep_to_json(result)
                                           : sweep_to_markdown(result));
            return kExitOk;
        }
        if (marginals_cmd->parsed()) {
            const MarginalVerification verification = verify_marginals(marginals_graph);
            emit(marginals_output, parse_format(marginals_format) == OutputFormat::json
                                       ? marginals_to_json(verification)
                                       : marginals_to_markdown(verification));
            return verification.pass ? kExitOk : kExitCompute;
        }
        if (conjecture_cmd->parsed()) {
            const Metric metric = parse_metric(conjecture_metric);
            const auto rows = run_conjecture_sweep(n_max, metric, conjecture_dense_limit);
            emit(conjecture_output, parse_format(conjecture_format) == OutputFormat::json
                                        ? conjecture_to_json(rows, metric)
                                        : conjecture_to_markdown(rows, metric));
            return kExitOk;
        }
        // partitions
        const Graph graph = resolve_graph(partitions_options.graph);
        const std::vector<ErrorSpec> errors =
            resolve_errors(partitions_options.errors, graph.n, partitions_options.seed);
        if (errors.size() != 1) {
            throw config_error("partitions requires exactly one --errors token");
        }
        const PauliSum ideal = cluster_state(graph);
        const PauliSum corrupted = apply_error(ideal, errors.front());
        std::vector<BlockDistanceTable> tables;
        for (Metric metric : resolve_metrics(partitions_options.metric)) {
            tables.push_back(
                block_distance_table(ideal, corrupted, metric, partitions_options.dense_limit));
        }
        const std::string error = error_name(errors.front());
        emit(partitions_options.output,
             parse_format(partitions_options.format) == OutputFormat::json
                 ? block_table_to_json(partitions_options.graph, error, tables)
                 : block_table_to_markdown(partitions_options.graph, error, tables));
        return kExitOk;
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        std::cerr << "compute error: " << e.what() << "\n";
        return kExitCompute;
    }
}

}  // namespace

int main(int argc, char** argv) {
    return run(argc, argv);
}
