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

#include "wqdist/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace wqdist {

namespace {

using nlohmann::json;

constexpr double kExactFormTolerance = 1e-12;
constexpr int kMaxDenominator = 24;

std::string format_sig(double v, int digits = 12) {
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.*g", digits, v);
    return buffer;
}

std::string rational_form(long long p, int q, const char* base) {
    std::string out;
    if (p == 0) return "0";
    if (*base == '\0') {
        out = std::to_string(p);
    } else {
        out = (p == 1) ? std::string(base) : std::to_string(p) + "*" + base;
    }
    if (q != 1) out += "/" + std::to_string(q);
    return out;
}

std::optional<std::string> match_base(double v, double base, const char* label) {
    // Values are reported at 12 significant digits, so the match window has
    // to absorb that rounding for |v| > 1.
    const double tolerance = kExactFormTolerance * std::max(1.0, 4.0 * std::abs(v));
    for (int q = 1; q <= kMaxDenominator; ++q) {
        const long long p = std::llround(v * q / base);
        if (p < 0) continue;
        if (std::abs(v - base * static_cast<double>(p) / q) < tolerance &&
            std::gcd(p, static_cast<long long>(q)) == 1) {
            return rational_form(p, q, label);
        }
    }
    return std::nullopt;
}

json report_to_json(const DistanceReport& report) {
    json blocks = json::array();
    for (const BlockContribution& b : report.blocks) {
        blocks.push_back({{"qubits", b.qubits},
                          {"distance", round_sig(b.distance)},
                          {"weight", round_sig(b.weight)},
                          {"term", round_sig(b.term)}});
    }
    json partition = json::array();
    for (const auto& block : report.optimal_partition.blocks) partition.push_back(block);
    const double standard = round_sig(report.standard_value);
    const double weighted = round_sig(report.weighted_value);
    json out = {{"standard", standard},
                {"weighted", weighted},
                {"optimal_partition", partition},
                {"blocks", blocks}};
    if (auto exact = exact_form(standard)) out["standard_exact"] = *exact;
    if (auto exact = exact_form(weighted)) out["weighted_exact"] = *exact;
    return out;
}

json metric_sweep_to_json(const SweepResult& result, const MetricSweep& sweep) {
    json results = json::array();
    for (std::size_t i = 0; i < sweep.reports.size(); ++i) {
        json entry = report_to_json(sweep.reports[i]);
        entry["error"] = result.errors[i];
        results.push_back(std::move(entry));
    }
    return {{"graph", result.graph_name},
            {"metric", metric_name(sweep.metric)},
            {"results", std::move(results)}};
}

DistanceReport report_from_json(const json& entry, Metric metric, int n) {
    DistanceReport report;
    report.metric = metric;
    report.standard_value = entry.at("standard").get<double>();
    report.weighted_value = entry.at("weighted").get<double>();
    std::vector<std::vector<int>> blocks;
    for (const auto& block : entry.at("optimal_partition")) {
        blocks.push_back(block.get<std::vector<int>>());
    }
    report.optimal_partition = make_partition(n, std::move(blocks));
    for (const auto& b : entry.at("blocks")) {
        BlockContribution contribution;
        contribution.qubits = b.at("qubits").get<std::vector<int>>();
        contribution.distance = b.at("distance").get<double>();
        contribution.weight = b.at("weight").get<double>();
        contribution.term = b.at("term").get<double>();
        report.blocks.push_back(std::move(contribution));
    }
    return report;
}

std::string value_with_exact(double v) {
    const double rounded = round_sig(v);
    std::string out = format_sig(rounded);
    if (auto exact = exact_form(rounded)) out += " (" + *exact + ")";
    return out;
}

std::string join_errors(const std::vector<std::string>& errors, const std::vector<int>& indices) {
    std::string out;
    for (int index : indices) {
        if (!out.empty()) out += ", ";
        out += errors[index];
    }
    return out;
}

}  // namespace

double round_sig(double v, int digits) {
    if (v == 0.0 || !std::isfinite(v)) return v;
    char buffer[48];
    std::snprintf(buffer, sizeof(buffer), "%.*e", digits - 1, v);
    return std::strtod(buffer, nullptr);
}

std::optional<std::string> exact_form(double v) {
    if (!std::isfinite(v) || v < -kExactFormTolerance) return std::nullopt;
    if (auto m = match_base(v, 1.0, "")) return m;
    if (auto m = match_base(v, std::numbers::pi, "pi")) return m;
    if (auto m = match_base(v, std::numbers::sqrt2, "sqrt2")) return m;
    return std::nullopt;
}

std::string sweep_to_json(const SweepResult& result) {
    if (result.per_metric.size() == 1) {
        return metric_sweep_to_json(result, result.per_metric.front()).dump(2) + "\n";
    }
    json out = json::array();
    for (const MetricSweep& sweep : result.per_metric) {
        out.push_back(metric_sweep_to_json(result, sweep));
    }
    return out.dump(2) + "\n";
}

SweepResult sweep_from_json(const std::string& text, double tolerance) {
    json parsed = json::parse(text);
    if (parsed.is_object()) {
        parsed = json::array({parsed});
    }
    SweepResult result;
    bool first = true;
    for (const json& section : parsed) {
        const Metric metric = parse_metric(section.at("metric").get<std::string>());
        if (first) {
            result.graph_name = section.at("graph").get<std::string>();
            if (is_graph_spec(result.graph_name)) {
                result.graph = parse_graph_spec(result.graph_name);
            }
            for (const auto& entry : section.at("results")) {
                result.errors.push_back(entry.at("error").get<std::string>());
            }
            first = false;
        }
        MetricSweep sweep;
        sweep.metric = metric;
        int n = result.graph.n;
        if (n == 0 && !section.at("results").empty()) {
            // Graph unknown (file path): infer size from the first report.
            for (const auto& block :
                 section.at("results").front().at("optimal_partition")) {
                for (int q : block.get<std::vector<int>>()) n = std::max(n, q);
            }
        }
        for (const auto& entry : section.at("results")) {
            sweep.reports.push_back(report_from_json(entry, metric, n));
        }
        std::vector<double> values;
        for (const DistanceReport& r : sweep.reports) values.push_back(r.weighted_value);
        sweep.groups = group_by_value(values, tolerance);
        result.per_metric.push_back(std::move(sweep));
    }
    return result;
}

std::string sweep_to_markdown(const SweepResult& result) {
    std::ostringstream out;
    out << "# Weighted distance sweep\n\n";
    out << "- graph: " << result.graph_name << " (n = " << result.graph.n << ")\n";
    out << "- errors: " << join_errors(result.errors, [&] {
        std::vector<int> all(result.errors.size());
        std::iota(all.begin(), all.end(), 0);
        return all;
    }()) << "\n";

    for (const MetricSweep& sweep : result.per_metric) {
        out << "\n## metric: " << metric_name(sweep.metric) << "\n\n";
        out << "| weighted value | errors |\n|---|---|\n";
        for (const ValueGroup& group : sweep.groups) {
            out << "| " << value_with_exact(group.value) << " | "
                << join_errors(result.errors, group.error_indices) << " |\n";
        }
        out << "\n| error | standard | weighted | optimal partition |";
        const bool bures = sweep.metric == Metric::bures;
        if (bures) out << " min E*t |";
        out << "\n|---|---|---|---|";
        if (bures) out << "---|";
        out << "\n";
        for (std::size_t i = 0; i < sweep.reports.size(); ++i) {
            const DistanceReport& report = sweep.reports[i];
            out << "| " << result.errors[i] << " | " << value_with_exact(report.standard_value)
                << " | " << value_with_exact(report.weighted_value) << " | "
                << report.optimal_partition.str() << " |";
            if (bures) {
                out << " " << format_sig(round_sig(cost_lower_bound(report, result.graph.n)))
                    << " |";
            }
            out << "\n";
        }
    }
    return out.str();
}

std::string marginals_to_json(const MarginalVerification& verification) {
    json checks = json::array();
    for (const MarginalCheck& check : verification.checks) {
        json entry = {{"qubits", check.qubits}, {"pass", check.pass}};
        if (!check.pass) entry["detail"] = check.detail;
        checks.push_back(std::move(entry));
    }
    json out = {{"graph", verification.preset},
                {"pass", verification.pass},
                {"checks", std::move(checks)}};
    return out.dump(2) + "\n";
}

std::string marginals_to_markdown(const MarginalVerification& verification) {
    std::ostringstream out;
    out << "# Marginal verification: " << verification.preset << "\n\n";
    for (const MarginalCheck& check : verification.checks) {
        out << (check.pass ? "[PASS]" : "[FAIL]") << " marginal {";
        for (std::size_t i = 0; i < check.qubits.size(); ++i) {
            if (i) out << ",";
            out << check.qubits[i];
        }
        out << "}";
        if (!check.pass) out << ": " << check.detail;
        out << "\n";
    }
    out << "\nresult: " << (verification.pass ? "PASS" : "FAIL") << " ("
        << verification.checks.size() << " marginals)\n";
    return out.str();
}

std::string conjecture_to_json(const std::vector<ConjectureRow>& rows, Metric metric) {
    json out = {{"metric", metric_name(metric)}, {"rows", json::array()}};
    for (const ConjectureRow& row : rows) {
        json entry = {{"n", row.n},
                      {"error", row.error},
                      {"weighted", round_sig(row.weighted)},
                      {"blocks", row.block_count},
                      {"max_block", row.max_block},
                      {"exploratory", row.exploratory}};
        if (auto exact = exact_form(row.weighted)) entry["weighted_exact"] = *exact;
        out["rows"].push_back(std::move(entry));
    }
    return out.dump(2) + "\n";
}

std::string conjecture_to_markdown(const std::vector<ConjectureRow>& rows, Metric metric) {
    std::ostringstream out;
    out << "# Z-error position sweep on line clusters (" << metric_name(metric) << ")\n\n";
    out << "| n | error | weighted | blocks | max block | status |\n";
    out << "|---|---|---|---|---|---|\n";
    for (const ConjectureRow& row : rows) {
        out << "| " << row.n << " | " << row.error << " | " << value_with_exact(row.weighted)
            << " | " << row.block_count << " | " << row.max_block << " | "
            << (row.exploratory ? "exploratory" : "reference") << " |\n";
    }
    return out.str();
}

std::string block_table_to_json(const std::string& graph_name, const std::string& error,
                                const std::vector<BlockDistanceTable>& tables) {
    json out = {{"graph", graph_name}, {"error", error}, {"tables", json::array()}};
    for (const BlockDistanceTable& table : tables) {
        json rows = json::array();
        for (std::uint32_t mask = 1; mask < (1u << table.n); ++mask) {
            const auto qubits = mask_qubits(mask);
            rows.push_back({{"qubits", qubits},
                            {"distance", round_sig(table.at_mask(mask))},
                            {"weight", round_sig(1.0 / static_cast<double>(qubits.size()))}});
        }
        out["tables"].push_back({{"metric", metric_name(table.metric)}, {"rows", std::move(rows)}});
    }
    return out.dump(2) + "\n";
}

std::string block_table_to_markdown(const std::string& graph_name, const std::string& error,
                                    const std::vector<BlockDistanceTable>& tables) {
    std::ostringstream out;
    out << "# Block distance table: graph " << graph_name << ", error " << error << "\n";
    for (const BlockDistanceTable& table : tables) {
        out << "\n## metric: " << metric_name(table.metric) << "\n\n";
        out << "| qubits | distance | weight | weighted term |\n|---|---|---|---|\n";
        for (std::uint32_t mask = 1; mask < (1u << table.n); ++mask) {
            const auto qubits = mask_qubits(mask);
            const double d = table.at_mask(mask);
            const double w = 1.0 / static_cast<double>(qubits.size());
            out << "| {";
            for (std::size_t i = 0; i < qubits.size(); ++i) {
                if (i) out << ",";
                out << qubits[i];
            }
            out << "} | " << value_with_exact(d) << " | " << format_sig(round_sig(w)) << " | "
                << value_with_exact(d * w) << " |\n";
        }
    }
    return out.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path temp = target;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw config_error("cannot open \"" + temp.string() + "\" for writing");
        }
        out << content;
        out.flush();
        if (!out) {
            std::error_code ec;
            fs::remove(temp, ec);
            throw std::runtime_error("failed writing \"" + temp.string() + "\"");
        }
    }
    std::error_code ec;
    fs::rename(temp, target, ec);
    if (ec) {
        fs::remove(temp, ec);
        throw std::runtime_error("failed renaming temp file onto \"" + path + "\"");
    }
}

}  // namespace wqdist
