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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>

#include "wqdist/marginal_catalog.hpp"
#include "wqdist/report_io.hpp"
#include "wqdist/sweep.hpp"

using namespace wqdist;

namespace {

std::set<std::string> group_errors(const SweepResult& result, const MetricSweep& sweep,
                                   std::size_t group) {
    std::set<std::string> names;
    for (int index : sweep.groups.at(group).error_indices) {
        names.insert(result.errors[index]);
    }
    return names;
}

}  // namespace

TEST_CASE("sweep over line3 reproduces the reference Bures groups") {
    ExperimentConfig cfg;
    cfg.graph = "line3";
    cfg.metrics = {Metric::bures};
    const SweepResult result = run_sweep(cfg);
    REQUIRE(result.errors.size() == 9);
    const MetricSweep& sweep = result.per_metric.front();
    REQUIRE(sweep.groups.size() == 2);
    CHECK(sweep.groups[0].value == doctest::Approx(std::numbers::pi / 6).epsilon(1e-9));
    CHECK(sweep.groups[1].value == doctest::Approx(std::numbers::pi / 4).epsilon(1e-9));
    CHECK(group_errors(result, sweep, 0) == std::set<std::string>{"X1", "X3", "Z2"});
    CHECK(group_errors(result, sweep, 1) ==
          std::set<std::string>{"Z1", "Z3", "X2", "Y1", "Y2", "Y3"});
}

TEST_CASE("sweep over line5: weighted Hilbert-Schmidt groups") {
    // The reference table groups Z3 with the 1/3 errors, but its only
    // detecting three-qubit marginals are the two-term (1/8)(I + W) kind
    // with purity 1/4: their HS distance is 1/sqrt2, so the best weighted
    // term through them is (1/sqrt2)/3 and the global block's sqrt2/5 is
    // the true maximum. The other six near errors each flip half of a
    // four-term marginal (purity 1/2, distance 1) and reach 1/3.
    ExperimentConfig cfg;
    cfg.graph = "line5";
    cfg.metrics = {Metric::hilbert_schmidt};
    const SweepResult result = run_sweep(cfg);
    const MetricSweep& sweep = result.per_metric.front();
    REQUIRE(sweep.groups.size() == 3);
    CHECK(sweep.groups[0].value == doctest::Approx(std::numbers::sqrt2 / 5).epsilon(1e-9));
    CHECK(sweep.groups[1].value == doctest::Approx(1.0 / 3).epsilon(1e-9));
    CHECK(sweep.groups[2].value == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(group_errors(result, sweep, 0) == std::set<std::string>{"Z3"});
    CHECK(group_errors(result, sweep, 1) ==
          std::set<std::string>{"X1", "X3", "X5", "Z2", "Z4", "Y3"});
    CHECK(group_errors(result, sweep, 2) ==
          std::set<std::string>{"Z1", "Z5", "X2", "X4", "Y1", "Y2", "Y4", "Y5"});
}

TEST_CASE("sweep over line4 reproduces the reference Hilbert-Schmidt groups") {
    ExperimentConfig cfg;
    cfg.graph = "line4";
    cfg.metrics = {Metric::hilbert_schmidt};
    const SweepResult result = run_sweep(cfg);
    const MetricSweep& sweep = result.per_metric.front();
    REQUIRE(sweep.groups.size() == 2);
    CHECK(sweep.groups[0].value == doctest::Approx(std::numbers::sqrt2 / 4).epsilon(1e-9));
    CHECK(sweep.groups[1].value == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(group_errors(result, sweep, 0) == std::set<std::string>{"X1", "X4", "Z2", "Z3"});
}

TEST_CASE("self-check sweep returns zero for both metrics") {
    ExperimentConfig cfg;
    cfg.graph = "line3";
    cfg.errors = {"X1"};
    cfg.self_check = true;
    const SweepResult result = run_sweep(cfg);
    REQUIRE(result.per_metric.size() == 2);
    for (const MetricSweep& sweep : result.per_metric) {
        CHECK(sweep.reports.front().weighted_value == 0.0);
        CHECK(sweep.reports.front().standard_value == 0.0);
    }
}

TEST_CASE("sweep accepts explicit error lists and channel tokens") {
    ExperimentConfig cfg;
    cfg.graph = "line2";
    cfg.errors = {"Z1", "chan2"};
    cfg.metrics = {Metric::bures};
    cfg.seed = 11;
    const SweepResult result = run_sweep(cfg);
    CHECK(result.errors == std::vector<std::string>{"Z1", "chan@2"});
    // Contractivity: the channel-corrupted state cannot be farther than
    // any unitary image.
    CHECK(result.per_metric[0].reports[1].weighted_value <=
          std::numbers::pi / 2 + 1e-9);
}

TEST_CASE("sweep config errors") {
    ExperimentConfig cfg;
    cfg.graph = "line3";
    cfg.errors = {"X9"};
    CHECK_THROWS_AS(run_sweep(cfg), config_error);
    cfg.errors = {};
    CHECK_THROWS_AS(run_sweep(cfg), config_error);
    cfg.errors = {"all"};
    cfg.metrics = {};
    CHECK_THROWS_AS(run_sweep(cfg), config_error);
    cfg.metrics = {Metric::bures};
    cfg.graph = "no_such_file.graph";
    CHECK_THROWS_AS(run_sweep(cfg), config_error);
}

TEST_CASE("sweep compute errors are not config errors") {
    ExperimentConfig cfg;
    cfg.graph = "line4";
    cfg.errors = {"X1"};
    cfg.metrics = {Metric::bures};
    cfg.dense_limit = 3;  // blocks of 4 qubits cannot densify
    CHECK_THROWS(run_sweep(cfg));
    try {
        run_sweep(cfg);
    } catch (const config_error&) {
        FAIL("dense-limit violation must not be a config error");
    } catch (const std::exception&) {
        // expected
    }
}

TEST_CASE("sweep from an edge-list file") {
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "wqdist_test_line3.graph";
    {
        std::ofstream out(path);
        out << "# three-qubit chain\nn 3\n1 2\n2 3\n";
    }
    ExperimentConfig cfg;
    cfg.graph = path.string();
    cfg.errors = {"X1"};
    cfg.metrics = {Metric::bures};
    const SweepResult result = run_sweep(cfg);
    CHECK(result.graph.n == 3);
    CHECK(result.per_metric[0].reports[0].weighted_value ==
          doctest::Approx(std::numbers::pi / 6).epsilon(1e-9));
    std::filesystem::remove(path);
}

TEST_CASE("group_by_value respects the tolerance") {
    const std::vector<double> values = {0.5, 0.5 + 5e-10, 0.75, 0.25};
    const auto groups = group_by_value(values, 1e-9);
    REQUIRE(groups.size() == 3);
    CHECK(groups[0].error_indices == std::vector<int>{3});
    CHECK(groups[1].error_indices == std::vector<int>{0, 1});
    CHECK(groups[2].error_indices == std::vector<int>{2});
}

TEST_CASE("verify_marginals passes for all four presets") {
    for (const std::string preset : {"line3", "line4", "ring4", "line5"}) {
        const MarginalVerification verification = verify_marginals(preset);
        CHECK(verification.pass);
        for (const MarginalCheck& check : verification.checks) {
            CHECK(check.pass);
        }
    }
    CHECK(verify_marginals("line3").checks.size() == 4);
    CHECK(verify_marginals("line5").checks.size() == 26);
    CHECK_THROWS_AS(verify_marginals("line6"), config_error);
}

TEST_CASE("marginal comparison flags a doctored term") {
    const CatalogEntry* entry = find_catalog_entry("line3");
    REQUIRE(entry != nullptr);
    // The global expansion with one sign flipped must not match.
    CatalogMarginal doctored = entry->marginals.front();
    doctored.terms.back().sign *= -1.0;
    const PauliSum wrong = build_catalog_marginal(doctored, entry->n);
    const PauliSum computed = cluster_state(parse_graph_spec("line3"));
    CHECK_FALSE(computed.same_terms(wrong));
}

TEST_CASE("conjecture sweep: central Z errors are closer to the input") {
    const auto rows = run_conjecture_sweep(5, Metric::bures);
    auto value = [&](int n, const std::string& error) {
        for (const ConjectureRow& row : rows) {
            if (row.n == n && row.error == error) return row.weighted;
        }
        FAIL("missing row");
        return 0.0;
    };
    CHECK(value(3, "Z2") < value(3, "Z1") - 1e-9);
    CHECK(value(3, "Z2") < value(3, "Z3") - 1e-9);
    for (const std::string central : {"Z2", "Z3", "Z4"}) {
        CHECK(value(5, central) < value(5, "Z1") - 1e-9);
        CHECK(value(5, central) < value(5, "Z5") - 1e-9);
    }
    for (const ConjectureRow& row : rows) {
        CHECK_FALSE(row.exploratory);  // n <= 5 rows carry reference values
    }
    CHECK_THROWS_AS(run_conjecture_sweep(11, Metric::bures), config_error);
    CHECK_THROWS_AS(run_conjecture_sweep(2, Metric::bures), config_error);
}

TEST_CASE("conjecture sweep marks fresh sizes exploratory") {
    const auto rows = run_conjecture_sweep(6, Metric::hilbert_schmidt);
    bool saw_exploratory = false;
    for (const ConjectureRow& row : rows) {
        if (row.n == 6) {
            CHECK(row.exploratory);
            saw_exploratory = true;
        }
    }
    CHECK(saw_exploratory);
}

TEST_CASE("exact_form recognizes the table constants") {
    CHECK(exact_form(std::numbers::pi / 6).value() == "pi/6");
    CHECK(exact_form(std::numbers::pi / 4).value() == "pi/4");
    CHECK(exact_form(std::numbers::pi / 2).value() == "pi/2");
    CHECK(exact_form(std::numbers::sqrt2).value() == "sqrt2");
    CHECK(exact_form(std::numbers::sqrt2 / 3).value() == "sqrt2/3");
    CHECK(exact_form(std::numbers::sqrt2 / 4).value() == "sqrt2/4");
    CHECK(exact_form(0.5).value() == "1/2");
    CHECK(exact_form(1.0 / 3).value() == "1/3");
    CHECK(exact_form(0.0).value() == "0");
    CHECK_FALSE(exact_form(0.123456789).has_value());
    CHECK_FALSE(exact_form(std::numbers::pi / 6 + 1e-6).has_value());
}

TEST_CASE("round_sig keeps 12 significant digits") {
    CHECK(round_sig(std::numbers::pi) == doctest::Approx(3.14159265359).epsilon(1e-13));
    CHECK(round_sig(0.0) == 0.0);
    CHECK(round_sig(-1.0 / 3.0) == doctest::Approx(-0.333333333333).epsilon(1e-13));
}

TEST_CASE("JSON round trip of a sweep result") {
    ExperimentConfig cfg;
    cfg.graph = "line3";
    const SweepResult result = run_sweep(cfg);
    const std::string text = sweep_to_json(result);
    const SweepResult parsed = sweep_from_json(text);

    CHECK(parsed.graph_name == result.graph_name);
    CHECK(parsed.errors == result.errors);
    REQUIRE(parsed.per_metric.size() == result.per_metric.size());
    for (std::size_t m = 0; m < parsed.per_metric.size(); ++m) {
        const MetricSweep& a = parsed.per_metric[m];
        const MetricSweep& b = result.per_metric[m];
        CHECK(a.metric == b.metric);
        REQUIRE(a.reports.size() == b.reports.size());
        for (std::size_t i = 0; i < a.reports.size(); ++i) {
            CHECK(a.reports[i].weighted_value ==
                  doctest::Approx(b.reports[i].weighted_value).epsilon(1e-10));
            CHECK(a.reports[i].standard_value ==
                  doctest::Approx(b.reports[i].standard_value).epsilon(1e-10));
            CHECK(a.reports[i].optimal_partition == b.reports[i].optimal_partition);
            CHECK(a.reports[i].blocks.size() == b.reports[i].blocks.size());
        }
        REQUIRE(a.groups.size() == b.groups.size());
        for (std::size_t g = 0; g < a.groups.size(); ++g) {
            CHECK(a.groups[g].error_indices == b.groups[g].error_indices);
        }
    }

    // Canonical form: emitting the parsed result reproduces the text.
    CHECK(sweep_to_json(parsed) == text);
}

TEST_CASE("single-metric JSON is one object, multi-metric an array") {
    ExperimentConfig cfg;
    cfg.graph = "line2";
    cfg.errors = {"X1"};
    cfg.metrics = {Metric::bures};
    CHECK(sweep_to_json(run_sweep(cfg)).front() == '{');
    cfg.metrics = {Metric::bures, Metric::hilbert_schmidt};
    CHECK(sweep_to_json(run_sweep(cfg)).front() == '[');
}

TEST_CASE("markdown sweep output contains the reference groupings") {
    auto markdown = [](const char* graph, Metric metric) {
        ExperimentConfig cfg;
        cfg.graph = graph;
        cfg.metrics = {metric};
        return sweep_to_markdown(run_sweep(cfg));
    };

    // Bures rows, group members listed in sweep order.
    const std::string line3 = markdown("line3", Metric::bures);
    CHECK(line3.find("| X1, Z2, X3 |") != std::string::npos);
    CHECK(line3.find("| Y1, Z1, X2, Y2, Y3, Z3 |") != std::string::npos);
    CHECK(line3.find("(pi/6)") != std::string::npos);
    CHECK(line3.find("(pi/4)") != std::string::npos);
    CHECK(line3.find("(pi/2)") != std::string::npos);  // standard column

    const std::string line4 = markdown("line4", Metric::bures);
    CHECK(line4.find("| X1, Z2, Z3, X4 |") != std::string::npos);
    CHECK(line4.find("| Y1, Z1, X2, Y2, X3, Y3, Y4, Z4 |") != std::string::npos);

    const std::string ring4 = markdown("ring4", Metric::bures);
    CHECK(ring4.find("| X1, X2, X3, X4 |") != std::string::npos);
    CHECK(ring4.find("| Y1, Z1, Y2, Z2, Y3, Z3, Y4, Z4 |") != std::string::npos);

    const std::string line5 = markdown("line5", Metric::bures);
    CHECK(line5.find("| X1, Z2, X3, Y3, Z3, Z4, X5 |") != std::string::npos);
    CHECK(line5.find("| Y1, Z1, X2, Y2, X4, Y4, Y5, Z5 |") != std::string::npos);

    // Hilbert-Schmidt rows.
    const std::string line3_hs = markdown("line3", Metric::hilbert_schmidt);
    CHECK(line3_hs.find("| X1, Z2, X3 |") != std::string::npos);
    CHECK(line3_hs.find("(sqrt2/3)") != std::string::npos);
    CHECK(line3_hs.find("(sqrt2)") != std::string::npos);  // standard column

    const std::string line4_hs = markdown("line4", Metric::hilbert_schmidt);
    CHECK(line4_hs.find("| X1, Z2, Z3, X4 |") != std::string::npos);
    CHECK(line4_hs.find("(sqrt2/4)") != std::string::npos);

    const std::string ring4_hs = markdown("ring4", Metric::hilbert_schmidt);
    CHECK(ring4_hs.find("| X1, X2, X3, X4 |") != std::string::npos);

    // line5 HS: Z3 sits in its own sqrt2/5 group (see the group test above).
    const std::string line5_hs = markdown("line5", Metric::hilbert_schmidt);
    CHECK(line5_hs.find("| Z3 |") != std::string::npos);
    CHECK(line5_hs.find("(sqrt2/5)") != std::string::npos);
    CHECK(line5_hs.find("| X1, Z2, X3, Y3, Z4, X5 |") != std::string::npos);
    CHECK(line5_hs.find("| Y1, Z1, X2, Y2, X4, Y4, Y5, Z5 |") != std::string::npos);
}

TEST_CASE("marginal and conjecture emitters produce well-formed output") {
    const MarginalVerification verification = verify_marginals("line3");
    const std::string md = marginals_to_markdown(verification);
    CHECK(md.find("[PASS] marginal {1,2,3}") != std::string::npos);
    CHECK(md.find("result: PASS (4 marginals)") != std::string::npos);
    const std::string js = marginals_to_json(verification);
    CHECK(js.find("\"pass\": true") != std::string::npos);

    const auto rows = run_conjecture_sweep(3, Metric::bures);
    const std::string cmd = conjecture_to_markdown(rows, Metric::bures);
    CHECK(cmd.find("| 3 | Z2 |") != std::string::npos);
    const std::string cjs = conjecture_to_json(rows, Metric::bures);
    CHECK(cjs.find("\"error\": \"Z2\"") != std::string::npos);
}

TEST_CASE("channel error tokens are seed-deterministic across sweeps") {
    ExperimentConfig cfg;
    cfg.graph = "line2";
    cfg.errors = {"chan1"};
    cfg.metrics = {Metric::hilbert_schmidt};
    cfg.seed = 99;
    const double first = run_sweep(cfg).per_metric[0].reports[0].weighted_value;
    const double second = run_sweep(cfg).per_metric[0].reports[0].weighted_value;
    CHECK(first == second);
}

TEST_CASE("sweep_from_json infers the qubit count when the graph is a file path") {
    const std::filesystem::path path =
        std::filesystem::temp_directory_path() / "wqdist_roundtrip.graph";
    {
        std::ofstream out(path);
        out << "n 3\n1 2\n2 3\n";
    }
    ExperimentConfig cfg;
    cfg.graph = path.string();
    cfg.errors = {"X1"};
    cfg.metrics = {Metric::bures};
    const std::string text = sweep_to_json(run_sweep(cfg));
    std::filesystem::remove(path);

    const SweepResult parsed = sweep_from_json(text);
    CHECK(parsed.graph_name == path.string());
    REQUIRE(parsed.per_metric.size() == 1);
    CHECK(parsed.per_metric[0].reports[0].optimal_partition.element_count() == 3);
}

TEST_CASE("write_file_atomic leaves no partial file on failure") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "wqdist_atomic_test";
    fs::create_directories(dir);
    const fs::path target = dir / "out.json";
    write_file_atomic(target.string(), "hello\n");
    std::ifstream in(target);
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(content == "hello\n");

    const fs::path missing = dir / "no_such_subdir" / "out.json";
    CHECK_THROWS(write_file_atomic(missing.string(), "x"));
    CHECK_FALSE(fs::exists(missing));
    fs::remove_all(dir);
}
