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

#include <numbers>

#include "support/test_util.hpp"
#include "wqdist/error_channel.hpp"
#include "wqdist/graph_state.hpp"
#include "wqdist/weighted.hpp"

using namespace wqdist;
using test::Rng;

namespace {

constexpr double kPi = std::numbers::pi;

PauliSum corrupted(const PauliSum& state, const char* word) {
    return conjugate_by_pauli(state, parse_pauli_word(state.qubit_count(), word));
}

}  // namespace

TEST_CASE("block table of an X1 error on the three-qubit line cluster") {
    const PauliSum rho = cluster_state(line_graph(3));
    const BlockDistanceTable table = block_distance_table(rho, corrupted(rho, "X1"), Metric::bures);
    // X1 commutes with every marginal stabilizer: only the global block sees it.
    for (std::uint32_t mask = 1; mask < 7; ++mask) {
        CHECK(table.at_mask(mask) == doctest::Approx(0.0).epsilon(1e-12));
    }
    CHECK(table.at_mask(7) == doctest::Approx(kPi / 2).epsilon(1e-9));
}

TEST_CASE("block table of identical states is all zero") {
    const PauliSum rho = cluster_state(line_graph(3));
    for (Metric metric : {Metric::bures, Metric::hilbert_schmidt}) {
        const BlockDistanceTable table = block_distance_table(rho, rho, metric);
        for (std::uint32_t mask = 1; mask < 8; ++mask) {
            CHECK(table.at_mask(mask) == 0.0);
        }
    }
}

TEST_CASE("block table of a Z1 error on the three-qubit line cluster") {
    const PauliSum rho = cluster_state(line_graph(3));
    const BlockDistanceTable table = block_distance_table(rho, corrupted(rho, "Z1"), Metric::bures);
    // Z1 flips X1Z2 and X1X3: the {1,2} and {1,3} marginals become orthogonal.
    CHECK(table.at({1, 2}) == doctest::Approx(kPi / 2).epsilon(1e-9));
    CHECK(table.at({1, 3}) == doctest::Approx(kPi / 2).epsilon(1e-9));
    CHECK(table.at({2, 3}) == doctest::Approx(0.0).epsilon(1e-12));
    for (int q : {1, 2, 3}) {
        CHECK(table.at({q}) == doctest::Approx(0.0).epsilon(1e-12));
    }
}

TEST_CASE("weighted Bures of an X1 error on line3 is pi/6 with the global partition") {
    const PauliSum rho = cluster_state(line_graph(3));
    const DistanceReport report = weighted_distance(rho, corrupted(rho, "X1"), Metric::bures);
    CHECK(report.weighted_value == doctest::Approx(kPi / 6).epsilon(1e-9));
    CHECK(report.standard_value == doctest::Approx(kPi / 2).epsilon(1e-9));
    CHECK(report.optimal_partition.str() == "{1,2,3}");
    REQUIRE(report.blocks.size() == 1);
    CHECK(report.blocks.front().weight == doctest::Approx(1.0 / 3));
    double total = 0.0;
    for (const auto& b : report.blocks) total += b.term;
    CHECK(report.weighted_value == doctest::Approx(total).epsilon(1e-12));
}

TEST_CASE("weighted Hilbert-Schmidt of a Z2 error on the four-qubit ring is 1/2") {
    const PauliSum rho = cluster_state(ring_graph(4));
    const DistanceReport report =
        weighted_distance(rho, corrupted(rho, "Z2"), Metric::hilbert_schmidt);
    CHECK(report.weighted_value == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(report.standard_value == doctest::Approx(std::numbers::sqrt2).epsilon(1e-9));
}

TEST_CASE("weighted Bures of a Z1 error on the two-qubit edge cluster") {
    const PauliSum rho = cluster_state(line_graph(2));
    const PauliSum sigma = corrupted(rho, "Z1");
    const DistanceReport report = weighted_distance(rho, sigma, Metric::bures);
    CHECK(report.weighted_value == doctest::Approx(kPi / 4).epsilon(1e-9));
    CHECK(report.optimal_partition.str() == "{1,2}");

    const BlockDistanceTable table = block_distance_table(rho, sigma, Metric::bures);
    CHECK(report.weighted_value ==
          doctest::Approx(test::enumeration_weighted_max(table)).epsilon(1e-12));
}

TEST_CASE("weighted distance of a state against itself is zero") {
    const PauliSum rho = cluster_state(line_graph(3));
    for (Metric metric : {Metric::bures, Metric::hilbert_schmidt}) {
        const DistanceReport report = weighted_distance(rho, rho, metric);
        CHECK(report.weighted_value == 0.0);
        CHECK(report.standard_value == 0.0);
        // All-zero table ties everywhere; fewest blocks wins.
        CHECK(report.optimal_partition.block_count() == 1);
    }
}

TEST_CASE("subset DP equals exhaustive enumeration on random state pairs") {
    Rng rng(41);
    for (int n = 2; n <= 6; ++n) {
        const int trials = n <= 4 ? 4 : 2;
        for (int trial = 0; trial < trials; ++trial) {
            const PauliSum rho = test::random_density_pauli_sum(n, rng);
            const PauliSum sigma = test::random_density_pauli_sum(n, rng);
            for (Metric metric : {Metric::bures, Metric::hilbert_schmidt}) {
                const BlockDistanceTable table = block_distance_table(rho, sigma, metric);
                const DistanceReport report = weighted_from_table(table);
                CHECK(report.weighted_value ==
                      doctest::Approx(test::enumeration_weighted_max(table)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("DP tie-breaking: fewest blocks, then lexicographic") {
    // Synthetic table on 3 qubits: {1,2}+{3} and {1}+{2,3} tie at 1.0,
    // the single-block value matches too.
    BlockDistanceTable table;
    table.n = 3;
    table.metric = Metric::bures;
    table.by_mask.assign(8, 0.0);
    table.by_mask[block_mask({1, 2})] = 2.0;
    table.by_mask[block_mask({2, 3})] = 2.0;
    table.by_mask[block_mask({1, 2, 3})] = 3.0;
    const DistanceReport report = weighted_from_table(table);
    CHECK(report.weighted_value == doctest::Approx(1.0));
    // One block beats the two-block ties.
    CHECK(report.optimal_partition.str() == "{1,2,3}");

    // Remove the single-block route: the lexicographically smaller of the
    // two-block ties must win.
    table.by_mask[block_mask({1, 2, 3})] = 0.0;
    const DistanceReport tied = weighted_from_table(table);
    CHECK(tied.weighted_value == doctest::Approx(1.0));
    CHECK(tied.optimal_partition.str() == "{1} {2,3}");
}

TEST_CASE("weighted value is at least the scaled global distance") {
    Rng rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        const int n = 2 + trial % 3;
        const PauliSum rho = test::random_density_pauli_sum(n, rng);
        const PauliSum sigma = test::random_density_pauli_sum(n, rng);
        for (Metric metric : {Metric::bures, Metric::hilbert_schmidt}) {
            const DistanceReport report = weighted_distance(rho, sigma, metric);
            CHECK(report.weighted_value >= report.standard_value / n - 1e-12);
        }
    }
}

TEST_CASE("faithfulness: zero iff equal as PauliSums") {
    Rng rng(43);
    const PauliSum rho = test::random_density_pauli_sum(3, rng);
    for (Metric metric : {Metric::bures, Metric::hilbert_schmidt}) {
        CHECK(weighted_distance(rho, rho, metric).weighted_value == 0.0);
    }
    const PauliSum sigma = conjugate_by_pauli(rho, parse_pauli_word(3, "Z2"));
    CHECK_FALSE(sigma.same_terms(rho));
    for (Metric metric : {Metric::bures, Metric::hilbert_schmidt}) {
        CHECK(weighted_distance(rho, sigma, metric).weighted_value > 1e-6);
    }
}

TEST_CASE("weighted metrics are symmetric and non-negative") {
    Rng rng(44);
    for (int trial = 0; trial < 8; ++trial) {
        const PauliSum rho = test::random_density_pauli_sum(3, rng);
        const PauliSum sigma = test::random_density_pauli_sum(3, rng);
        for (Metric metric : {Metric::bures, Metric::hilbert_schmidt}) {
            const double forward = weighted_distance(rho, sigma, metric).weighted_value;
            const double backward = weighted_distance(sigma, rho, metric).weighted_value;
            CHECK(forward >= 0.0);
            CHECK(forward == doctest::Approx(backward).epsilon(1e-9));
        }
    }
}

TEST_CASE("weighted metrics satisfy the triangle inequality on random triples") {
    Rng rng(45);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + trial % 2;
        const PauliSum a = test::random_density_pauli_sum(n, rng);
        const PauliSum b = test::random_density_pauli_sum(n, rng);
        const PauliSum c = test::random_density_pauli_sum(n, rng);
        for (Metric metric : {Metric::bures, Metric::hilbert_schmidt}) {
            const double ab = weighted_distance(a, b, metric).weighted_value;
            const double ac = weighted_distance(a, c, metric).weighted_value;
            const double cb = weighted_distance(c, b, metric).weighted_value;
            CHECK(ab <= ac + cb + 1e-9);
        }
    }
}

TEST_CASE("weighted Bures contracts under random single-qubit channels") {
    Rng rng(46);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + trial % 2;
        const PauliSum rho = test::random_density_pauli_sum(n, rng);
        const PauliSum sigma = test::random_density_pauli_sum(n, rng);
        const int qubit = 1 + static_cast<int>(rng() % n);
        const ErrorSpec channel = random_single_qubit_channel(rng(), qubit);
        const double before = weighted_distance(rho, sigma, Metric::bures).weighted_value;
        const double after =
            weighted_distance(apply_error(rho, channel), apply_error(sigma, channel), Metric::bures)
                .weighted_value;
        CHECK(after <= before + 1e-9);
    }
}

TEST_CASE("permutation covariance of the weighted distance") {
    Rng rng(47);
    const std::vector<std::vector<int>> perms = {{2, 3, 1}, {3, 1, 2}, {1, 3, 2}, {3, 2, 1}};
    for (int trial = 0; trial < 6; ++trial) {
        const PauliSum rho = test::random_density_pauli_sum(3, rng);
        const PauliSum sigma = test::random_density_pauli_sum(3, rng);
        const auto& perm = perms[trial % perms.size()];
        for (Metric metric : {Metric::bures, Metric::hilbert_schmidt}) {
            const DistanceReport base = weighted_distance(rho, sigma, metric);
            const DistanceReport mapped =
                weighted_distance(permute_qubits(rho, perm), permute_qubits(sigma, perm), metric);
            CHECK(mapped.weighted_value == doctest::Approx(base.weighted_value).epsilon(1e-10));

            // The image of the reported partition must achieve the optimum
            // in the permuted problem (the reported one may differ under ties).
            std::vector<std::vector<int>> image;
            for (const auto& block : base.optimal_partition.blocks) {
                std::vector<int> mapped_block;
                for (int q : block) mapped_block.push_back(perm[q - 1]);
                image.push_back(std::move(mapped_block));
            }
            const Partition mapped_partition = make_partition(3, std::move(image));
            const BlockDistanceTable table = block_distance_table(
                permute_qubits(rho, perm), permute_qubits(sigma, perm), metric);
            double value = 0.0;
            for (const auto& block : mapped_partition.blocks) {
                value += table.at(block) / static_cast<double>(block.size());
            }
            CHECK(value == doctest::Approx(mapped.weighted_value).epsilon(1e-10));
        }
    }
}

TEST_CASE("unique-optimum permutation maps the reported partition exactly") {
    // Z2 on line3 has the unique optimal partition {1,2,3}; any relabeling
    // keeps it unique.
    const PauliSum rho = cluster_state(line_graph(3));
    const PauliSum sigma = corrupted(rho, "Z2");
    const std::vector<int> perm = {2, 3, 1};
    const DistanceReport mapped = weighted_distance(permute_qubits(rho, perm),
                                                    permute_qubits(sigma, perm), Metric::bures);
    CHECK(mapped.optimal_partition.str() == "{1,2,3}");
    CHECK(mapped.weighted_value == doctest::Approx(kPi / 6).epsilon(1e-9));
}

TEST_CASE("cost_lower_bound divides the weighted Bures length by n") {
    DistanceReport report;
    report.metric = Metric::bures;
    report.weighted_value = kPi / 4;
    CHECK(cost_lower_bound(report, 4) == doctest::Approx(kPi / 16));
    report.weighted_value = 0.0;
    CHECK(cost_lower_bound(report, 4) == 0.0);
    report.weighted_value = kPi / 6;
    CHECK(cost_lower_bound(report, 3) == doctest::Approx(kPi / 18));

    report.metric = Metric::hilbert_schmidt;
    CHECK_THROWS(cost_lower_bound(report, 3));
}

TEST_CASE("block_distance_table rejects mismatched inputs") {
    const PauliSum a = cluster_state(line_graph(2));
    const PauliSum b = cluster_state(line_graph(3));
    CHECK_THROWS(block_distance_table(a, b, Metric::bures));
}
