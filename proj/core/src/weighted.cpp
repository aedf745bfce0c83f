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

#include "wqdist/weighted.hpp"

#include <bit>
#include <limits>
#include <stdexcept>

namespace wqdist {

BlockDistanceTable block_distance_table(const PauliSum& rho, const PauliSum& sigma, Metric metric,
                                        int dense_limit) {
    const int n = rho.qubit_count();
    if (sigma.qubit_count() != n) {
        throw std::invalid_argument("block_distance_table: qubit counts differ");
    }
    if (n > kMaxPartitionQubits) {
        throw std::invalid_argument("block_distance_table: n > " +
                                    std::to_string(kMaxPartitionQubits));
    }
    BlockDistanceTable table;
    table.n = n;
    table.metric = metric;
    table.by_mask.assign(1u << n, 0.0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const std::vector<int> keep = mask_qubits(mask);
        const PauliSum rho_block = partial_trace(rho, keep);
        const PauliSum sigma_block = partial_trace(sigma, keep);
        // Equal marginals are exact zeros; skip the dense round trip.
        if (rho_block.same_terms(sigma_block)) continue;
        table.by_mask[mask] = distance(metric, to_dense(rho_block, dense_limit),
                                       to_dense(sigma_block, dense_limit));
    }
    return table;
}

namespace {

struct DpEntry {
    double value = 0.0;
    int min_blocks = 0;
};

/// Weight of one block: distance / |block|.
double block_term(const BlockDistanceTable& table, std::uint32_t mask) {
    return table.at_mask(mask) / std::popcount(mask);
}

}  // namespace

DistanceReport weighted_from_table(const BlockDistanceTable& table, double tie_tolerance) {
    const int n = table.n;
    const std::uint32_t full = (1u << n) - 1;

    // f(S): best weighted sum over partitions of subset S. Each candidate
    // first block T contains min(S), so every partition is counted once.
    std::vector<double> best(full + 1, 0.0);
    for (std::uint32_t set = 1; set <= full; ++set) {
        const std::uint32_t low = set & (set ^ (set - 1));  // lowest set bit
        const std::uint32_t rest = set ^ low;
        double value = -std::numeric_limits<double>::infinity();
        std::uint32_t sub = rest;
        while (true) {
            const std::uint32_t block = sub | low;
            const double candidate = block_term(table, block) + best[set ^ block];
            if (candidate > value) value = candidate;
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
        best[set] = value;
    }

    // g(S): fewest blocks among near-optimal partitions of S, walking only
    // transitions whose value stays within the tie tolerance of f(S).
    std::vector<int> min_blocks(full + 1, 0);
    for (std::uint32_t set = 1; set <= full; ++set) {
        const std::uint32_t low = set & (set ^ (set - 1));
        const std::uint32_t rest = set ^ low;
        int blocks = std::numeric_limits<int>::max();
        std::uint32_t sub = rest;
        while (true) {
            const std::uint32_t block = sub | low;
            const double candidate = block_term(table, block) + best[set ^ block];
            if (candidate >= best[set] - tie_tolerance) {
                blocks = std::min(blocks, 1 + min_blocks[set ^ block]);
            }
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
        min_blocks[set] = blocks;
    }

    // Reconstruct: among tied transitions prefer fewest total blocks, then
    // the lexicographically smallest first block. Blocks are emitted in
    // order of their smallest elements, so the greedy choice is the
    // lexicographically smallest canonical form.
    DistanceReport report;
    report.metric = table.metric;
    report.standard_value = table.at_mask(full);
    report.weighted_value = best[full];

    std::vector<std::vector<int>> blocks;
    std::uint32_t remaining = full;
    while (remaining != 0) {
        const std::uint32_t low = remaining & (remaining ^ (remaining - 1));
        const std::uint32_t rest = remaining ^ low;
        std::uint32_t chosen = 0;
        std::vector<int> chosen_qubits;
        std::uint32_t sub = rest;
        while (true) {
            const std::uint32_t block = sub | low;
            const double candidate = block_term(table, block) + best[remaining ^ block];
            if (candidate >= best[remaining] - tie_tolerance &&
                1 + min_blocks[remaining ^ block] == min_blocks[remaining]) {
                std::vector<int> qubits = mask_qubits(block);
                if (chosen == 0 || qubits < chosen_qubits) {
                    chosen = block;
                    chosen_qubits = std::move(qubits);
                }
            }
            if (sub == 0) break;
            sub = (sub - 1) & rest;
        }
        BlockContribution contribution;
        contribution.qubits = chosen_qubits;
        contribution.distance = table.at_mask(chosen);
        contribution.weight = 1.0 / static_cast<double>(chosen_qubits.size());
        contribution.term = contribution.distance * contribution.weight;
        report.blocks.push_back(std::move(contribution));
        blocks.push_back(std::move(chosen_qubits));
        remaining ^= chosen;
    }
    report.optimal_partition = make_partition(n, std::move(blocks));

    // Keep the reported value and the sum of the reported terms identical.
    double total = 0.0;
    for (const auto& b : report.blocks) total += b.term;
    report.weighted_value = total;
    return report;
}

DistanceReport weighted_distance(const PauliSum& rho, const PauliSum& sigma, Metric metric,
                                 int dense_limit, double tie_tolerance) {
    return weighted_from_table(block_distance_table(rho, sigma, metric, dense_limit),
                               tie_tolerance);
}

double cost_lower_bound(const DistanceReport& report, int n) {
    if (report.metric != Metric::bures) {
        throw std::invalid_argument("cost_lower_bound is defined for the Bures metric only");
    }
    if (n < 1) {
        throw std::invalid_argument("cost_lower_bound: n must be positive");
    }
    return report.weighted_value / static_cast<double>(n);
}

}  // namespace wqdist
