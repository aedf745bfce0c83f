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

#ifndef WQDIST_WEIGHTED_HPP
#define WQDIST_WEIGHTED_HPP

#include <cstdint>
#include <vector>

#include "wqdist/metrics.hpp"
#include "wqdist/partition.hpp"
#include "wqdist/pauli_sum.hpp"

namespace wqdist {

/// Two distinct weighted values are treated as tied below this gap.
inline constexpr double kTieTolerance = 1e-9;

/// Distance between the marginals of rho and sigma on every nonempty
/// qubit subset, indexed by subset bit mask (bit q-1 = qubit q).
struct BlockDistanceTable {
    int n = 0;
    Metric metric = Metric::bures;
    std::vector<double> by_mask;  // size 2^n, index 0 unused

    double at_mask(std::uint32_t mask) const { return by_mask[mask]; }
    double at(const std::vector<int>& qubits) const { return by_mask[block_mask(qubits)]; }
};

BlockDistanceTable block_distance_table(const PauliSum& rho, const PauliSum& sigma, Metric metric,
                                        int dense_limit = kDefaultDenseLimit);

struct BlockContribution {
    std::vector<int> qubits;
    double distance = 0.0;  // metric distance of the marginals
    double weight = 0.0;    // 1/|block|
    double term = 0.0;      // distance * weight
};

struct DistanceReport {
    Metric metric = Metric::bures;
    double standard_value = 0.0;  // single-block {1..n} distance
    double weighted_value = 0.0;
    Partition optimal_partition;
    std::vector<BlockContribution> blocks;
};

/// Maximum over all set partitions of sum_blocks distance(block)/|block|.
/// Among value ties (within `tie_tolerance`) the reported partition has the
/// fewest blocks, then the lexicographically smallest canonical form.
/// Exact subset dynamic program, O(3^n).
DistanceReport weighted_distance(const PauliSum& rho, const PauliSum& sigma, Metric metric,
                                 int dense_limit = kDefaultDenseLimit,
                                 double tie_tolerance = kTieTolerance);

/// Same maximization over a precomputed block table.
DistanceReport weighted_from_table(const BlockDistanceTable& table,
                                   double tie_tolerance = kTieTolerance);

/// Minimal admissible energy-time product E*t for any unitary
/// transformation between the two states: D_B / n. Bures reports only.
double cost_lower_bound(const DistanceReport& report, int n);

}  // namespace wqdist

#endif  // WQDIST_WEIGHTED_HPP
