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

#ifndef WQDIST_PARTITION_HPP
#define WQDIST_PARTITION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wqdist {

/// Set partitions are not enumerated or optimized past this size.
inline constexpr int kMaxPartitionQubits = 12;

/// A set partition of {1..n}: disjoint nonempty sorted blocks covering the
/// set, canonically ordered by smallest element.
struct Partition {
    std::vector<std::vector<int>> blocks;

    int element_count() const;
    int block_count() const { return static_cast<int>(blocks.size()); }
    std::string str() const;  // "{1,2} {3}"

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Canonicalizes (sorts blocks internally, orders by smallest element) and
/// validates coverage of {1..n}.
Partition make_partition(int n, std::vector<std::vector<int>> blocks);

/// Streams every set partition of {1..n} exactly once, in lexicographic
/// restricted-growth-string order (first: one block, last: all singletons).
class PartitionGenerator {
  public:
    explicit PartitionGenerator(int n);
    /// Next partition, or nullopt when exhausted.
    std::optional<Partition> next();

  private:
    int n_;
    bool done_ = false;
    std::vector<int> rgs_;
    std::vector<int> max_prefix_;
};

std::vector<Partition> all_partitions(int n);

/// Bell number B_n (number of set partitions), n <= 12.
std::uint64_t bell_number(int n);

/// Bit mask over qubits (bit q-1 = qubit q) <-> sorted qubit list.
std::uint32_t block_mask(const std::vector<int>& qubits);
std::vector<int> mask_qubits(std::uint32_t mask);

}  // namespace wqdist

#endif  // WQDIST_PARTITION_HPP
