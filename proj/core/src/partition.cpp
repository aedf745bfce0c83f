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

#include "wqdist/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace wqdist {

int Partition::element_count() const {
    int total = 0;
    for (const auto& block : blocks) total += static_cast<int>(block.size());
    return total;
}

std::string Partition::str() const {
    std::string out;
    for (const auto& block : blocks) {
        if (!out.empty()) out += " ";
        out += "{";
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(block[i]);
        }
        out += "}";
    }
    return out;
}

Partition make_partition(int n, std::vector<std::vector<int>> blocks) {
    std::vector<bool> covered(static_cast<std::size_t>(n) + 1, false);
    for (auto& block : blocks) {
        if (block.empty()) {
            throw std::invalid_argument("partition contains an empty block");
        }
        std::sort(block.begin(), block.end());
        for (int q : block) {
            if (q < 1 || q > n) {
                throw std::out_of_range("partition element " + std::to_string(q) +
                                        " out of range [1, " + std::to_string(n) + "]");
            }
            if (covered[q]) {
                throw std::invalid_argument("partition element " + std::to_string(q) +
                                            " repeated");
            }
            covered[q] = true;
        }
    }
    for (int q = 1; q <= n; ++q) {
        if (!covered[q]) {
            throw std::invalid_argument("partition does not cover element " + std::to_string(q));
        }
    }
    std::sort(blocks.begin(), blocks.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return Partition{std::move(blocks)};
}

PartitionGenerator::PartitionGenerator(int n) : n_(n) {
    if (n < 1 || n > kMaxPartitionQubits) {
        throw std::invalid_argument("partition enumeration requires 1 <= n <= " +
                                    std::to_string(kMaxPartitionQubits) + ", got " +
                                    std::to_string(n));
    }
    rgs_.assign(n, 0);
    max_prefix_.assign(n, 0);
}

std::optional<Partition> PartitionGenerator::next() {
    if (done_) return std::nullopt;

    int block_count = 1 + *std::max_element(rgs_.begin(), rgs_.end());
    std::vector<std::vector<int>> blocks(block_count);
    for (int i = 0; i < n_; ++i) blocks[rgs_[i]].push_back(i + 1);
    Partition result{std::move(blocks)};

    // Advance the restricted growth string: rightmost position that can
    // still grow (a_i <= max(a_1..a_{i-1})) is incremented, suffix reset.
    int i = n_ - 1;
    while (i > 0 && rgs_[i] > max_prefix_[i - 1]) --i;
    if (i == 0) {
        done_ = true;
    } else {
        ++rgs_[i];
        max_prefix_[i] = std::max(max_prefix_[i - 1], rgs_[i]);
        for (int j = i + 1; j < n_; ++j) {
            rgs_[j] = 0;
            max_prefix_[j] = max_prefix_[i];
        }
    }
    return result;
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    PartitionGenerator gen(n);
    while (auto p = gen.next()) out.push_back(std::move(*p));
    return out;
}

std::uint64_t bell_number(int n) {
    if (n < 0 || n > kMaxPartitionQubits) {
        throw std::invalid_argument("bell_number: n out of range");
    }
    // Bell triangle.
    std::vector<std::uint64_t> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t v : row) next.push_back(next.back() + v);
        row = std::move(next);
    }
    return row.front();
}

std::uint32_t block_mask(const std::vector<int>& qubits) {
    std::uint32_t mask = 0;
    for (int q : qubits) {
        if (q < 1 || q > 32) throw std::out_of_range("qubit out of mask range");
        mask |= 1u << (q - 1);
    }
    return mask;
}

std::vector<int> mask_qubits(std::uint32_t mask) {
    std::vector<int> out;
    for (int q = 1; mask != 0; ++q, mask >>= 1) {
        if (mask & 1) out.push_back(q);
    }
    return out;
}

}  // namespace wqdist
