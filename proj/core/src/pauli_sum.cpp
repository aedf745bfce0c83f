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

#include "wqdist/pauli_sum.hpp"

#include <bit>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace wqdist {

namespace {

void check_same_n(int a, int b) {
    if (a != b) {
        throw std::invalid_argument("qubit counts differ: " + std::to_string(a) + " vs " +
                                    std::to_string(b));
    }
}

/// Maps symplectic masks (bit q-1 = qubit q) to computational-basis index
/// bits (qubit 1 on the most significant bit).
std::uint64_t to_index_bits(std::uint64_t mask, int n) {
    std::uint64_t out = 0;
    for (int q = 1; q <= n; ++q) {
        if ((mask >> (q - 1)) & 1) out |= 1ull << (n - q);
    }
    return out;
}

}  // namespace

PauliSum::PauliSum(int n) : n_(n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count out of range [1, " +
                                    std::to_string(kMaxQubits) + "]: " + std::to_string(n));
    }
}

double PauliSum::coefficient(const PauliString& word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? 0.0 : it->second;
}

void PauliSum::add(const PauliString& word, double c) {
    check_same_n(n_, word.qubit_count());
    auto [it, inserted] = terms_.try_emplace(word, 0.0);
    it->second += c;
    if (std::abs(it->second) < kPruneThreshold) {
        terms_.erase(it);
    }
}

double PauliSum::trace() const {
    return std::ldexp(coefficient(PauliString::identity(n_)), n_);
}

double PauliSum::purity() const {
    double s = 0.0;
    for (const auto& [word, c] : terms_) s += c * c;
    return std::ldexp(s, n_);
}

PauliSum PauliSum::scaled(double s) const {
    PauliSum out(n_);
    for (const auto& [word, c] : terms_) out.add(word, c * s);
    return out;
}

bool PauliSum::same_terms(const PauliSum& other, double tol) const {
    if (n_ != other.n_) return false;
    for (const auto& [word, c] : terms_) {
        if (std::abs(c - other.coefficient(word)) > tol) return false;
    }
    for (const auto& [word, c] : other.terms_) {
        if (std::abs(c - coefficient(word)) > tol) return false;
    }
    return true;
}

std::string PauliSum::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [word, c] : terms_) {
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        out << std::abs(c) << " " << word.str();
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

double overlap(const PauliSum& a, const PauliSum& b) {
    check_same_n(a.qubit_count(), b.qubit_count());
    double s = 0.0;
    // Walk the smaller term map.
    const PauliSum& lhs = a.term_count() <= b.term_count() ? a : b;
    const PauliSum& rhs = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [word, c] : lhs.terms()) s += c * rhs.coefficient(word);
    return std::ldexp(s, a.qubit_count());
}

PauliSum partial_trace(const PauliSum& s, std::span<const int> keep) {
    const int n = s.qubit_count();
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: keep set is empty");
    }
    std::uint64_t keep_mask = 0;
    for (int q : keep) {
        if (q < 1 || q > n) {
            throw std::out_of_range("partial_trace: qubit " + std::to_string(q) +
                                    " out of range [1, " + std::to_string(n) + "]");
        }
        const std::uint64_t bit = 1ull << (q - 1);
        if (keep_mask & bit) {
            throw std::invalid_argument("partial_trace: qubit " + std::to_string(q) + " repeated");
        }
        keep_mask |= bit;
    }
    const int k = static_cast<int>(keep.size());
    PauliSum out(k);
    const double scale = std::ldexp(1.0, n - k);
    for (const auto& [word, c] : s.terms()) {
        // Only terms acting as identity on every traced qubit survive.
        if ((word.x_bits() & ~keep_mask) != 0 || (word.z_bits() & ~keep_mask) != 0) continue;
        std::uint64_t x = 0, z = 0;
        for (int j = 0; j < k; ++j) {
            const int q = keep[j];
            x |= ((word.x_bits() >> (q - 1)) & 1) << j;
            z |= ((word.z_bits() >> (q - 1)) & 1) << j;
        }
        out.add(PauliString::from_masks(k, x, z), c * scale);
    }
    return out;
}

PauliSum partial_trace(const PauliSum& s, std::initializer_list<int> keep) {
    return partial_trace(s, std::span<const int>(keep.begin(), keep.size()));
}

PauliSum conjugate_by_pauli(const PauliSum& s, const PauliString& e) {
    check_same_n(s.qubit_count(), e.qubit_count());
    PauliSum out(s.qubit_count());
    for (const auto& [word, c] : s.terms()) {
        out.add(word, commutes(word, e) ? c : -c);
    }
    return out;
}

PauliString permute_qubits(const PauliString& p, const std::vector<int>& perm) {
    const int n = p.qubit_count();
    if (static_cast<int>(perm.size()) != n) {
        throw std::invalid_argument("permutation size does not match qubit count");
    }
    std::uint64_t seen = 0, x = 0, z = 0;
    for (int q = 1; q <= n; ++q) {
        const int target = perm[q - 1];
        if (target < 1 || target > n) {
            throw std::out_of_range("permutation target out of range: " + std::to_string(target));
        }
        const std::uint64_t bit = 1ull << (target - 1);
        if (seen & bit) {
            throw std::invalid_argument("not a permutation: target " + std::to_string(target) +
                                        " repeated");
        }
        seen |= bit;
        if ((p.x_bits() >> (q - 1)) & 1) x |= bit;
        if ((p.z_bits() >> (q - 1)) & 1) z |= bit;
    }
    return PauliString::from_masks(n, x, z);
}

PauliSum permute_qubits(const PauliSum& s, const std::vector<int>& perm) {
    PauliSum out(s.qubit_count());
    for (const auto& [word, c] : s.terms()) {
        out.add(permute_qubits(word, perm), c);
    }
    return out;
}

DenseOperator to_dense(const PauliString& p, int dense_limit) {
    const int n = p.qubit_count();
    if (n > dense_limit) {
        throw std::invalid_argument("qubit count " + std::to_string(n) +
                                    " exceeds dense limit " + std::to_string(dense_limit));
    }
    const int dim = 1 << n;
    DenseOperator m(dim, true);
    const std::uint64_t xcol = to_index_bits(p.x_bits(), n);
    const std::uint64_t zcol = to_index_bits(p.z_bits(), n);
    const int y_count = std::popcount(p.x_bits() & p.z_bits());
    const cd y_phase = Phase{y_count & 3}.value();
    for (int c = 0; c < dim; ++c) {
        const int r = static_cast<int>(c ^ xcol);
        const double sign = (std::popcount(static_cast<std::uint64_t>(c) & zcol) & 1) ? -1.0 : 1.0;
        m.at(r, c) = sign * y_phase;
    }
    return m;
}

DenseOperator to_dense(const PauliSum& s, int dense_limit) {
    const int n = s.qubit_count();
    if (n > dense_limit) {
        throw std::invalid_argument("qubit count " + std::to_string(n) +
                                    " exceeds dense limit " + std::to_string(dense_limit));
    }
    const int dim = 1 << n;
    DenseOperator m(dim, true);
    for (const auto& [word, coeff] : s.terms()) {
        const std::uint64_t xcol = to_index_bits(word.x_bits(), n);
        const std::uint64_t zcol = to_index_bits(word.z_bits(), n);
        const cd scale = coeff * Phase{std::popcount(word.x_bits() & word.z_bits()) & 3}.value();
        for (int c = 0; c < dim; ++c) {
            const int r = static_cast<int>(c ^ xcol);
            const double sign =
                (std::popcount(static_cast<std::uint64_t>(c) & zcol) & 1) ? -1.0 : 1.0;
            m.at(r, c) += sign * scale;
        }
    }
    return m;
}

}  // namespace wqdist
