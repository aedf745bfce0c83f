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

#include "wqdist/pauli.hpp"

#include <bit>
#include <cctype>
#include <stdexcept>

namespace wqdist {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("qubit count out of range [1, " +
                                    std::to_string(kMaxQubits) + "]: " + std::to_string(n));
    }
}

void check_qubit_index(int n, int qubit) {
    if (qubit < 1 || qubit > n) {
        throw std::out_of_range("qubit index " + std::to_string(qubit) +
                                " out of range [1, " + std::to_string(n) + "]");
    }
}

std::pair<bool, bool> letter_bits(char letter) {
    switch (letter) {
        case 'I': return {false, false};
        case 'X': return {true, false};
        case 'Y': return {true, true};
        case 'Z': return {false, true};
        default:
            throw std::invalid_argument(std::string("unknown Pauli letter '") + letter + "'");
    }
}

}  // namespace

PauliString PauliString::identity(int n) {
    check_qubit_count(n);
    return PauliString(n, 0, 0);
}

PauliString PauliString::single(int n, int qubit, char letter) {
    return identity(n).with_letter(qubit, letter);
}

PauliString PauliString::from_masks(int n, std::uint64_t x, std::uint64_t z) {
    check_qubit_count(n);
    const std::uint64_t mask = (n == 64) ? ~0ull : ((1ull << n) - 1);
    if ((x & ~mask) != 0 || (z & ~mask) != 0) {
        throw std::invalid_argument("bit mask exceeds qubit count");
    }
    return PauliString(n, x, z);
}

char PauliString::letter(int qubit) const {
    check_qubit_index(n_, qubit);
    const bool x = (x_ >> (qubit - 1)) & 1;
    const bool z = (z_ >> (qubit - 1)) & 1;
    if (x && z) return 'Y';
    if (x) return 'X';
    if (z) return 'Z';
    return 'I';
}

PauliString PauliString::with_letter(int qubit, char letter) const {
    check_qubit_index(n_, qubit);
    const auto [x, z] = letter_bits(letter);
    const std::uint64_t bit = 1ull << (qubit - 1);
    PauliString result = *this;
    result.x_ = (x_ & ~bit) | (x ? bit : 0);
    result.z_ = (z_ & ~bit) | (z ? bit : 0);
    return result;
}

int PauliString::weight() const {
    return std::popcount(x_ | z_);
}

std::string PauliString::str() const {
    if (is_identity()) return "I";
    std::string out;
    for (int q = 1; q <= n_; ++q) {
        const char l = letter(q);
        if (l == 'I') continue;
        out += l;
        out += std::to_string(q);
    }
    return out;
}

std::complex<double> Phase::value() const {
    switch (k & 3) {
        case 0: return {1.0, 0.0};
        case 1: return {0.0, 1.0};
        case 2: return {-1.0, 0.0};
        default: return {0.0, -1.0};
    }
}

double Phase::real_sign() const {
    if ((k & 3) == 0) return 1.0;
    if ((k & 3) == 2) return -1.0;
    throw std::logic_error("phase i^" + std::to_string(k & 3) + " is not real");
}

std::pair<Phase, PauliString> multiply(const PauliString& p, const PauliString& q) {
    if (p.qubit_count() != q.qubit_count()) {
        throw std::invalid_argument("PauliString qubit counts differ: " +
                                    std::to_string(p.qubit_count()) + " vs " +
                                    std::to_string(q.qubit_count()));
    }
    const std::uint64_t x = p.x_bits() ^ q.x_bits();
    const std::uint64_t z = p.z_bits() ^ q.z_bits();
    // Per qubit, with P = i^{x.z} X^x Z^z: commuting Z^z1 past X^x2 costs
    // (-1)^{z1 x2}, and the i^{x.z} normalizations of the factors and the
    // result contribute the remaining exponent.
    int k = std::popcount(p.x_bits() & p.z_bits()) + std::popcount(q.x_bits() & q.z_bits()) +
            2 * std::popcount(p.z_bits() & q.x_bits()) - std::popcount(x & z);
    k &= 3;
    return {Phase{k}, PauliString::from_masks(p.qubit_count(), x, z)};
}

bool commutes(const PauliString& p, const PauliString& q) {
    if (p.qubit_count() != q.qubit_count()) {
        throw std::invalid_argument("PauliString qubit counts differ: " +
                                    std::to_string(p.qubit_count()) + " vs " +
                                    std::to_string(q.qubit_count()));
    }
    const int sym = std::popcount(p.x_bits() & q.z_bits()) + std::popcount(p.z_bits() & q.x_bits());
    return (sym & 1) == 0;
}

PauliString parse_pauli_word(int n, std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty Pauli word");
    }
    if (text == "I") {
        return PauliString::identity(n);
    }
    PauliString word = PauliString::identity(n);
    std::uint64_t seen = 0;
    std::size_t i = 0;
    while (i < text.size()) {
        const char letter = text[i];
        if (letter != 'X' && letter != 'Y' && letter != 'Z' && letter != 'I') {
            throw std::invalid_argument("unexpected character '" + std::string(1, letter) +
                                        "' in Pauli word \"" + std::string(text) + "\"");
        }
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (start == i) {
            throw std::invalid_argument("missing qubit index after '" + std::string(1, letter) +
                                        "' in \"" + std::string(text) + "\"");
        }
        const int qubit = std::stoi(std::string(text.substr(start, i - start)));
        if (qubit < 1 || qubit > n) {
            throw std::out_of_range("qubit index " + std::to_string(qubit) + " out of range [1, " +
                                    std::to_string(n) + "] in \"" + std::string(text) + "\"");
        }
        const std::uint64_t bit = 1ull << (qubit - 1);
        if (seen & bit) {
            throw std::invalid_argument("qubit " + std::to_string(qubit) + " repeated in \"" +
                                        std::string(text) + "\"");
        }
        seen |= bit;
        word = word.with_letter(qubit, letter);
    }
    return word;
}

}  // namespace wqdist
