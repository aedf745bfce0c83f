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

#ifndef WQDIST_PAULI_HPP
#define WQDIST_PAULI_HPP

#include <compare>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

namespace wqdist {

/// Largest qubit count representable by the symbolic layer.
inline constexpr int kMaxQubits = 20;

/// An n-qubit Pauli word in symplectic form: bit i-1 of `x`/`z` carries the
/// X/Z component of qubit i. Letters per qubit: (x,z) = (0,0) I, (1,0) X,
/// (1,1) Y, (0,1) Z. A PauliString is always the plain Hermitian tensor
/// product of its letters; scalar prefactors live elsewhere (Phase,
/// PauliSum coefficients).
class PauliString {
  public:
    PauliString() = default;

    static PauliString identity(int n);
    /// Single-letter word: `letter` on `qubit` (1-based), identity elsewhere.
    static PauliString single(int n, int qubit, char letter);
    static PauliString from_masks(int n, std::uint64_t x, std::uint64_t z);

    int qubit_count() const { return n_; }
    std::uint64_t x_bits() const { return x_; }
    std::uint64_t z_bits() const { return z_; }

    /// Letter of `qubit` (1-based), one of 'I', 'X', 'Y', 'Z'.
    char letter(int qubit) const;
    PauliString with_letter(int qubit, char letter) const;

    bool is_identity() const { return x_ == 0 && z_ == 0; }
    /// Number of non-identity letters.
    int weight() const;

    /// "X1Z3" style rendering; the identity word prints as "I".
    std::string str() const;

    friend bool operator==(const PauliString&, const PauliString&) = default;
    friend auto operator<=>(const PauliString&, const PauliString&) = default;

  private:
    PauliString(int n, std::uint64_t x, std::uint64_t z) : n_(n), x_(x), z_(z) {}

    int n_ = 0;
    std::uint64_t x_ = 0;
    std::uint64_t z_ = 0;
};

/// Power of the imaginary unit, i^k with k mod 4. Products of Hermitian
/// Pauli words pick up exactly such factors, so sign bookkeeping stays
/// integer-exact.
struct Phase {
    int k = 0;

    std::complex<double> value() const;
    /// +1 or -1; throws if the phase is imaginary.
    double real_sign() const;
    bool is_real() const { return (k & 1) == 0; }

    friend Phase operator*(Phase a, Phase b) { return Phase{(a.k + b.k) & 3}; }
    friend bool operator==(Phase, Phase) = default;
};

/// Exact product p*q = i^k * r. Throws on mismatched qubit counts.
std::pair<Phase, PauliString> multiply(const PauliString& p, const PauliString& q);

/// True iff p and q commute (symplectic inner product even).
bool commutes(const PauliString& p, const PauliString& q);

/// Parses words like "X1Z3", "Z2X14" or "I" over n qubits. Rejects unknown
/// letters, out-of-range or repeated qubit indices.
PauliString parse_pauli_word(int n, std::string_view text);

}  // namespace wqdist

#endif  // WQDIST_PAULI_HPP
