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

#ifndef WQDIST_ERROR_CHANNEL_HPP
#define WQDIST_ERROR_CHANNEL_HPP

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "wqdist/pauli_sum.hpp"

namespace wqdist {

/// Row-major 2x2 complex matrix.
using Mat2 = std::array<cd, 4>;

struct PauliError {
    char letter = 'X';  // X, Y or Z
    int qubit = 1;
};

struct UnitaryError {
    Mat2 u{};
    int qubit = 1;
};

struct ChannelError {
    std::vector<Mat2> kraus;
    int qubit = 1;
};

using ErrorSpec = std::variant<PauliError, UnitaryError, ChannelError>;

int error_qubit(const ErrorSpec& e);
/// "X1" for Pauli kinds, "U@q" / "chan@q" otherwise.
std::string error_name(const ErrorSpec& e);

/// Checks index range against n, unitarity (U^dagger U = I within 1e-10)
/// and Kraus completeness (sum K^dagger K = I within 1e-10). Throws on
/// violation.
void validate(const ErrorSpec& e, int n);

/// Applies the error to a density PauliSum. Pauli kinds conjugate exactly;
/// unitary and channel kinds act through the 4x4 real Pauli transfer matrix
/// of the affected qubit, so the result stays a real-coefficient sum and
/// the trace is preserved exactly.
PauliSum apply_error(const PauliSum& state, const ErrorSpec& e);

/// The 3n specs X_i, Y_i, Z_i, qubit-major with letter order X, Y, Z.
std::vector<ErrorSpec> all_single_qubit_paulis(int n);

/// Reproducible CPTP single-qubit channel: Kraus rank drawn from {1..4},
/// operators completed to an isometry. Same seed, same channel.
ErrorSpec random_single_qubit_channel(std::uint64_t seed, int qubit = 1);

/// Parses CLI error tokens: a Pauli letter immediately followed by the
/// 1-based qubit index ("Z2", "X14"), or "chan<q>" for a random channel
/// drawn from `seed`.
ErrorSpec parse_error_token(std::string_view token, int n, std::uint64_t seed = 0);

}  // namespace wqdist

#endif  // WQDIST_ERROR_CHANNEL_HPP
