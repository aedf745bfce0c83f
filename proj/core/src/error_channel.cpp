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

#include "wqdist/error_channel.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace wqdist {

namespace {

constexpr double kChannelTolerance = 1e-10;

const Mat2 kLetterMatrix[4] = {
    {cd{1, 0}, cd{0, 0}, cd{0, 0}, cd{1, 0}},    // I
    {cd{0, 0}, cd{1, 0}, cd{1, 0}, cd{0, 0}},    // X
    {cd{0, 0}, cd{0, -1}, cd{0, 1}, cd{0, 0}},   // Y
    {cd{1, 0}, cd{0, 0}, cd{0, 0}, cd{-1, 0}},   // Z
};

constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};

int letter_index(char letter) {
    switch (letter) {
        case 'I': return 0;
        case 'X': return 1;
        case 'Y': return 2;
        case 'Z': return 3;
        default: throw std::invalid_argument(std::string("unknown Pauli letter '") + letter + "'");
    }
}

Mat2 mul2(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 adjoint2(const Mat2& a) {
    return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])};
}

cd trace2(const Mat2& a) { return a[0] + a[3]; }

void check_qubit(int qubit, int n) {
    if (qubit < 1 || qubit > n) {
        throw std::out_of_range("error qubit " + std::to_string(qubit) + " out of range [1, " +
                                std::to_string(n) + "]");
    }
}

/// Pauli transfer matrix of rho -> sum_k K rho K^dagger restricted to one
/// qubit: t[a][b] = Re Tr(P_a Lambda(P_b)) / 2. The identity row is pinned
/// to (1,0,0,0) so the map preserves traces exactly.
std::array<std::array<double, 4>, 4> transfer_matrix(const std::vector<Mat2>& kraus) {
    std::array<std::array<double, 4>, 4> t{};
    for (int b = 0; b < 4; ++b) {
        Mat2 image{};
        for (const Mat2& k : kraus) {
            const Mat2 term = mul2(mul2(k, kLetterMatrix[b]), adjoint2(k));
            for (int i = 0; i < 4; ++i) image[i] += term[i];
        }
        for (int a = 0; a < 4; ++a) {
            t[a][b] = 0.5 * trace2(mul2(kLetterMatrix[a], image)).real();
        }
    }
    t[0] = {1.0, 0.0, 0.0, 0.0};
    return t;
}

PauliSum apply_transfer(const PauliSum& state, int qubit,
                        const std::array<std::array<double, 4>, 4>& t) {
    PauliSum out(state.qubit_count());
    for (const auto& [word, c] : state.terms()) {
        const int b = letter_index(word.letter(qubit));
        for (int a = 0; a < 4; ++a) {
            if (t[a][b] == 0.0) continue;
            out.add(word.with_letter(qubit, kLetters[a]), c * t[a][b]);
        }
    }
    return out;
}

double u64_to_unit_double(std::uint64_t v) {
    return static_cast<double>(v >> 11) * 0x1.0p-53;
}

/// Deterministic standard-normal stream (Box-Muller over the raw engine
/// output, independent of library distribution internals).
class NormalStream {
  public:
    explicit NormalStream(std::uint64_t seed) : engine_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = u64_to_unit_double(engine_());
        const double u2 = u64_to_unit_double(engine_());
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        spare_ = radius * std::sin(angle);
        have_spare_ = true;
        return radius * std::cos(angle);
    }

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace

int error_qubit(const ErrorSpec& e) {
    return std::visit([](const auto& spec) { return spec.qubit; }, e);
}

std::string error_name(const ErrorSpec& e) {
    if (const auto* p = std::get_if<PauliError>(&e)) {
        return std::string(1, p->letter) + std::to_string(p->qubit);
    }
    if (const auto* u = std::get_if<UnitaryError>(&e)) {
        return "U@" + std::to_string(u->qubit);
    }
    return "chan@" + std::to_string(std::get<ChannelError>(e).qubit);
}

void validate(const ErrorSpec& e, int n) {
    if (const auto* p = std::get_if<PauliError>(&e)) {
        check_qubit(p->qubit, n);
        if (p->letter != 'X' && p->letter != 'Y' && p->letter != 'Z') {
            throw std::invalid_argument(std::string("Pauli error letter must be X, Y or Z, got '") +
                                        p->letter + "'");
        }
        return;
    }
    if (const auto* u = std::get_if<UnitaryError>(&e)) {
        check_qubit(u->qubit, n);
        const Mat2 gram = mul2(adjoint2(u->u), u->u);
        const double violation =
            std::max(std::max(std::abs(gram[0] - cd{1, 0}), std::abs(gram[3] - cd{1, 0})),
                     std::max(std::abs(gram[1]), std::abs(gram[2])));
        if (violation > kChannelTolerance) {
            throw std::invalid_argument("unitary error: U^dagger U deviates from I by " +
                                        std::to_string(violation));
        }
        return;
    }
    const auto& channel = std::get<ChannelError>(e);
    check_qubit(channel.qubit, n);
    if (channel.kraus.empty()) {
        throw std::invalid_argument("channel error: empty Kraus list");
    }
    Mat2 sum{};
    for (const Mat2& k : channel.kraus) {
        const Mat2 term = mul2(adjoint2(k), k);
        for (int i = 0; i < 4; ++i) sum[i] += term[i];
    }
    const double violation =
        std::max(std::max(std::abs(sum[0] - cd{1, 0}), std::abs(sum[3] - cd{1, 0})),
                 std::max(std::abs(sum[1]), std::abs(sum[2])));
    if (violation > kChannelTolerance) {
        throw std::invalid_argument("channel error: sum K^dagger K deviates from I by " +
                                    std::to_string(violation));
    }
}

PauliSum apply_error(const PauliSum& state, const ErrorSpec& e) {
    validate(e, state.qubit_count());
    if (const auto* p = std::get_if<PauliError>(&e)) {
        return conjugate_by_pauli(state,
                                  PauliString::single(state.qubit_count(), p->qubit, p->letter));
    }
    if (const auto* u = std::get_if<UnitaryError>(&e)) {
        return apply_transfer(state, u->qubit, transfer_matrix({u->u}));
    }
    const auto& channel = std::get<ChannelError>(e);
    return apply_transfer(state, channel.qubit, transfer_matrix(channel.kraus));
}

std::vector<ErrorSpec> all_single_qubit_paulis(int n) {
    if (n < 1) {
        throw std::invalid_argument("all_single_qubit_paulis: n must be positive");
    }
    std::vector<ErrorSpec> out;
    out.reserve(3 * static_cast<std::size_t>(n));
    for (int q = 1; q <= n; ++q) {
        for (char letter : {'X', 'Y', 'Z'}) {
            out.push_back(PauliError{letter, q});
        }
    }
    return out;
}

ErrorSpec random_single_qubit_channel(std::uint64_t seed, int qubit) {
    NormalStream normals(seed);
    const int rank = 1 + static_cast<int>(normals.raw() % 4);

    // Two random orthonormal columns in C^{2 rank}; chopping them into
    // stacked 2x2 blocks yields Kraus operators with sum K^dagger K = I.
    const int rows = 2 * rank;
    std::vector<cd> col0(rows), col1(rows);
    for (int r = 0; r < rows; ++r) col0[r] = cd{normals.next(), normals.next()};
    for (int r = 0; r < rows; ++r) col1[r] = cd{normals.next(), normals.next()};

    auto norm = [](const std::vector<cd>& v) {
        double s = 0.0;
        for (const cd& e : v) s += std::norm(e);
        return std::sqrt(s);
    };
    const double n0 = norm(col0);
    for (cd& e : col0) e /= n0;
    cd projection = 0.0;
    for (int r = 0; r < rows; ++r) projection += std::conj(col0[r]) * col1[r];
    for (int r = 0; r < rows; ++r) col1[r] -= projection * col0[r];
    const double n1 = norm(col1);
    for (cd& e : col1) e /= n1;

    ChannelError channel;
    channel.qubit = qubit;
    for (int k = 0; k < rank; ++k) {
        channel.kraus.push_back(Mat2{col0[2 * k], col1[2 * k], col0[2 * k + 1], col1[2 * k + 1]});
    }
    return channel;
}

ErrorSpec parse_error_token(std::string_view token, int n, std::uint64_t seed) {
    if (token.empty()) {
        throw std::invalid_argument("empty error token");
    }
    auto parse_index = [&](std::string_view digits) {
        if (digits.empty()) {
            throw std::invalid_argument("missing qubit index in error token \"" +
                                        std::string(token) + "\"");
        }
        for (char ch : digits) {
            if (!std::isdigit(static_cast<unsigned char>(ch))) {
                throw std::invalid_argument("bad qubit index in error token \"" +
                                            std::string(token) + "\"");
            }
        }
        const int qubit = std::stoi(std::string(digits));
        check_qubit(qubit, n);
        return qubit;
    };
    if (token.starts_with("chan")) {
        return random_single_qubit_channel(seed, parse_index(token.substr(4)));
    }
    const char letter = token[0];
    if (letter != 'X' && letter != 'Y' && letter != 'Z') {
        throw std::invalid_argument("error token must start with X, Y, Z or \"chan\", got \"" +
                                    std::string(token) + "\"");
    }
    return PauliError{letter, parse_index(token.substr(1))};
}

}  // namespace wqdist
