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

#include "wqdist/graph_state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wqdist {

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1 || n > kMaxQubits) {
        throw std::invalid_argument("graph size out of range [1, " + std::to_string(kMaxQubits) +
                                    "]: " + std::to_string(n));
    }
    std::set<std::pair<int, int>> seen;
    for (auto& [i, j] : edges) {
        if (i == j) {
            throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
        }
        if (i > j) std::swap(i, j);
        if (i < 1 || j > n) {
            throw std::out_of_range("edge (" + std::to_string(i) + "," + std::to_string(j) +
                                    ") out of range [1, " + std::to_string(n) + "]");
        }
        if (!seen.insert({i, j}).second) {
            throw std::invalid_argument("duplicate edge (" + std::to_string(i) + "," +
                                        std::to_string(j) + ")");
        }
    }
    Graph g;
    g.n = n;
    g.edges.assign(seen.begin(), seen.end());
    return g;
}

Graph line_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return make_graph(n, std::move(edges));
}

Graph ring_graph(int n) {
    if (n < 3) {
        throw std::invalid_argument("ring requires n >= 3, got " + std::to_string(n));
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(1, n);
    return make_graph(n, std::move(edges));
}

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("grid requires rows, cols >= 1");
    }
    std::vector<std::pair<int, int>> edges;
    auto vertex = [cols](int r, int c) { return r * cols + c + 1; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(vertex(r, c), vertex(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(vertex(r, c), vertex(r + 1, c));
        }
    }
    return make_graph(rows * cols, std::move(edges));
}

namespace {

bool parse_positive_int(std::string_view text, int& out) {
    if (text.empty() || text.size() > 6) return false;
    int value = 0;
    for (char ch : text) {
        if (ch < '0' || ch > '9') return false;
        value = value * 10 + (ch - '0');
    }
    if (value < 1) return false;
    out = value;
    return true;
}

}  // namespace

Graph parse_graph_spec(std::string_view spec) {
    int n = 0;
    if (spec.starts_with("line") && parse_positive_int(spec.substr(4), n)) {
        return line_graph(n);
    }
    if (spec.starts_with("ring") && parse_positive_int(spec.substr(4), n)) {
        return ring_graph(n);
    }
    if (spec.starts_with("grid")) {
        const auto body = spec.substr(4);
        const auto x = body.find('x');
        int rows = 0, cols = 0;
        if (x != std::string_view::npos && parse_positive_int(body.substr(0, x), rows) &&
            parse_positive_int(body.substr(x + 1), cols)) {
            return grid_graph(rows, cols);
        }
    }
    throw std::invalid_argument("unknown graph spec \"" + std::string(spec) + "\"");
}

bool is_graph_spec(std::string_view spec) {
    try {
        parse_graph_spec(spec);
        return true;
    } catch (const std::exception&) {
        return false;
    }
}

Graph parse_edge_list(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        if (n < 0) {
            std::string tag;
            if (!(fields >> tag)) continue;  // blank/comment line before header
            int count = 0;
            if (tag != "n" || !(fields >> count)) {
                throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                         ": expected header \"n <count>\"");
            }
            std::string rest;
            if (fields >> rest) {
                throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                         ": trailing tokens after header");
            }
            n = count;
            continue;
        }
        int i = 0, j = 0;
        if (!(fields >> i)) continue;  // blank/comment line
        if (!(fields >> j)) {
            throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                     ": expected \"i j\"");
        }
        std::string rest;
        if (fields >> rest) {
            throw std::runtime_error("edge list line " + std::to_string(line_no) +
                                     ": trailing tokens after edge");
        }
        edges.emplace_back(i, j);
    }
    if (n < 0) {
        throw std::runtime_error("edge list: missing \"n <count>\" header");
    }
    try {
        return make_graph(n, std::move(edges));
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("edge list: ") + e.what());
    }
}

StabilizerSet stabilizer_generators(const Graph& g) {
    if (g.n < 1) {
        throw std::invalid_argument("empty graph");
    }
    StabilizerSet set;
    set.generators.reserve(g.n);
    for (int i = 1; i <= g.n; ++i) {
        set.generators.push_back(PauliString::single(g.n, i, 'X'));
    }
    for (const auto& [i, j] : g.edges) {
        set.generators[i - 1] = set.generators[i - 1].with_letter(j, 'Z');
        set.generators[j - 1] = set.generators[j - 1].with_letter(i, 'Z');
    }
    return set;
}

PauliSum cluster_state(const Graph& g, int symbolic_limit) {
    if (g.n > symbolic_limit) {
        throw std::invalid_argument("graph size " + std::to_string(g.n) +
                                    " exceeds symbolic limit " + std::to_string(symbolic_limit));
    }
    const StabilizerSet set = stabilizer_generators(g);
    const int n = g.n;
    const double unit = std::ldexp(1.0, -n);

    PauliSum state(n);
    // Gray-code walk over the 2^n subset products: each step multiplies the
    // running word by exactly one generator.
    PauliString word = PauliString::identity(n);
    Phase phase{0};
    state.add(word, unit);
    const std::uint64_t total = 1ull << n;
    for (std::uint64_t index = 1; index < total; ++index) {
        const int flipped = std::countr_zero(index);
        auto [step_phase, product] = multiply(word, set.generators[flipped]);
        phase = phase * step_phase;
        word = product;
        state.add(word, phase.real_sign() * unit);
    }
    return state;
}

bool stabilizes(const PauliString& g, const PauliSum& rho, double tol) {
    // Accumulate g * rho with complex coefficients, then compare with rho.
    std::map<PauliString, std::complex<double>> product;
    for (const auto& [word, c] : rho.terms()) {
        auto [phase, result] = multiply(g, word);
        product[result] += c * phase.value();
    }
    for (const auto& [word, c] : product) {
        if (std::abs(c - std::complex<double>(rho.coefficient(word), 0.0)) > tol) return false;
    }
    for (const auto& [word, c] : rho.terms()) {
        auto it = product.find(word);
        if (it == product.end() && std::abs(c) > tol) return false;
    }
    return true;
}

}  // namespace wqdist
