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

#ifndef WQDIST_GRAPH_STATE_HPP
#define WQDIST_GRAPH_STATE_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wqdist/pauli_sum.hpp"

namespace wqdist {

/// Simple undirected graph on vertices 1..n, edges stored normalized
/// (i < j) and sorted.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};

/// Validates and normalizes: rejects self-loops, duplicate edges and
/// out-of-range vertices rather than repairing them.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

Graph line_graph(int n);
Graph ring_graph(int n);
/// Open-boundary grid, vertices numbered row-major.
Graph grid_graph(int rows, int cols);

/// Resolves "line3", "line4", "line5", "ring4", and the generic forms
/// "line<N>", "ring<N>", "grid<R>x<C>". Throws on anything else.
Graph parse_graph_spec(std::string_view spec);
bool is_graph_spec(std::string_view spec);

/// Edge-list file: first line "n <count>", then one "i j" edge per line;
/// '#' starts a comment. Throws std::runtime_error on malformed input.
Graph parse_edge_list(std::istream& in);

struct StabilizerSet {
    std::vector<PauliString> generators;
};

/// Generator i: X on vertex i, Z on each neighbor.
StabilizerSet stabilizer_generators(const Graph& g);

/// Full stabilizer-group expansion of prod_i (I + g_i)/2 as a 2^n-term
/// PauliSum with exact signs. Throws when n exceeds `symbolic_limit`.
PauliSum cluster_state(const Graph& g, int symbolic_limit = kMaxQubits);

/// True iff g rho = rho term-for-term (within tol on coefficients).
bool stabilizes(const PauliString& g, const PauliSum& rho, double tol = kPruneThreshold);

}  // namespace wqdist

#endif  // WQDIST_GRAPH_STATE_HPP
