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

#ifndef WQDIST_MARGINAL_CATALOG_HPP
#define WQDIST_MARGINAL_CATALOG_HPP

#include <string>
#include <vector>

#include "wqdist/pauli_sum.hpp"

namespace wqdist {

/// One reference marginal: the reduced state on `keep` (original 1-based
/// labels, ascending) equals 2^{-|keep|} sum_i sign_i * word_i, with words
/// written over the original labels.
struct CatalogMarginal {
    std::vector<int> keep;
    struct Term {
        double sign;
        const char* word;  // "X1Z2", "I"
    };
    std::vector<Term> terms;
};

struct CatalogEntry {
    const char* preset;  // "line3", "line4", "ring4", "line5"
    int n;
    std::vector<CatalogMarginal> marginals;
};

/// Reference expansions of the four preset cluster states and all of their
/// two-or-more-qubit marginals.
const std::vector<CatalogEntry>& marginal_catalog();

const CatalogEntry* find_catalog_entry(const std::string& preset);

/// Builds the marginal as a PauliSum on |keep| qubits, labels remapped to
/// 1..|keep| following the ascending keep order.
PauliSum build_catalog_marginal(const CatalogMarginal& marginal, int original_n);

}  // namespace wqdist

#endif  // WQDIST_MARGINAL_CATALOG_HPP
