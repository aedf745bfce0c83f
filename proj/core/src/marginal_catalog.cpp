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

#include "wqdist/marginal_catalog.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wqdist {

namespace {

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> catalog;

    catalog.push_back(CatalogEntry{
        "line3",
        3,
        {
            {{1, 2, 3},
             {{+1, "I"},
              {+1, "Z2X3"},
              {+1, "X1Z2"},
              {+1, "X1X3"},
              {+1, "Z1X2Z3"},
              {+1, "Z1Y2Y3"},
              {+1, "Y1Y2Z3"},
              {-1, "Y1X2Y3"}}},
            {{1, 2}, {{+1, "I"}, {+1, "X1Z2"}}},
            {{1, 3}, {{+1, "I"}, {+1, "X1X3"}}},
            {{2, 3}, {{+1, "I"}, {+1, "Z2X3"}}},
        }});

    catalog.push_back(CatalogEntry{
        "line4",
        4,
        {
            {{1, 2, 3, 4},
             {{+1, "I"},
              {+1, "Z3X4"},
              {+1, "X1Z2"},
              {+1, "Z2X3Z4"},
              {+1, "Z2Y3Y4"},
              {+1, "Z1X2Z3"},
              {+1, "Z1X2X4"},
              {+1, "X1X3Z4"},
              {+1, "X1Y3Y4"},
              {+1, "Y1Y2Z3"},
              {+1, "Y1Y2X4"},
              {+1, "Z1Y2Y3Z4"},
              {-1, "Z1Y2X3Y4"},
              {+1, "X1Z2Z3X4"},
              {-1, "Y1X2Y3Z4"},
              {+1, "Y1X2X3Y4"}}},
            {{1, 2, 3}, {{+1, "I"}, {+1, "X1Z2"}, {+1, "Z1X2Z3"}, {+1, "Y1Y2Z3"}}},
            {{1, 2, 4}, {{+1, "I"}, {+1, "X1Z2"}, {+1, "Z1X2X4"}, {+1, "Y1Y2X4"}}},
            {{1, 3, 4}, {{+1, "I"}, {+1, "Z3X4"}, {+1, "X1X3Z4"}, {+1, "X1Y3Y4"}}},
            {{2, 3, 4}, {{+1, "I"}, {+1, "Z2X3Z4"}, {+1, "Z3X4"}, {+1, "Z2Y3Y4"}}},
            {{1, 2}, {{+1, "I"}, {+1, "X1Z2"}}},
            {{3, 4}, {{+1, "I"}, {+1, "Z3X4"}}},
            {{1, 3}, {{+1, "I"}}},
            {{1, 4}, {{+1, "I"}}},
            {{2, 3}, {{+1, "I"}}},
            {{2, 4}, {{+1, "I"}}},
        }});

    catalog.push_back(CatalogEntry{
        "ring4",
        4,
        {
            {{1, 2, 3, 4},
             {{+1, "I"},
              {+1, "X1X3"},
              {+1, "X2X4"},
              {+1, "Z1Z3X4"},
              {+1, "Z2X3Z4"},
              {-1, "Y2X3Y4"},
              {+1, "X1Z2Z4"},
              {-1, "Y1Y3X4"},
              {-1, "X1Y2Y4"},
              {-1, "Y1X2Y3"},
              {+1, "Z1X2Z3"},
              {+1, "Z1Z2Y3Y4"},
              {+1, "Z1Y2Y3Z4"},
              {+1, "Y1Z2Z3Y4"},
              {+1, "Y1Y2Z3Z4"},
              {+1, "X1X2X3X4"}}},
            {{1, 2, 3}, {{+1, "I"}, {+1, "Z1X2Z3"}, {+1, "X1X3"}, {-1, "Y1X2Y3"}}},
            {{1, 2, 4}, {{+1, "I"}, {+1, "X1Z2Z4"}, {+1, "X2X4"}, {-1, "X1Y2Y4"}}},
            {{1, 3, 4}, {{+1, "I"}, {+1, "Z1Z3X4"}, {+1, "X1X3"}, {-1, "Y1Y3X4"}}},
            {{2, 3, 4}, {{+1, "I"}, {+1, "Z2X3Z4"}, {+1, "X2X4"}, {-1, "Y2X3Y4"}}},
            {{1, 3}, {{+1, "I"}, {+1, "X1X3"}}},
            {{2, 4}, {{+1, "I"}, {+1, "X2X4"}}},
            {{1, 2}, {{+1, "I"}}},
            {{1, 4}, {{+1, "I"}}},
            {{2, 3}, {{+1, "I"}}},
            {{3, 4}, {{+1, "I"}}},
        }});

    catalog.push_back(CatalogEntry{
        "line5",
        5,
        {
            {{1, 2, 3, 4, 5},
             {{+1, "I"},
              {+1, "Z4X5"},
              {+1, "X1Z2"},
              {+1, "Z3X4Z5"},
              {+1, "Z3Y4Y5"},
              {+1, "Z2X3Z4"},
              {+1, "Z2X3X5"},
              {+1, "Z1X2Z3"},
              {+1, "X1X3Z4"},
              {+1, "X1X3X5"},
              {+1, "Y1Y2Z3"},
              {+1, "Z2Y3Y4Z5"},
              {-1, "Z2Y3X4Y5"},
              {+1, "Z1X2X4Z5"},
              {+1, "Z1X2Y4Y5"},
              {+1, "Z1Y2Y3Z4"},
              {+1, "Z1Y2Y3X5"},
              {+1, "X1Z2Z4X5"},
              {+1, "X1Y3Y4Z5"},
              {-1, "X1Y3X4Y5"},
              {+1, "Y1Y2X4Z5"},
              {+1, "Y1Y2Y4Y5"},
              {-1, "Y1X2Y3Z4"},
              {-1, "Y1X2Y3X5"},
              {+1, "Z1X2Z3Z4X5"},
              {-1, "Z1Y2X3Y4Z5"},
              {+1, "Z1Y2X3X4Y5"},
              {+1, "X1Z2Z3X4Z5"},
              {+1, "X1Z2Z3Y4Y5"},
              {+1, "Y1Y2Z3Z4X5"},
              {+1, "Y1X2X3Y4Z5"},
              {-1, "Y1X2X3X4Y5"}}},
            {{1, 2, 3, 4},
             {{+1, "I"},
              {+1, "X1Z2"},
              {+1, "Z1X2Z3"},
              {+1, "Z2X3Z4"},
              {+1, "Y1Y2Z3"},
              {+1, "X1X3Z4"},
              {+1, "Z1Y2Y3Z4"},
              {-1, "Y1X2Y3Z4"}}},
            {{1, 2, 3, 5},
             {{+1, "I"},
              {+1, "X1Z2"},
              {+1, "Z1X2Z3"},
              {+1, "Z2X3X5"},
              {+1, "Y1Y2Z3"},
              {+1, "X1X3X5"},
              {+1, "Z1Y2Y3X5"},
              {-1, "Y1X2Y3X5"}}},
            {{1, 2, 4, 5},
             {{+1, "I"},
              {+1, "X1Z2"},
              {+1, "Z4X5"},
              {+1, "Z1X2X4Z5"},
              {+1, "X1Z2Z4X5"},
              {+1, "Y1Y2X4Z5"},
              {+1, "Z1X2Y4Y5"},
              {+1, "Y1Y2Y4Y5"}}},
            {{1, 3, 4, 5},
             {{+1, "I"},
              {+1, "Z3X4Z5"},
              {+1, "Z4X5"},
              {+1, "X1X3Z4"},
              {+1, "Z3Y4Y5"},
              {+1, "X1Y3Y4Z5"},
              {+1, "X1X3X5"},
              {-1, "X1Y3X4Y5"}}},
            {{2, 3, 4, 5},
             {{+1, "I"},
              {+1, "Z2X3Z4"},
              {+1, "Z3X4Z5"},
              {+1, "Z4X5"},
              {+1, "Z2Y3Y4Z5"},
              {+1, "Z2X3X5"},
              {+1, "Z3Y4Y5"},
              {-1, "Z2Y3X4Y5"}}},
            {{1, 2, 3}, {{+1, "I"}, {+1, "X1Z2"}, {+1, "Z1X2Z3"}, {+1, "Y1Y2Z3"}}},
            {{1, 2, 4}, {{+1, "I"}, {+1, "X1Z2"}}},
            {{1, 2, 5}, {{+1, "I"}, {+1, "X1Z2"}}},
            {{1, 3, 4}, {{+1, "I"}, {+1, "X1X3Z4"}}},
            {{1, 3, 5}, {{+1, "I"}, {+1, "X1X3X5"}}},
            {{1, 4, 5}, {{+1, "I"}, {+1, "Z4X5"}}},
            {{2, 4, 5}, {{+1, "I"}, {+1, "Z4X5"}}},
            {{2, 3, 4}, {{+1, "I"}, {+1, "Z2X3Z4"}}},
            {{2, 3, 5}, {{+1, "I"}, {+1, "Z2X3X5"}}},
            {{3, 4, 5}, {{+1, "I"}, {+1, "Z3X4Z5"}, {+1, "Z4X5"}, {+1, "Z3Y4Y5"}}},
            {{1, 2}, {{+1, "I"}, {+1, "X1Z2"}}},
            {{4, 5}, {{+1, "I"}, {+1, "Z4X5"}}},
            {{1, 3}, {{+1, "I"}}},
            {{1, 4}, {{+1, "I"}}},
            {{1, 5}, {{+1, "I"}}},
            {{2, 3}, {{+1, "I"}}},
            {{2, 4}, {{+1, "I"}}},
            {{2, 5}, {{+1, "I"}}},
            {{3, 4}, {{+1, "I"}}},
            {{3, 5}, {{+1, "I"}}},
        }});

    return catalog;
}

}  // namespace

const std::vector<CatalogEntry>& marginal_catalog() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

const CatalogEntry* find_catalog_entry(const std::string& preset) {
    for (const CatalogEntry& entry : marginal_catalog()) {
        if (preset == entry.preset) return &entry;
    }
    return nullptr;
}

PauliSum build_catalog_marginal(const CatalogMarginal& marginal, int original_n) {
    const int k = static_cast<int>(marginal.keep.size());
    if (!std::is_sorted(marginal.keep.begin(), marginal.keep.end())) {
        throw std::logic_error("catalog keep sets must be ascending");
    }
    PauliSum out(k);
    const double scale = std::ldexp(1.0, -k);
    for (const auto& term : marginal.terms) {
        const PauliString original = parse_pauli_word(original_n, term.word);
        PauliString remapped = PauliString::identity(k);
        for (int q = 1; q <= original_n; ++q) {
            const char letter = original.letter(q);
            if (letter == 'I') continue;
            const auto it = std::find(marginal.keep.begin(), marginal.keep.end(), q);
            if (it == marginal.keep.end()) {
                throw std::logic_error(std::string("catalog term ") + term.word +
                                       " acts outside its keep set");
            }
            const int position = static_cast<int>(it - marginal.keep.begin()) + 1;
            remapped = remapped.with_letter(position, letter);
        }
        out.add(remapped, term.sign * scale);
    }
    return out;
}

}  // namespace wqdist
