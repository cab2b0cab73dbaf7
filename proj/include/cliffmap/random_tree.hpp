// Copyright 2026 The cliffmap Authors
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

#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cliffmap/random.hpp"
#include "cliffmap/ternary_tree.hpp"

namespace cliffmap {

/// Fisher-Yates with the portable index sampler, so shuffles agree across
/// standard libraries.
template <typename T>
void portable_shuffle(std::vector<T> &v, Rng &rng) {
    for (size_t i = v.size(); i > 1; --i) {
        std::swap(v[i - 1], v[uniform_index(rng, i)]);
    }
}

/// Random ordered shape grown by expanding uniformly chosen leaf slots.
inline TreeShape random_shape(size_t n, Rng &rng) {
    if (n == 0) {
        throw std::domain_error("a ternary tree needs at least one parent");
    }
    TreeShape shape;
    shape.kids.push_back({-1, -1, -1});
    std::vector<std::pair<int32_t, int>> free_slots{{0, 0}, {0, 1}, {0, 2}};
    while (shape.kids.size() < n) {
        size_t pick = uniform_index(rng, free_slots.size());
        auto [node, slot] = free_slots[pick];
        free_slots.erase(free_slots.begin() + static_cast<std::ptrdiff_t>(pick));
        auto id = static_cast<int32_t>(shape.kids.size());
        shape.kids[node][slot] = id;
        shape.kids.push_back({-1, -1, -1});
        for (int s = 0; s < 3; ++s) {
            free_slots.emplace_back(id, s);
        }
    }
    return shape;
}

/// Random shape with uniformly shuffled qubit and leaf labels.
inline TernaryTree random_tree(size_t n, Rng &rng) {
    TernaryTree base = label_inorder(random_shape(n, rng));
    std::vector<uint32_t> qubits(n);
    std::iota(qubits.begin(), qubits.end(), 0u);
    portable_shuffle(qubits, rng);
    std::vector<uint32_t> leaves(2 * n + 1);
    std::iota(leaves.begin(), leaves.end(), 0u);
    portable_shuffle(leaves, rng);
    TernaryTree relabeled = relabel_qubits(base, qubits);
    std::vector<Children> children = relabeled.all_children();
    for (auto &c : children) {
        for (auto &slot : c) {
            if (slot.is_leaf()) {
                slot.index = leaves[slot.index];
            }
        }
    }
    return TernaryTree(relabeled.root(), std::move(children));
}

}  // namespace cliffmap
