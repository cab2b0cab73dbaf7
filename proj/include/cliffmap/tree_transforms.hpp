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

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cliffmap/clifford.hpp"
#include "cliffmap/majorana_mapping.hpp"
#include "cliffmap/ternary_tree.hpp"

namespace cliffmap {

struct SpineReduction {
    std::vector<CliffordGate> gates;
    TernaryTree spine;
};

/// Rotates every parent onto the right spine with CNOTs. Left children of
/// spine nodes use the left rotation and middle children the middle one;
/// each gate adds one node to the spine, so at most n-1 gates are emitted.
inline SpineReduction reduce_to_spine(const TernaryTree &tree) {
    SpineReduction out{{}, tree};
    bool changed = true;
    while (changed) {
        changed = false;
        uint32_t k = out.spine.root();
        while (true) {
            const auto &c = out.spine.children(k);
            if (c[kLeft].is_qubit()) {
                uint32_t j = c[kLeft].index;
                out.spine = rotate_left(out.spine, j, k);
                out.gates.push_back(CliffordGate::cnot(j, k));
                changed = true;
                break;
            }
            if (c[kMiddle].is_qubit()) {
                uint32_t j = c[kMiddle].index;
                out.spine = rotate_middle(out.spine, j, k);
                out.gates.push_back(CliffordGate::cnot(j, k));
                changed = true;
                break;
            }
            if (!c[kRight].is_qubit()) {
                break;
            }
            k = c[kRight].index;
        }
    }
    return out;
}

/// Qubits along the right spine, top to bottom.
inline std::vector<uint32_t> spine_order(const TernaryTree &tree) {
    std::vector<uint32_t> order{tree.root()};
    while (tree.child(order.back(), kRight).is_qubit()) {
        order.push_back(tree.child(order.back(), kRight).index);
    }
    return order;
}

/// CNOT sequence whose conjugation turns compile(bk_tree(n)) into
/// compile(jw_tree(n)).
inline std::vector<CliffordGate> jw_bk_sequence(size_t n) {
    return reduce_to_spine(bk_tree(n)).gates;
}

namespace detail {

inline std::vector<CliffordGate> relabel_gates(const std::vector<CliffordGate> &gates,
                                               const std::vector<uint32_t> &label) {
    std::vector<CliffordGate> out = gates;
    for (auto &g : out) {
        g.q0 = label.at(g.q0);
        if (g.is_two_qubit()) {
            g.q1 = label.at(g.q1);
        }
    }
    return out;
}

inline void check_same_size(const TernaryTree &a, const TernaryTree &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("trees have different qubit counts");
    }
}

/// Applies `gates` to the mapping of `tree` and reads the tree back.
inline TernaryTree apply_to_tree(const TernaryTree &tree, const std::vector<CliffordGate> &gates) {
    auto rebuilt = tree_from_mapping(conjugate_mapping(compile(tree), gates));
    if (!rebuilt) {
        throw std::logic_error("gate sequence left the space of tree mappings");
    }
    return *rebuilt;
}

/// Solves for a Pauli operator F with <F, P_j> = flips[j] (symplectic form)
/// over GF(2) for linearly independent P_0..P_{m-1}; returns gates that
/// conjugate by F.
inline std::vector<CliffordGate> sign_fix_gates(const std::vector<PauliString> &paulis,
                                                const std::vector<bool> &flips) {
    size_t n = paulis.front().num_qubits();
    size_t rows = paulis.size();
    size_t cols = 2 * n;  // unknowns: x_0..x_{n-1}, z_0..z_{n-1} of F
    std::vector<std::vector<uint8_t>> a(rows, std::vector<uint8_t>(cols + 1, 0));
    for (size_t r = 0; r < rows; ++r) {
        for (size_t q = 0; q < n; ++q) {
            a[r][q] = paulis[r].z(q);      // F.x_q * P.z_q
            a[r][n + q] = paulis[r].x(q);  // F.z_q * P.x_q
        }
        a[r][cols] = flips[r];
    }
    std::vector<size_t> pivot_col;
    size_t rank = 0;
    for (size_t c = 0; c < cols && rank < rows; ++c) {
        size_t sel = rank;
        while (sel < rows && !a[sel][c]) {
            ++sel;
        }
        if (sel == rows) {
            continue;
        }
        std::swap(a[sel], a[rank]);
        for (size_t r = 0; r < rows; ++r) {
            if (r != rank && a[r][c]) {
                for (size_t k = c; k <= cols; ++k) {
                    a[r][k] ^= a[rank][k];
                }
            }
        }
        pivot_col.push_back(c);
        ++rank;
    }
    for (size_t r = rank; r < rows; ++r) {
        if (a[r][cols]) {
            throw std::logic_error("sign pattern is not reachable by a Pauli correction");
        }
    }
    std::vector<uint8_t> f(cols, 0);
    for (size_t r = 0; r < rank; ++r) {
        f[pivot_col[r]] = a[r][cols];
    }
    std::vector<CliffordGate> gates;
    for (uint32_t q = 0; q < n; ++q) {
        if (f[q]) {  // X_q = H Z_q H
            for (auto g : {CliffordGate::h(q), CliffordGate::s(q), CliffordGate::s(q), CliffordGate::h(q)}) {
                gates.push_back(g);
            }
        }
        if (f[n + q]) {  // Z_q = S S
            gates.push_back(CliffordGate::s(q));
            gates.push_back(CliffordGate::s(q));
        }
    }
    return gates;
}

}  // namespace detail

/// CNOT sequence (at most 2n-2 gates) whose conjugation turns compile(t1)
/// into a tree mapping with exactly the ordered shape of t2. Qubit and leaf
/// labels of the result are not constrained.
inline std::vector<CliffordGate> shape_transform_sequence(const TernaryTree &t1, const TernaryTree &t2) {
    detail::check_same_size(t1, t2);
    if (t1.shape_code() == t2.shape_code()) {
        return {};
    }
    auto first = reduce_to_spine(t1);
    auto second = reduce_to_spine(t2);
    auto order1 = spine_order(first.spine);
    auto order2 = spine_order(second.spine);
    // Rename t2's qubits so its spine visits qubits in the same order as t1's.
    std::vector<uint32_t> rename(t1.num_qubits());
    for (size_t i = 0; i < order2.size(); ++i) {
        rename[order2[i]] = order1[i];
    }
    auto back = invert_sequence(detail::relabel_gates(second.gates, rename));
    std::vector<CliffordGate> gates = std::move(first.gates);
    gates.insert(gates.end(), back.begin(), back.end());
    return gates;
}

namespace detail {

/// Qubit labels in preorder, which lines up parents of equal ordered shapes.
inline std::vector<uint32_t> preorder_qubits(const TernaryTree &tree) {
    std::vector<uint32_t> out;
    std::vector<uint32_t> stack{tree.root()};
    while (!stack.empty()) {
        uint32_t q = stack.back();
        stack.pop_back();
        out.push_back(q);
        for (int s = 2; s >= 0; --s) {
            if (tree.child(q, s).is_qubit()) {
                stack.push_back(tree.child(q, s).index);
            }
        }
    }
    return out;
}

/// Single-qubit words realizing the six permutations of a node's children.
inline std::vector<std::vector<CliffordGate>> child_permutation_words(uint32_t q) {
    auto s = CliffordGate::s(q);
    auto h = CliffordGate::h(q);
    return {{}, {s}, {h}, {s, h, s}, {s, h}, {h, s}};
}

}  // namespace detail

/// Clifford sequence over {CNOT, H, S, SDG} whose conjugation maps
/// compile(t1) onto compile(t2) string by string, signs included for
/// gamma_1..gamma_{2n}. The redundant gamma_{2n+1} is matched up to sign.
///
/// Trees of equal ordered shape are first aligned with SWAPs (three CNOTs
/// each) and per-node single-qubit words. Anything else goes through the
/// Jordan-Wigner spine: rotate onto the spine, permute qubits and leaves
/// there, and undo the target's own spine reduction.
inline std::vector<CliffordGate> full_transform_sequence(const TernaryTree &t1, const TernaryTree &t2) {
    detail::check_same_size(t1, t2);
    if (t1 == t2) {
        return {};
    }
    size_t n = t1.num_qubits();
    std::vector<CliffordGate> gates;
    TernaryTree current = t1;
    auto append = [&](const std::vector<CliffordGate> &more) {
        gates.insert(gates.end(), more.begin(), more.end());
        current = detail::apply_to_tree(current, more);
    };

    if (t1.shape_code() == t2.shape_code()) {
        auto want = detail::preorder_qubits(t2);
        for (size_t i = 0; i < n; ++i) {
            uint32_t have = detail::preorder_qubits(current)[i];
            if (have != want[i]) {
                append(swap_gates(have, want[i]));
            }
        }
        for (uint32_t q = 0; q < n && current != t2; ++q) {
            if (current.children(q) == t2.children(q)) {
                continue;
            }
            for (const auto &word : detail::child_permutation_words(q)) {
                auto trial = detail::apply_to_tree(current, word);
                if (trial.children(q) == t2.children(q)) {
                    gates.insert(gates.end(), word.begin(), word.end());
                    current = trial;
                    break;
                }
            }
        }
    }

    if (current != t2) {
        auto first = reduce_to_spine(current);
        auto second = reduce_to_spine(t2);
        gates.insert(gates.end(), first.gates.begin(), first.gates.end());
        current = first.spine;

        // Put the qubits on the spine in the target order with SWAPs.
        auto target_order = spine_order(second.spine);
        for (size_t i = 0; i < n; ++i) {
            auto order = spine_order(current);
            if (order[i] != target_order[i]) {
                append(swap_gates(order[i], target_order[i]));
            }
        }

        // Leaf slots along the spine: (q, left), (q, middle) per spine node
        // and (last, right) at the end. Adjacent slots are transposed with
        // short Clifford words, bubble-sorting leaves into their target slots.
        auto order = spine_order(current);
        std::vector<std::pair<uint32_t, int>> slots;
        for (uint32_t q : order) {
            slots.emplace_back(q, kLeft);
            slots.emplace_back(q, kMiddle);
        }
        slots.emplace_back(order.back(), kRight);
        auto leaf_at = [](const TernaryTree &t, std::pair<uint32_t, int> slot) {
            return t.child(slot.first, slot.second).index;
        };
        std::vector<size_t> target_pos(2 * n + 1);
        for (size_t p = 0; p < slots.size(); ++p) {
            target_pos[leaf_at(second.spine, slots[p])] = p;
        }
        auto swap_adjacent = [&](size_t p) {
            uint32_t q = slots[p].first;
            if (slots[p].second == kLeft) {  // (q,L) <-> (q,M)
                append({CliffordGate::s(q)});
            } else if (p + 2 == slots.size()) {  // (last,M) <-> (last,R)
                append({CliffordGate::s(q), CliffordGate::h(q), CliffordGate::s(q)});
            } else {  // (q,M) <-> (next,L): S conjugates the left-left exchange
                uint32_t next = slots[p + 1].first;
                append({CliffordGate::s(q), CliffordGate::cnot(q, next), CliffordGate::h(q),
                        CliffordGate::cnot(q, next), CliffordGate::s(q)});
            }
        };
        for (size_t pass = 0; pass < slots.size(); ++pass) {
            for (size_t p = 0; p + 1 < slots.size(); ++p) {
                if (target_pos[leaf_at(current, slots[p])] > target_pos[leaf_at(current, slots[p + 1])]) {
                    swap_adjacent(p);
                }
            }
        }
        if (current != second.spine) {
            throw std::logic_error("leaf permutation did not reach the target spine");
        }
        auto back = invert_sequence(second.gates);
        gates.insert(gates.end(), back.begin(), back.end());
    }

    auto reached = conjugate_mapping(compile(t1), gates);
    auto target = compile(t2);
    std::vector<PauliString> generators(target.paulis.begin(), target.paulis.begin() + 2 * n);
    std::vector<bool> flips(2 * n);
    bool any_flip = false;
    for (size_t j = 0; j < 2 * n; ++j) {
        flips[j] = reached.paulis[j].phase_exp() != target.paulis[j].phase_exp();
        any_flip = any_flip || flips[j];
    }
    if (any_flip) {
        auto fix = detail::sign_fix_gates(generators, flips);
        gates.insert(gates.end(), fix.begin(), fix.end());
    }
    return gates;
}

}  // namespace cliffmap
