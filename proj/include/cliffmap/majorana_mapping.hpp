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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffmap/clifford.hpp"
#include "cliffmap/pauli_string.hpp"

namespace cliffmap {

/// Operator-level fermion-to-qubit mapping: paulis[j] is the image of the
/// Majorana operator gamma_{j+1}. Mode k uses paulis[2k] and paulis[2k+1];
/// paulis[2n], when present, is the redundant leaf of a tree mapping.
struct MajoranaMapping {
    size_t n = 0;
    std::vector<PauliString> paulis;
    bool includes_redundant = true;

    size_t num_majoranas() const {
        return paulis.size();
    }

    bool operator==(const MajoranaMapping &other) const = default;
};

/// Structural checks: sizes, Hermiticity and pairwise distinct strings.
inline void check_mapping_shape(const MajoranaMapping &m) {
    size_t expected = 2 * m.n + (m.includes_redundant ? 1 : 0);
    if (m.n == 0 || m.paulis.size() != expected) {
        throw std::invalid_argument(
            "Majorana mapping on " + std::to_string(m.n) + " qubits needs " + std::to_string(expected) +
            " strings, got " + std::to_string(m.paulis.size()));
    }
    for (const auto &p : m.paulis) {
        if (p.num_qubits() != m.n) {
            throw std::invalid_argument("Majorana string has wrong qubit count");
        }
        if (!p.is_hermitian()) {
            throw std::invalid_argument("Majorana string must be Hermitian");
        }
    }
}

/// True when the first 2n strings pairwise anticommute and all strings are
/// distinct, which is what encoding requires.
inline bool is_valid_mapping(const MajoranaMapping &m) {
    try {
        check_mapping_shape(m);
    } catch (const std::invalid_argument &) {
        return false;
    }
    for (size_t a = 0; a < m.paulis.size(); ++a) {
        for (size_t b = a + 1; b < m.paulis.size(); ++b) {
            if (m.paulis[a].same_paulis(m.paulis[b])) {
                return false;
            }
            if (a < 2 * m.n && b < 2 * m.n && !anticommutes(m.paulis[a], m.paulis[b])) {
                return false;
            }
        }
    }
    return true;
}

/// Every pair of distinct strings anticommutes on exactly one qubit.
inline bool is_tree_compatible(const MajoranaMapping &m) {
    for (size_t a = 0; a < m.paulis.size(); ++a) {
        for (size_t b = a + 1; b < m.paulis.size(); ++b) {
            if (m.paulis[a].num_qubits() != m.paulis[b].num_qubits() ||
                anticommute_count(m.paulis[a], m.paulis[b]) != 1) {
                return false;
            }
        }
    }
    return true;
}

inline MajoranaMapping conjugate_mapping(MajoranaMapping m, std::span<const CliffordGate> gates) {
    for (auto &p : m.paulis) {
        p = conjugate_sequence(std::move(p), gates);
    }
    return m;
}

/// Equality of every string with phases ignored.
inline bool same_up_to_sign(const MajoranaMapping &a, const MajoranaMapping &b) {
    if (a.n != b.n || a.paulis.size() != b.paulis.size()) {
        return false;
    }
    for (size_t j = 0; j < a.paulis.size(); ++j) {
        if (!a.paulis[j].same_paulis(b.paulis[j])) {
            return false;
        }
    }
    return true;
}

}  // namespace cliffmap
