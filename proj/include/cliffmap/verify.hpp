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

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cliffmap/clifford.hpp"
#include "cliffmap/dense_oracle.hpp"
#include "cliffmap/fermion.hpp"
#include "cliffmap/majorana_mapping.hpp"
#include "cliffmap/qubit_hamiltonian.hpp"
#include "cliffmap/random_tree.hpp"
#include "cliffmap/ternary_tree.hpp"
#include "cliffmap/tree_transforms.hpp"

namespace cliffmap {

/// Outcome of one verification suite.
struct SuiteResult {
    explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

    std::string name;
    size_t checks = 0;
    size_t failures = 0;
    /// First few failure descriptions.
    std::vector<std::string> messages;
    /// Free-form remarks printed with the tally.
    std::vector<std::string> notes;

    bool passed() const {
        return checks > 0 && failures == 0;
    }

    void check(bool ok, const std::function<std::string()> &describe) {
        ++checks;
        if (!ok) {
            ++failures;
            if (messages.size() < 10) {
                messages.push_back(describe());
            }
        }
    }
};

// ---- two-qubit action table ----

/// The six gate columns of the two-qubit action table, in application order
/// on qubits (i, j) = (0, 1).
inline std::array<std::vector<CliffordGate>, 6> action_table_columns() {
    auto c01 = CliffordGate::cnot(0, 1);
    auto c10 = CliffordGate::cnot(1, 0);
    return {{{c01},
             {c10},
             {CliffordGate::h(0), c01},
             {CliffordGate::h(0), c10},
             {CliffordGate::s(0), c01},
             {CliffordGate::s(0), c10}}};
}

inline const std::array<const char *, 6> kActionTableHeaders = {"CNOT_ij", "CNOT_ji", "CNOT_ij H_i",
                                                                  "CNOT_ji H_i", "CNOT_ij S_i", "CNOT_ji S_i"};

/// The table as published: input followed by the six images, signs dropped.
inline const std::array<std::array<const char *, 7>, 16> kPublishedActionTable = {{
    {"II", "II", "II", "II", "II", "II", "II"},
    {"IX", "IX", "XX", "IX", "XX", "IX", "XX"},
    {"IY", "ZY", "XY", "ZY", "XY", "ZY", "XY"},
    {"IZ", "ZZ", "IZ", "ZZ", "IZ", "ZZ", "IZ"},
    {"XI", "XX", "XI", "ZI", "ZZ", "YX", "ZY"},
    {"XX", "XI", "IX", "ZX", "YY", "YI", "ZY"},
    {"XY", "YZ", "IY", "IY", "YX", "XZ", "ZX"},
    {"XZ", "YY", "XZ", "IZ", "ZI", "XY", "YI"},
    {"YI", "YX", "YZ", "YX", "YZ", "XX", "XI"},
    {"YX", "YI", "ZY", "YI", "ZY", "XI", "IX"},
    {"YY", "XZ", "ZX", "XZ", "ZX", "YZ", "IY"},
    {"YZ", "XY", "YI", "XY", "YI", "YY", "XZ"},
    {"ZI", "ZI", "ZZ", "XX", "XI", "ZI", "ZZ"},
    {"ZX", "ZX", "YY", "XI", "IX", "ZX", "YY"},
    {"ZY", "IY", "YX", "YZ", "IY", "IY", "YX"},
    {"ZZ", "IZ", "ZI", "YY", "XZ", "IZ", "ZI"},
}};

/// Published entries that cannot be right: the printed XI image under
/// CNOT_ji S_i repeats the XX image in the same column, which no
/// conjugation can do.
struct TableErratum {
    const char *input;
    int column;
    const char *printed;
    const char *corrected;
};

inline const std::array<TableErratum, 1> kActionTableErrata = {{{"XI", 5, "ZY", "YZ"}}};

inline std::string action_table_entry(size_t row, int column) {
    std::string printed = kPublishedActionTable[row][column + 1];
    for (const auto &e : kActionTableErrata) {
        if (e.column == column && kPublishedActionTable[row][0] == std::string(e.input)) {
            return e.corrected;
        }
    }
    return printed;
}

/// Each of the 96 (Pauli, column) pairs: the conjugation routine must agree
/// with dense 4x4 conjugation exactly (sign included) and with the table
/// up to sign.
inline SuiteResult verify_action_table() {
    SuiteResult r{"action-table"};
    auto columns = action_table_columns();
    size_t printed_mismatch = 0;
    for (size_t row = 0; row < kPublishedActionTable.size(); ++row) {
        auto p = PauliString::from_str(kPublishedActionTable[row][0]);
        for (int c = 0; c < 6; ++c) {
            auto fast = conjugate_sequence(p, columns[c]);
            auto dense = dense::conjugate_dense(p, columns[c]);
            std::string expected = action_table_entry(row, c);
            if (dense.str(false) != kPublishedActionTable[row][c + 1]) {
                ++printed_mismatch;
            }
            r.check(fast == dense && fast.str(false) == expected, [&] {
                return p.str(false) + " under " + kActionTableHeaders[c] + ": got " + fast.str() + ", dense " +
                       dense.str() + ", table " + expected;
            });
        }
    }
    for (const auto &e : kActionTableErrata) {
        r.notes.push_back(std::string("published ") + e.input + " under " + kActionTableHeaders[e.column] +
                          " reads " + e.printed + "; dense oracle gives " + e.corrected);
    }
    r.notes.push_back("printed entries disagreeing with the dense oracle: " + std::to_string(printed_mismatch));
    return r;
}

// ---- canonical anticommutation ----

inline QubitHamiltonian anticommutator(const QubitHamiltonian &a, const QubitHamiltonian &b) {
    return a * b + b * a;
}

/// {a_i, a_j} = 0 and {a_i^dagger, a_j} = delta_ij I for the images of the
/// ladder operators under `m`.
inline void check_car(SuiteResult &r, const MajoranaMapping &m, const std::string &label, double tol = 1e-12) {
    size_t n = m.n;
    std::vector<QubitHamiltonian> lower, raise;
    for (uint32_t k = 0; k < n; ++k) {
        lower.push_back(encode_ladder(LadderOp::annihilate(k), m));
        raise.push_back(encode_ladder(LadderOp::create(k), m));
    }
    QubitHamiltonian zero(n);
    QubitHamiltonian identity(n);
    identity.add(PauliString(n), 1.0);
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < n; ++j) {
            r.check(approx_equal(anticommutator(lower[i], lower[j]), zero, tol), [&] {
                return label + ": {a_" + std::to_string(i) + ", a_" + std::to_string(j) + "} != 0";
            });
            r.check(approx_equal(anticommutator(raise[i], lower[j]), i == j ? identity : zero, tol), [&] {
                return label + ": {a_" + std::to_string(i) + "^dag, a_" + std::to_string(j) + "} wrong";
            });
        }
    }
}

inline SuiteResult verify_car(size_t max_n = 8) {
    SuiteResult r{"car"};
    for (size_t n = 1; n <= max_n; ++n) {
        check_car(r, compile(jw_tree(n)), "jw n=" + std::to_string(n));
        check_car(r, compile(bk_tree(n)), "bk n=" + std::to_string(n));
        check_car(r, compile(balanced_tree(n)), "balanced n=" + std::to_string(n));
    }
    return r;
}

// ---- Jordan-Wigner from Bravyi-Kitaev ----

inline SuiteResult verify_jw_bk(size_t lo = 2, size_t hi = 16) {
    SuiteResult r{"jw-bk"};
    for (size_t n = lo; n <= hi; ++n) {
        auto gates = jw_bk_sequence(n);
        r.check(gates.size() < n, [&] {
            return "n=" + std::to_string(n) + ": sequence length " + std::to_string(gates.size());
        });
        auto mapped = conjugate_mapping(compile(bk_tree(n)), gates);
        auto jw = compile(jw_tree(n));
        for (size_t j = 0; j < jw.paulis.size(); ++j) {
            r.check(mapped.paulis[j] == jw.paulis[j], [&] {
                return "n=" + std::to_string(n) + " gamma_" + std::to_string(j + 1) + ": " +
                       mapped.paulis[j].str() + " vs " + jw.paulis[j].str();
            });
        }
    }
    return r;
}

// ---- CNOT rotations ----

/// Random (tree, j, k) instances with j a left or middle child of k.
/// compile(rotated) must equal the CNOT_{jk}-conjugated mapping index by
/// index up to sign. Left rotations must also keep both inorder
/// traversals; middle rotations reorder subtrees, so only the compiled
/// equality applies to them.
inline SuiteResult verify_rotations(size_t instances = 500, size_t max_n = 8, uint64_t seed = 2024) {
    SuiteResult r{"rotations"};
    Rng rng(seed);
    size_t lefts = 0;
    size_t middles = 0;
    while (lefts + middles < instances) {
        size_t n = 2 + uniform_index(rng, max_n - 1);
        TernaryTree t = random_tree(n, rng);
        std::vector<std::tuple<uint32_t, uint32_t, int>> moves;
        for (uint32_t k = 0; k < n; ++k) {
            for (int s : {kLeft, kMiddle}) {
                if (t.child(k, s).is_qubit()) {
                    moves.emplace_back(t.child(k, s).index, k, s);
                }
            }
        }
        if (moves.empty()) {
            continue;  // pure right spine
        }
        auto [j, k, slot] = moves[uniform_index(rng, moves.size())];
        TernaryTree rotated = slot == kLeft ? rotate_left(t, j, k) : rotate_middle(t, j, k);
        std::vector<CliffordGate> gate{CliffordGate::cnot(j, k)};
        auto conj = conjugate_mapping(compile(t), gate);
        auto direct = compile(rotated);
        std::string where = t.str() + " CNOT " + std::to_string(j) + " " + std::to_string(k);
        r.check(same_up_to_sign(conj, direct), [&] { return "compile mismatch for " + where; });
        if (slot == kLeft) {
            ++lefts;
            r.check(rotated.inorder_qubits() == t.inorder_qubits() && rotated.inorder_leaves() == t.inorder_leaves(),
                    [&] { return "inorder changed for " + where; });
        } else {
            ++middles;
        }
    }
    r.notes.push_back(std::to_string(lefts) + " left and " + std::to_string(middles) + " middle rotations");
    return r;
}

// ---- general transforms ----

inline SuiteResult verify_transforms(size_t pairs = 200, size_t max_n = 6, uint64_t seed = 7) {
    SuiteResult r{"transforms"};
    Rng rng(seed);
    for (size_t i = 0; i < pairs; ++i) {
        size_t n = 1 + uniform_index(rng, max_n);
        TernaryTree t1 = random_tree(n, rng);
        TernaryTree t2 = random_tree(n, rng);
        std::string where = t1.str() + " -> " + t2.str();

        auto shape_gates = shape_transform_sequence(t1, t2);
        r.check(shape_gates.size() <= 2 * n - 2, [&] {
            return "shape sequence of length " + std::to_string(shape_gates.size()) + " for " + where;
        });
        auto reached = tree_from_mapping(conjugate_mapping(compile(t1), shape_gates));
        r.check(reached && reached->shape_code() == t2.shape_code(), [&] { return "wrong shape for " + where; });

        auto full = full_transform_sequence(t1, t2);
        auto mapped = conjugate_mapping(compile(t1), full);
        auto target = compile(t2);
        bool exact = true;
        for (size_t j = 0; j < 2 * n; ++j) {
            exact = exact && mapped.paulis[j] == target.paulis[j];
        }
        exact = exact && mapped.paulis[2 * n].same_paulis(target.paulis[2 * n]);
        r.check(exact, [&] { return "full transform mismatch for " + where; });
    }
    return r;
}

// ---- published term counts ----

inline SuiteResult verify_term_counts() {
    SuiteResult r{"term-counts"};
    auto expect = [&](const std::string &label, const FermionicHamiltonian &hf, size_t want) {
        size_t got = encode(hf, compile(jw_tree(hf.n_modes))).size();
        r.check(got == want, [&] {
            return label + ": " + std::to_string(got) + " terms, expected " + std::to_string(want);
        });
    };
    expect("hopping L=6", build_hopping_2d(6), 120);
    expect("hopping L=8", build_hopping_2d(8), 224);
    expect("hubbard L=6", build_hubbard_2d(6), 349);
    return r;
}

inline std::vector<SuiteResult> run_all_suites() {
    return {verify_action_table(), verify_car(), verify_jw_bk(), verify_rotations(), verify_transforms(),
            verify_term_counts()};
}

}  // namespace cliffmap
