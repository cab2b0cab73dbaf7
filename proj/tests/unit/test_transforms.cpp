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

#include <gtest/gtest.h>

#include <algorithm>

#include "cliffmap/random_tree.hpp"
#include "cliffmap/tree_transforms.hpp"

using namespace cliffmap;

namespace {

bool exact_up_to_redundant_sign(const MajoranaMapping &got, const MajoranaMapping &want) {
    size_t n = want.n;
    for (size_t j = 0; j < 2 * n; ++j) {
        if (!(got.paulis[j] == want.paulis[j])) {
            return false;
        }
    }
    return got.paulis[2 * n].same_paulis(want.paulis[2 * n]);
}

std::vector<size_t> sorted_weights(const MajoranaMapping &m) {
    std::vector<size_t> w;
    for (const auto &p : m.paulis) {
        w.push_back(weight(p));
    }
    std::sort(w.begin(), w.end());
    return w;
}

bool single_qubit_only(const std::vector<CliffordGate> &gates) {
    return std::none_of(gates.begin(), gates.end(), [](const CliffordGate &g) { return g.is_two_qubit(); });
}

}  // namespace

TEST(JwBkSequence, SmallCases) {
    EXPECT_TRUE(jw_bk_sequence(1).empty());
    auto two = jw_bk_sequence(2);
    ASSERT_EQ(two.size(), 1u);
    EXPECT_TRUE(two[0].is_two_qubit());
}

TEST(JwBkSequence, ExactAndShorterThanN) {
    for (size_t n = 2; n <= 16; ++n) {
        auto gates = jw_bk_sequence(n);
        EXPECT_LT(gates.size(), n);
        EXPECT_TRUE(std::all_of(gates.begin(), gates.end(), [](const CliffordGate &g) { return g.is_two_qubit(); }));
        auto mapped = conjugate_mapping(compile(bk_tree(n)), gates);
        auto jw = compile(jw_tree(n));
        for (size_t j = 0; j < jw.paulis.size(); ++j) {
            EXPECT_EQ(mapped.paulis[j], jw.paulis[j]) << "n=" << n << " j=" << j;
        }
    }
}

TEST(ReduceToSpine, EndsOnJordanWignerShape) {
    Rng rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        auto t = random_tree(1 + uniform_index(rng, 8), rng);
        auto red = reduce_to_spine(t);
        EXPECT_LE(red.gates.size(), t.num_qubits() - 1);
        EXPECT_EQ(red.spine.shape_code(), jw_tree(t.num_qubits()).shape_code());
        auto reached = tree_from_mapping(conjugate_mapping(compile(t), red.gates));
        ASSERT_TRUE(reached.has_value());
        EXPECT_EQ(*reached, red.spine);
    }
}

TEST(ShapeTransform, IdenticalTreesNeedNothing) {
    EXPECT_TRUE(shape_transform_sequence(bk_tree(6), bk_tree(6)).empty());
}

TEST(ShapeTransform, JordanWignerToBalancedFive) {
    auto gates = shape_transform_sequence(jw_tree(5), balanced_tree(5));
    auto m = conjugate_mapping(compile(jw_tree(5)), gates);
    EXPECT_TRUE(is_tree_compatible(m));
    EXPECT_EQ(sorted_weights(m), (std::vector<size_t>{2, 2, 2, 2, 2, 2, 2, 2, 3, 3, 3}));
    auto reached = tree_from_mapping(m);
    ASSERT_TRUE(reached.has_value());
    EXPECT_EQ(reached->shape_code(), balanced_tree(5).shape_code());
}

TEST(ShapeTransform, LengthBoundOnRandomPairs) {
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        size_t n = 1 + uniform_index(rng, 7);
        auto t1 = random_tree(n, rng);
        auto t2 = random_tree(n, rng);
        auto gates = shape_transform_sequence(t1, t2);
        EXPECT_LE(gates.size(), 2 * n - 2);
        auto reached = tree_from_mapping(conjugate_mapping(compile(t1), gates));
        ASSERT_TRUE(reached.has_value());
        EXPECT_EQ(reached->shape_code(), t2.shape_code());
    }
}

TEST(FullTransform, IdenticalTreesNeedNothing) {
    EXPECT_TRUE(full_transform_sequence(balanced_tree(7), balanced_tree(7)).empty());
}

TEST(FullTransform, QubitLabelSwapIsThreeCnots) {
    auto t1 = bk_tree(5);
    auto t2 = relabel_qubits(t1, {0, 3, 2, 1, 4});
    auto gates = full_transform_sequence(t1, t2);
    ASSERT_EQ(gates.size(), 3u);
    EXPECT_TRUE(std::all_of(gates.begin(), gates.end(), [](const CliffordGate &g) { return g.is_two_qubit(); }));
    EXPECT_TRUE(exact_up_to_redundant_sign(conjugate_mapping(compile(t1), gates), compile(t2)));
}

TEST(FullTransform, LeafPermutationOnOneNodeUsesSingleQubitGates) {
    auto t1 = jw_tree(3);
    auto children = t1.all_children();
    for (const auto &perm : std::vector<std::array<int, 3>>{{1, 0, 2}, {2, 1, 0}, {1, 2, 0}}) {
        auto c = children;
        Children old = c[2];
        for (int s = 0; s < 3; ++s) {
            c[2][s] = old[perm[s]];
        }
        TernaryTree t2(t1.root(), c);
        auto gates = full_transform_sequence(t1, t2);
        EXPECT_TRUE(single_qubit_only(gates));
        EXPECT_TRUE(exact_up_to_redundant_sign(conjugate_mapping(compile(t1), gates), compile(t2)));
    }
}

TEST(FullTransform, RandomPairsExact) {
    Rng rng(77);
    for (int trial = 0; trial < 300; ++trial) {
        size_t n = 1 + uniform_index(rng, 7);
        auto t1 = random_tree(n, rng);
        auto t2 = random_tree(n, rng);
        auto gates = full_transform_sequence(t1, t2);
        EXPECT_TRUE(exact_up_to_redundant_sign(conjugate_mapping(compile(t1), gates), compile(t2)))
            << t1.str() << " -> " << t2.str();
    }
}
