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

#include "cliffmap/dense_oracle.hpp"
#include "cliffmap/qubit_hamiltonian.hpp"
#include "cliffmap/random_tree.hpp"
#include "cliffmap/serialization.hpp"
#include "cliffmap/verify.hpp"
#include "helpers.hpp"

using namespace cliffmap;

namespace {

// Jordan-Wigner built directly from matrices: a_j = Z x ... x Z x |0><1| x I ...
dense::Matrix dense_ladder(size_t n, const LadderOp &op) {
    dense::Matrix lower(2);
    lower(0, 1) = 1;
    dense::Matrix out = dense::Matrix::identity(1);
    for (size_t q = 0; q < n; ++q) {
        dense::Matrix f = q < op.mode ? dense::single_qubit('Z') : q == op.mode ? lower : dense::single_qubit('I');
        out = dense::kron(out, f);
    }
    return op.creation ? dense::adjoint(out) : out;
}

dense::Matrix dense_fermionic(const FermionicHamiltonian &h) {
    size_t dim = size_t{1} << h.n_modes;
    dense::Matrix sum(dim);
    for (const auto &t : h.terms) {
        dense::Matrix prod = dense::Matrix::identity(dim);
        for (const auto &op : t.ops) {
            prod = prod * dense_ladder(h.n_modes, op);
        }
        sum = sum + t.coeff * prod;
    }
    return sum;
}

dense::Matrix dense_qubit(const QubitHamiltonian &h) {
    dense::Matrix sum(size_t{1} << h.num_qubits());
    for (const auto &t : h.terms()) {
        sum = sum + t.coeff * dense::pauli_matrix(t.pauli);
    }
    return sum;
}

FermionicHamiltonian random_fermionic(size_t n, Rng &rng) {
    FermionicHamiltonian h{n, {}, false};
    for (int k = 0; k < 5; ++k) {
        FermionicTerm t;
        t.coeff = Complex(uniform_unit(rng) - 0.5, uniform_unit(rng) - 0.5);
        size_t len = 1 + uniform_index(rng, 4);
        for (size_t i = 0; i < len; ++i) {
            t.ops.push_back({uniform_index(rng, 2) == 1, static_cast<uint32_t>(uniform_index(rng, n))});
        }
        h.terms.push_back(t);
    }
    return h;
}

std::vector<double> sorted_magnitudes(const QubitHamiltonian &h) {
    std::vector<double> out;
    for (const auto &t : h.terms()) {
        out.push_back(std::abs(t.coeff));
    }
    std::sort(out.begin(), out.end());
    return out;
}

QubitHamiltonian from_strings(std::initializer_list<const char *> strings) {
    QubitHamiltonian h(PauliString::from_str(*strings.begin()).num_qubits());
    for (const char *s : strings) {
        h.add(PauliString::from_str(s), 1.0);
    }
    return h;
}

}  // namespace

TEST(Encode, NumberOperator) {
    FermionicHamiltonian h{1, {{1.0, {LadderOp::create(0), LadderOp::annihilate(0)}}}, true};
    auto q = encode(h, compile(jw_tree(1)));
    ASSERT_EQ(q.size(), 2u);
    EXPECT_NEAR(std::abs(q.coefficient(PauliString::from_str("I")) - 0.5), 0, 1e-15);
    EXPECT_NEAR(std::abs(q.coefficient(PauliString::from_str("Z")) + 0.5), 0, 1e-15);
}

TEST(Encode, NearestNeighborHopping) {
    auto q = encode(build_hopping_1d(2, 1), compile(jw_tree(2)));
    ASSERT_EQ(q.size(), 2u);
    EXPECT_NEAR(std::abs(q.coefficient(PauliString::from_str("XX")) - 0.5), 0, 1e-15);
    EXPECT_NEAR(std::abs(q.coefficient(PauliString::from_str("YY")) - 0.5), 0, 1e-15);
}

TEST(Encode, LoneAnnihilator) {
    auto q = encode(build_single_ops(1), compile(jw_tree(1)));
    EXPECT_NEAR(std::abs(q.coefficient(PauliString::from_str("X")) - 0.5), 0, 1e-15);
    EXPECT_NEAR(std::abs(q.coefficient(PauliString::from_str("Y")) - Complex(0, 0.5)), 0, 1e-15);
}

TEST(Encode, JordanWignerMatchesDenseConstruction) {
    Rng rng(6);
    for (int trial = 0; trial < 40; ++trial) {
        size_t n = 1 + uniform_index(rng, 3);
        auto hf = random_fermionic(n, rng);
        auto q = encode(hf, compile(jw_tree(n)));
        EXPECT_LT(dense::max_abs_diff(dense_qubit(q), dense_fermionic(hf)), 1e-12);
    }
}

TEST(Encode, ModeMismatchThrows) {
    EXPECT_THROW(encode(build_exchange(), compile(jw_tree(3))), std::invalid_argument);
}

TEST(Encode, HermitianInputGivesRealCoefficients) {
    Rng rng(2);
    for (const auto &hf : {build_hopping_1d(6, 3), build_hubbard_2d(2), build_exchange(), build_hopping_2d(3)}) {
        for (int trial = 0; trial < 5; ++trial) {
            auto q = encode(hf, compile(random_tree(hf.n_modes, rng)));
            EXPECT_LT(max_imag(q), 1e-12);
        }
    }
}

TEST(Encode, ExchangeUnderJordanWigner) {
    auto q = encode(build_exchange(), compile(jw_tree(4)));
    EXPECT_EQ(q.size(), 8u);
    for (const auto &t : q.terms()) {
        EXPECT_EQ(weight(t.pauli), 4u);
    }
    EXPECT_EQ(total_weight(q), 32);
}

TEST(Encode, PublishedTermCounts) {
    EXPECT_EQ(encode(build_hopping_2d(6), compile(jw_tree(36))).size(), 120u);
    EXPECT_EQ(encode(build_hopping_2d(8), compile(jw_tree(64))).size(), 224u);
    EXPECT_EQ(encode(build_hubbard_2d(6), compile(jw_tree(72))).size(), 349u);
    for (size_t L = 2; L <= 4; ++L) {
        size_t want = 1 + 2 * L * L + L * L + 8 * L * (L - 1);
        EXPECT_EQ(encode(build_hubbard_2d(L), compile(jw_tree(2 * L * L))).size(), want);
    }
    EXPECT_EQ(encode(build_hubbard_2d(3), compile(balanced_tree(18))).size(), 76u);
}

TEST(Encode, HubbardStringClasses) {
    auto q = encode(build_hubbard_2d(6), compile(jw_tree(72)));
    size_t identity = 0, single_z = 0, zz = 0, other = 0;
    for (const auto &t : q.terms()) {
        std::string s = t.pauli.str(false);
        bool only_z = s.find_first_of("XY") == std::string::npos;
        size_t w = weight(t.pauli);
        if (w == 0) {
            ++identity;
        } else if (only_z && w == 1) {
            ++single_z;
        } else if (only_z && w == 2) {
            ++zz;
        } else {
            ++other;
        }
    }
    EXPECT_EQ(identity, 1u);
    EXPECT_EQ(single_z, 72u);
    EXPECT_EQ(zz, 36u);
    EXPECT_EQ(other, 240u);
}

TEST(Encode, HydrogenFixture) {
    auto hf = load_fermionic_json(cliffmap::testing::data_path("h2_sto3g_0735.json"));
    EXPECT_EQ(hf.n_modes, 4u);
    auto q = encode(hf, compile(jw_tree(4)));
    EXPECT_EQ(q.size(), 15u);
    EXPECT_EQ(total_weight(q), 32);
    EXPECT_LT(max_imag(q), 1e-12);
}

TEST(Encode, TermCountIndependentOfMapping) {
    Rng rng(14);
    auto hf = build_hubbard_2d(2);
    size_t want = encode(hf, compile(jw_tree(8))).size();
    for (int trial = 0; trial < 20; ++trial) {
        EXPECT_EQ(encode(hf, compile(random_tree(8, rng))).size(), want);
    }
}

TEST(Car, DenseCheckForSmallTrees) {
    Rng rng(1);
    for (size_t n = 1; n <= 3; ++n) {
        auto m = compile(random_tree(n, rng));
        std::vector<dense::Matrix> lower, raise;
        for (uint32_t k = 0; k < n; ++k) {
            lower.push_back(dense_qubit(encode_ladder(LadderOp::annihilate(k), m)));
            raise.push_back(dense_qubit(encode_ladder(LadderOp::create(k), m)));
        }
        size_t dim = size_t{1} << n;
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = 0; j < n; ++j) {
                auto ll = lower[i] * lower[j] + lower[j] * lower[i];
                EXPECT_LT(dense::max_abs_diff(ll, dense::Matrix(dim)), 1e-12);
                auto rl = raise[i] * lower[j] + lower[j] * raise[i];
                EXPECT_LT(dense::max_abs_diff(rl, i == j ? dense::Matrix::identity(dim) : dense::Matrix(dim)), 1e-12);
            }
        }
    }
}

TEST(Car, SymbolicSuiteOnConventionalTrees) {
    auto r = verify_car(8);
    EXPECT_TRUE(r.passed()) << (r.messages.empty() ? "" : r.messages.front());
    EXPECT_EQ(r.checks, 3u * 2u * (1 + 4 + 9 + 16 + 25 + 36 + 49 + 64));
}

TEST(Car, RandomTreesSymbolic) {
    Rng rng(23);
    SuiteResult r("random");
    for (int trial = 0; trial < 20; ++trial) {
        check_car(r, compile(random_tree(1 + uniform_index(rng, 6), rng)), "random");
    }
    EXPECT_TRUE(r.passed());
}

TEST(Weights, Examples) {
    auto h = from_strings({"XX", "YY"});
    EXPECT_EQ(avg_weight(h), Rational(2));
    EXPECT_EQ(total_weight(h), 4);
    EXPECT_THROW(avg_weight(QubitHamiltonian(2)), std::domain_error);
    auto chain = encode(build_hopping_1d(8, 1), compile(jw_tree(8)));
    EXPECT_EQ(avg_weight(chain), Rational(2));
}

TEST(Weights, DualChainCount) {
    QubitHamiltonian h(8);
    for (size_t i = 0; i < 8; ++i) {
        h.add(PauliString::single(8, i, 'X'), 1.0);
    }
    for (size_t i = 0; i + 2 < 8; ++i) {
        PauliString p(8);
        p.set(i, false, true);
        p.set(i + 2, false, true);
        h.add(p, 1.0);
    }
    EXPECT_EQ(h.size(), 14u);
    EXPECT_EQ(total_weight(h), 20);
    EXPECT_EQ(avg_weight(h), Rational(10, 7));
}

TEST(QubitHamiltonian, CombinesAndDropsCancelledTerms) {
    QubitHamiltonian h(2);
    h.add(PauliString::from_str("XY"), 1.0);
    h.add(PauliString::from_str("-XY"), 1.0);
    EXPECT_TRUE(h.empty());
    h.add(PauliString::from_str("+iZZ"), 2.0);
    EXPECT_NEAR(std::abs(h.coefficient(PauliString::from_str("ZZ")) - Complex(0, 2)), 0, 1e-15);
}

TEST(ApplySequence, PreservesTermsAndMagnitudes) {
    Rng rng(40);
    auto h = encode(build_hubbard_2d(2), compile(jw_tree(8)));
    std::vector<CliffordGate> gates;
    for (int k = 0; k < 30; ++k) {
        uint32_t a = static_cast<uint32_t>(uniform_index(rng, 8));
        uint32_t b = static_cast<uint32_t>((a + 1 + uniform_index(rng, 7)) % 8);
        gates.push_back(k % 3 == 0 ? CliffordGate::h(a) : k % 3 == 1 ? CliffordGate::s(a) : CliffordGate::cnot(a, b));
    }
    auto g = apply_sequence(h, std::span<const CliffordGate>(gates));
    EXPECT_EQ(g.size(), h.size());
    EXPECT_EQ(sorted_magnitudes(g), sorted_magnitudes(h));
    auto back = apply_sequence(g, std::span<const CliffordGate>(invert_sequence(gates)));
    EXPECT_TRUE(approx_equal(back, h, 1e-14));
    EXPECT_TRUE(approx_equal(apply_sequence(h, std::span<const CliffordGate>()), h, 0));
}

TEST(ApplySequence, MatchesDenseConjugation) {
    Rng rng(41);
    auto h = encode(build_hopping_1d(3, 2), compile(bk_tree(3)));
    std::vector<CliffordGate> gates{CliffordGate::cnot(0, 2), CliffordGate::h(1), CliffordGate::s(2),
                                    CliffordGate::cnot(1, 0)};
    dense::Matrix u = dense::Matrix::identity(8);
    for (const auto &g : gates) {
        u = dense::gate_matrix(g, 3) * u;
    }
    auto want = u * dense_qubit(h) * dense::adjoint(u);
    EXPECT_LT(dense::max_abs_diff(dense_qubit(apply_sequence(h, std::span<const CliffordGate>(gates))), want), 1e-12);
}
