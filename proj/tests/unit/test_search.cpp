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

#include <cmath>
#include <map>
#include <set>

#include "cliffmap/annealing.hpp"
#include "cliffmap/best_first.hpp"
#include "cliffmap/compare.hpp"
#include "cliffmap/random_tree.hpp"
#include "cliffmap/weight_tableau.hpp"

using namespace cliffmap;

namespace {

QubitHamiltonian jw_encoded(const FermionicHamiltonian &hf) {
    return encode(hf, compile(jw_tree(hf.n_modes)));
}

}  // namespace

TEST(GateSet, UnitCountsAndEnumeration) {
    for (size_t n = 2; n <= 6; ++n) {
        for (auto gs : {GateSetId::C, GateSetId::CH, GateSetId::CHS}) {
            uint64_t k = static_cast<uint64_t>(gs) + 1;
            ASSERT_EQ(unit_count(gs, n), k * n * (n - 1));
            std::set<std::string> seen;
            for (uint64_t i = 0; i < unit_count(gs, n); ++i) {
                auto u = unit_at(gs, n, i);
                EXPECT_NE(u.control, u.target);
                EXPECT_LT(u.control, n);
                EXPECT_LT(u.target, n);
                if (gs == GateSetId::C) {
                    EXPECT_EQ(u.kind, GateUnit::Kind::CNOT);
                }
                if (gs == GateSetId::CH) {
                    EXPECT_NE(u.kind, GateUnit::Kind::CNOT_S);
                }
                seen.insert(u.str());
            }
            EXPECT_EQ(seen.size(), unit_count(gs, n));
        }
    }
    EXPECT_THROW(parse_gate_set("X"), std::invalid_argument);
    EXPECT_EQ(parse_gate_set("CHS"), GateSetId::CHS);
}

TEST(GateSet, SampleUnitNeedsTwoQubits) {
    Rng rng(0);
    EXPECT_THROW(sample_unit(GateSetId::C, 1, rng), std::domain_error);
}

TEST(GateSet, TwoQubitCnotSamplingIsFair) {
    Rng rng(1);
    int first = 0;
    const int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        auto u = sample_unit(GateSetId::C, 2, rng);
        first += u.control == 0;
    }
    // Binomial(1e5, 1/2): standard deviation ~158.
    EXPECT_NEAR(first, draws / 2, 4 * 158);
}

TEST(GateSet, ChiSquaredUniformity) {
    Rng rng(2);
    const int draws = 100000;
    std::map<std::string, int> counts;
    for (int i = 0; i < draws; ++i) {
        counts[sample_unit(GateSetId::CHS, 3, rng).str()]++;
    }
    ASSERT_EQ(counts.size(), 18u);
    double expected = draws / 18.0;
    double chi2 = 0;
    for (const auto &[unit, c] : counts) {
        chi2 += (c - expected) * (c - expected) / expected;
    }
    // 17 degrees of freedom: mean 17, standard deviation sqrt(34).
    EXPECT_LT(chi2, 17 + 4 * std::sqrt(34.0));
}

TEST(Schedule, BetaExamples) {
    Schedule s{1, 1, 2, 10};
    EXPECT_EQ(beta(5, s, 4.0), 0.0);
    EXPECT_EQ(beta(10, s, 4.0), 0.0);
    Schedule flat{1, 0, 1, 0};
    EXPECT_EQ(beta(1000, flat, 3.0), 0.0);
    Schedule ex{1, 1, 2, 0};
    EXPECT_NEAR(beta(std::exp(1.0) - 1, ex, 4.0), 0.5, 1e-12);
    EXPECT_THROW(beta(1, ex, 0.0), std::domain_error);
    EXPECT_THROW(beta(1, ex, -1.0), std::domain_error);
}

TEST(Schedule, NonDecreasingInTime) {
    Schedule s{1, 0.5, 3, 0};
    double prev = 0;
    for (int t = 1; t < 1000; ++t) {
        double b = beta(t, s, 2.5);
        EXPECT_GE(b, prev);
        prev = b;
    }
}

TEST(Metropolis, DownhillAlwaysAccepted) {
    Rng rng(3);
    for (int i = 0; i < 100; ++i) {
        EXPECT_TRUE(metropolis_accept(-1.0, 1e9, rng));
        EXPECT_TRUE(metropolis_accept(0.0, 1e9, rng));
    }
}

TEST(Metropolis, InfiniteTemperatureAcceptsEverything) {
    Rng rng(4);
    for (int i = 0; i < 100; ++i) {
        EXPECT_TRUE(metropolis_accept(5.0, 0.0, rng));
    }
}

TEST(Metropolis, UphillFrequencyMatchesBoltzmann) {
    Rng rng(5);
    const int draws = 200000;
    const double b = 0.7, delta = 2.0;
    int accepted = 0;
    for (int i = 0; i < draws; ++i) {
        accepted += metropolis_accept(delta, b, rng);
    }
    double p = std::exp(-b * delta);
    double sd = std::sqrt(draws * p * (1 - p));
    EXPECT_NEAR(accepted, draws * p, 4 * sd);
}

TEST(WeightTableau, MatchesExplicitConjugation) {
    Rng rng(6);
    auto h = jw_encoded(build_hubbard_2d(2));
    WeightTableau tab(h);
    auto current = h;
    EXPECT_EQ(tab.total_weight(), total_weight(h));
    for (int step = 0; step < 400; ++step) {
        auto u = sample_unit(GateSetId::CHS, h.num_qubits(), rng);
        std::vector<GateUnit> one{u};
        auto next = apply_sequence(current, std::span<const GateUnit>(one));
        EXPECT_EQ(tab.propose(u), total_weight(next));
        if (step % 2 == 0) {
            tab.accept();
            current = next;
        }
        EXPECT_EQ(tab.total_weight(), total_weight(current));
    }
    for (size_t i = 0; i < current.size(); ++i) {
        for (size_t q = 0; q < current.num_qubits(); ++q) {
            EXPECT_EQ(tab.letter(i, q), current.terms()[i].pauli.letter(q));
        }
    }
}

TEST(WeightTableau, ManyTermsAcrossWords) {
    Rng rng(7);
    auto h = jw_encoded(build_hopping_1d(12, 11));  // 132 terms
    ASSERT_GT(h.size(), 128u);
    WeightTableau tab(h);
    auto current = h;
    for (int step = 0; step < 100; ++step) {
        auto u = sample_unit(GateSetId::CH, 12, rng);
        tab.apply(u);
        std::vector<GateUnit> one{u};
        current = apply_sequence(current, std::span<const GateUnit>(one));
        ASSERT_EQ(tab.total_weight(), total_weight(current));
    }
}

TEST(Annealing, DeterministicGivenSeed) {
    auto h = jw_encoded(build_hopping_1d(6, 2));
    SaOptions opt;
    opt.t_max = 20000;
    opt.seed = 42;
    opt.schedule.c3 = 5;
    auto a = sa_run(h, opt);
    auto b = sa_run(h, opt);
    EXPECT_EQ(a, b);
    opt.seed = 43;
    auto c = sa_run(h, opt);
    EXPECT_NE(a.moves, c.moves);
}

TEST(Annealing, BestIsReplayableAndNeverWorse) {
    for (uint64_t seed = 0; seed < 5; ++seed) {
        auto h = jw_encoded(build_hopping_2d(3));
        SaOptions opt;
        opt.t_max = 20000;
        opt.seed = seed;
        opt.gate_set = GateSetId::CHS;
        opt.schedule.c3 = 10;
        auto rec = sa_run(h, opt);
        EXPECT_LE(rec.best_cost(), rec.initial_cost());
        auto replayed = replay_best(h, rec);
        EXPECT_EQ(total_weight(replayed), rec.best_total);
        EXPECT_EQ(replayed.size(), h.size());
        auto final_state = apply_sequence(h, std::span<const GateUnit>(rec.moves));
        EXPECT_EQ(total_weight(final_state), rec.final_total);
        EXPECT_EQ(rec.cost_trace.size(), 20u);
    }
}

TEST(Annealing, ZeroBetaAcceptsEveryProposal) {
    auto h = jw_encoded(build_hopping_1d(5, 1));
    SaOptions opt;
    opt.t_max = 500;
    opt.schedule = Schedule{1, 0, 1, 0};
    auto rec = sa_run(h, opt);
    EXPECT_EQ(rec.moves.size(), 500u);
}

TEST(Annealing, RejectsBadInput) {
    SaOptions opt;
    EXPECT_THROW(sa_run(QubitHamiltonian(3), opt), std::invalid_argument);
    opt.t_max = 0;
    EXPECT_THROW(sa_run(jw_encoded(build_exchange()), opt), std::invalid_argument);
}

TEST(Annealing, SingleOperatorOptimumFourQubits) {
    auto hf = build_single_ops(4);
    auto h = jw_encoded(hf);
    Rational best(100);
    for (uint64_t seed = 0; seed < 10; ++seed) {
        SaOptions opt;
        opt.gate_set = GateSetId::C;
        opt.t_max = 100000;
        opt.seed = seed;
        opt.schedule.c3 = 20;
        best = std::min(best, sa_run(h, opt).best_cost());
    }
    EXPECT_EQ(best, single_op_avg_weight(balanced_tree(4)));
    EXPECT_EQ(best, Rational(2));
}

TEST(BestFirst, LocalMinimumReturnsNoMoves) {
    QubitHamiltonian h(3);
    h.add(PauliString::from_str("XII"), 1.0);
    h.add(PauliString::from_str("IZI"), 1.0);
    h.add(PauliString::from_str("IIY"), 1.0);
    auto rec = bfs_run(h, GateSetId::CHS, CostKind::Average);
    EXPECT_TRUE(rec.moves.empty());
    EXPECT_EQ(rec.best_total, 3);
}

TEST(BestFirst, MonotoneAlongReturnedPath) {
    auto h = jw_encoded(build_hopping_1d(4, 1));
    auto rec = bfs_run(h, GateSetId::CH, CostKind::Average, {2000, 0});
    int64_t prev = rec.initial_total;
    WeightTableau tab(h);
    for (const auto &u : rec.moves) {
        tab.apply(u);
        EXPECT_LT(tab.total_weight(), prev);
        prev = tab.total_weight();
    }
    EXPECT_EQ(prev, rec.best_total);
    EXPECT_EQ(total_weight(replay_best(h, rec)), rec.best_total);
}

TEST(BestFirst, ExchangeReachesTreeOptimum) {
    auto rec = bfs_run(jw_encoded(build_exchange()), GateSetId::CH, CostKind::Total, {10000, 0});
    EXPECT_LE(rec.best_total, 20);
}

TEST(BestFirst, Deterministic) {
    auto h = jw_encoded(build_hopping_1d(5, 2));
    EXPECT_EQ(bfs_run(h, GateSetId::CH, CostKind::Average, {500, 0}),
              bfs_run(h, GateSetId::CH, CostKind::Average, {500, 0}));
}

TEST(PercentReduction, Examples) {
    EXPECT_EQ(percent_reduction(Rational(3), Rational(3)), Rational(0));
    EXPECT_EQ(percent_reduction(Rational(10, 7), Rational(2)), Rational(2, 7));
    EXPECT_EQ(percent_reduction(Rational(26), Rational(32)), Rational(3, 16));
    EXPECT_DOUBLE_EQ(percent_reduction(26.0, 32.0), 0.1875);
    EXPECT_THROW(percent_reduction(Rational(1), Rational(0)), std::domain_error);
    EXPECT_THROW(percent_reduction(1.0, -2.0), std::domain_error);
}

TEST(CompareConventional, Examples) {
    auto chain = compare_conventional(build_hopping_1d(8, 1), CostKind::Average);
    EXPECT_EQ(chain.jw, Rational(2));
    auto single = compare_conventional(build_single_ops(4), CostKind::Average, Rational(2));
    EXPECT_EQ(single.jw, Rational(5, 2));
    EXPECT_EQ(single.balanced, Rational(2));
    EXPECT_EQ(single.best_name, "balanced");
    EXPECT_EQ(*single.percent_reduction, Rational(0));
    auto ex = compare_conventional(build_exchange(), CostKind::Total);
    EXPECT_GE(ex.best, Rational(20));
}
