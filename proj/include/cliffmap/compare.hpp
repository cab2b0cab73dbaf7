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

#include <optional>
#include <stdexcept>
#include <string>

#include "cliffmap/fermion.hpp"
#include "cliffmap/qubit_hamiltonian.hpp"
#include "cliffmap/rational.hpp"
#include "cliffmap/run_record.hpp"
#include "cliffmap/ternary_tree.hpp"

namespace cliffmap {

/// 1 - optimized / conventional.
inline Rational percent_reduction(const Rational &optimized, const Rational &conventional) {
    if (conventional <= Rational(0)) {
        throw std::domain_error("percent reduction needs a positive conventional weight");
    }
    return Rational(1) - optimized / conventional;
}

inline double percent_reduction(double optimized, double conventional) {
    if (!(conventional > 0)) {
        throw std::domain_error("percent reduction needs a positive conventional weight");
    }
    return 1.0 - optimized / conventional;
}

/// Named conventional tree mapping: "jw", "bk" or "balanced".
inline TernaryTree conventional_tree(const std::string &name, size_t n) {
    if (name == "jw") {
        return jw_tree(n);
    }
    if (name == "bk") {
        return bk_tree(n);
    }
    if (name == "balanced") {
        return balanced_tree(n);
    }
    throw std::invalid_argument("unknown conventional mapping '" + name + "' (expected jw, bk or balanced)");
}

struct ConventionalReport {
    CostKind cost = CostKind::Average;
    size_t num_terms = 0;
    Rational jw;
    Rational bk;
    Rational balanced;
    Rational best;
    std::string best_name;
    std::optional<Rational> optimized;
    /// Reduction of `optimized` against `best`.
    std::optional<Rational> percent_reduction;
};

/// Costs under the Jordan-Wigner, Bravyi-Kitaev and balanced ternary-tree
/// mappings; PR is reported against the lowest of the three.
inline ConventionalReport compare_conventional(const FermionicHamiltonian &hf, CostKind cost,
                                               std::optional<Rational> optimized = std::nullopt) {
    ConventionalReport r;
    r.cost = cost;
    auto jw = encode(hf, compile(jw_tree(hf.n_modes)));
    r.num_terms = jw.size();
    r.jw = cost_of(jw, cost);
    r.bk = cost_of(encode(hf, compile(bk_tree(hf.n_modes))), cost);
    r.balanced = cost_of(encode(hf, compile(balanced_tree(hf.n_modes))), cost);
    r.best = r.jw;
    r.best_name = "jw";
    if (r.bk < r.best) {
        r.best = r.bk;
        r.best_name = "bk";
    }
    if (r.balanced < r.best) {
        r.best = r.balanced;
        r.best_name = "balanced";
    }
    if (optimized) {
        r.optimized = optimized;
        r.percent_reduction = cliffmap::percent_reduction(*optimized, r.best);
    }
    return r;
}

}  // namespace cliffmap
