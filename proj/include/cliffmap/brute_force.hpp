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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "cliffmap/fermion.hpp"
#include "cliffmap/rational.hpp"
#include "cliffmap/tree_enumeration.hpp"

namespace cliffmap {

struct TreeSearchReport {
    uint64_t mappings = 0;
    size_t num_terms = 0;
    int64_t min_total = std::numeric_limits<int64_t>::max();
    std::optional<TernaryTree> argmin;

    Rational min_avg() const {
        return Rational(min_total, static_cast<int64_t>(num_terms));
    }
};

/// Exhaustive minimum of the encoded total weight over every ternary-tree
/// mapping on hf.n_modes qubits. Majorana monomials are expanded once; each
/// distinct monomial maps to a distinct string under any valid mapping, so
/// per mapping only the weight of each monomial's string product is needed.
inline TreeSearchReport brute_force_trees(const FermionicHamiltonian &hf, size_t bound = kDefaultMappingBound) {
    validate(hf);
    MappingEnumerator it(hf.n_modes, bound);
    auto monomials = majorana_expand(hf);
    TreeSearchReport report;
    report.num_terms = monomials.size();
    size_t words = it.position_strings().front().num_words();
    std::vector<uint32_t> position_of(2 * hf.n_modes + 1);
    std::vector<uint64_t> xs(words), zs(words);
    while (it.next()) {
        const auto &labels = it.labels();
        for (size_t p = 0; p < labels.size(); ++p) {
            position_of[labels[p]] = static_cast<uint32_t>(p);
        }
        const auto &strings = it.position_strings();
        int64_t total = 0;
        for (const auto &mono : monomials) {
            std::fill(xs.begin(), xs.end(), 0);
            std::fill(zs.begin(), zs.end(), 0);
            for (uint32_t idx : mono.indices) {
                const auto &p = strings[position_of[idx]];
                for (size_t w = 0; w < words; ++w) {
                    xs[w] ^= p.x_words()[w];
                    zs[w] ^= p.z_words()[w];
                }
            }
            for (size_t w = 0; w < words; ++w) {
                total += std::popcount(xs[w] | zs[w]);
            }
            if (total >= report.min_total) {
                break;
            }
        }
        if (total < report.min_total) {
            report.min_total = total;
            report.argmin = it.tree();
        }
    }
    report.mappings = it.count();
    return report;
}

}  // namespace cliffmap
