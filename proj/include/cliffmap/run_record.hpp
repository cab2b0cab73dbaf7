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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cliffmap/clifford.hpp"
#include "cliffmap/gate_set.hpp"
#include "cliffmap/qubit_hamiltonian.hpp"
#include "cliffmap/rational.hpp"
#include "cliffmap/schedule.hpp"

namespace cliffmap {

/// Average weight divides the total by the (conserved) term count.
enum class CostKind : uint8_t { Average, Total };

inline std::string to_string(CostKind kind) {
    return kind == CostKind::Average ? "avg" : "total";
}

inline CostKind parse_cost_kind(const std::string &name) {
    if (name == "avg" || name == "average") {
        return CostKind::Average;
    }
    if (name == "total") {
        return CostKind::Total;
    }
    throw std::invalid_argument("unknown cost function '" + name + "' (expected avg or total)");
}

inline Rational cost_value(CostKind kind, int64_t total, size_t terms) {
    return kind == CostKind::Average ? Rational(total, static_cast<int64_t>(terms)) : Rational(total);
}

inline Rational cost_of(const QubitHamiltonian &h, CostKind kind) {
    if (h.empty()) {
        throw std::domain_error("cost of an empty Hamiltonian");
    }
    return cost_value(kind, total_weight(h), h.size());
}

/// Everything needed to reproduce and replay one search run.
struct RunRecord {
    std::string algorithm = "sa";
    uint64_t seed = 0;
    GateSetId gate_set = GateSetId::CH;
    Schedule schedule;
    int64_t t_max = 0;
    CostKind cost = CostKind::Average;
    size_t num_qubits = 0;
    size_t num_terms = 0;
    int64_t initial_total = 0;
    int64_t best_total = 0;
    int64_t final_total = 0;
    /// Accepted units in application order.
    std::vector<GateUnit> moves;
    size_t best_prefix_len = 0;
    /// (iteration, current cost) samples.
    std::vector<std::pair<int64_t, double>> cost_trace;

    Rational initial_cost() const {
        return cost_value(cost, initial_total, num_terms);
    }
    Rational best_cost() const {
        return cost_value(cost, best_total, num_terms);
    }
    std::span<const GateUnit> best_moves() const {
        return std::span<const GateUnit>(moves).first(best_prefix_len);
    }

    bool operator==(const RunRecord &) const = default;
};

/// Applies the first best_prefix_len moves of `record` to `initial`.
inline QubitHamiltonian replay_best(const QubitHamiltonian &initial, const RunRecord &record) {
    return apply_sequence(initial, record.best_moves());
}

}  // namespace cliffmap
