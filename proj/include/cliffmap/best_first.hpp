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
#include <chrono>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "cliffmap/gate_set.hpp"
#include "cliffmap/qubit_hamiltonian.hpp"
#include "cliffmap/run_record.hpp"
#include "cliffmap/weight_tableau.hpp"

namespace cliffmap {

struct BfsBudget {
    /// Maximum number of expanded (popped) nodes.
    uint64_t max_nodes = 10000;
    /// Wall-clock limit in seconds; 0 means none. Timeouts make runs
    /// machine dependent.
    double timeout_seconds = 0;
};

/// Best-first search: repeatedly expands the cheapest queued circuit and
/// queues every child whose cost is strictly lower than its parent's. Ties
/// in the queue pop in insertion order. Returns the best circuit found when
/// the queue empties or the budget runs out.
inline RunRecord bfs_run(const QubitHamiltonian &h, GateSetId gs, CostKind cost, const BfsBudget &budget = {}) {
    if (h.empty()) {
        throw std::invalid_argument("best-first search needs a nonempty Hamiltonian");
    }
    size_t n = h.num_qubits();
    if (n < 2) {
        throw std::domain_error("best-first search needs at least 2 qubits");
    }
    struct Node {
        int64_t parent;
        GateUnit unit;
        int64_t total;
    };
    // Circuits are stored as parent links; states are rebuilt on expansion.
    std::vector<Node> arena;
    using Entry = std::tuple<int64_t, uint64_t, int64_t>;  // (total, sequence number, node)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;

    const WeightTableau root_state(h);
    arena.push_back({-1, GateUnit{}, root_state.total_weight()});
    queue.emplace(arena[0].total, 0, 0);
    uint64_t sequence = 1;
    int64_t best_node = 0;

    auto path_to = [&](int64_t node) {
        std::vector<GateUnit> path;
        for (int64_t v = node; arena[v].parent >= 0; v = arena[v].parent) {
            path.push_back(arena[v].unit);
        }
        std::reverse(path.begin(), path.end());
        return path;
    };

    const auto start = std::chrono::steady_clock::now();
    const uint64_t units = unit_count(gs, n);
    uint64_t expanded = 0;
    while (!queue.empty() && expanded < budget.max_nodes) {
        if (budget.timeout_seconds > 0) {
            std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
            if (elapsed.count() >= budget.timeout_seconds) {
                break;
            }
        }
        auto [total, seq, node] = queue.top();
        queue.pop();
        ++expanded;
        WeightTableau state = root_state;
        for (const auto &u : path_to(node)) {
            state.apply(u);
        }
        for (uint64_t i = 0; i < units; ++i) {
            GateUnit u = unit_at(gs, n, i);
            int64_t child_total = state.propose(u);
            if (child_total < total) {
                arena.push_back({node, u, child_total});
                auto child = static_cast<int64_t>(arena.size() - 1);
                queue.emplace(child_total, sequence++, child);
                if (child_total < arena[best_node].total) {
                    best_node = child;
                }
            }
        }
    }

    RunRecord rec;
    rec.algorithm = "bfs";
    rec.gate_set = gs;
    rec.cost = cost;
    rec.t_max = static_cast<int64_t>(expanded);
    rec.num_qubits = n;
    rec.num_terms = h.size();
    rec.initial_total = arena[0].total;
    rec.best_total = arena[best_node].total;
    rec.final_total = rec.best_total;
    rec.moves = path_to(best_node);
    rec.best_prefix_len = rec.moves.size();
    return rec;
}

}  // namespace cliffmap
