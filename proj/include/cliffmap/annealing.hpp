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

#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "cliffmap/gate_set.hpp"
#include "cliffmap/qubit_hamiltonian.hpp"
#include "cliffmap/random.hpp"
#include "cliffmap/run_record.hpp"
#include "cliffmap/schedule.hpp"
#include "cliffmap/weight_tableau.hpp"

namespace cliffmap {

struct SaOptions {
    GateSetId gate_set = GateSetId::CH;
    Schedule schedule;
    int64_t t_max = 100000;
    uint64_t seed = 0;
    CostKind cost = CostKind::Average;
    /// Cost-trace sampling period in iterations; 0 disables the trace.
    int64_t trace_every = 1000;
};

/// Metropolis acceptance test for a cost change `delta` at inverse
/// temperature `b`. Draws from the engine only when delta > 0.
inline bool metropolis_accept(double delta, double b, Rng &rng) {
    if (delta <= 0) {
        return true;
    }
    return uniform_unit(rng) < std::exp(-b * delta);
}

/// Simulated annealing over Clifford conjugations of `h`. Each iteration
/// samples one unit from the gate set and accepts it with probability
/// min(1, exp(-beta(t) dC)). The best cost seen and the length of the move
/// prefix reaching it are tracked alongside the final state.
inline RunRecord sa_run(const QubitHamiltonian &h, const SaOptions &opt) {
    if (h.empty()) {
        throw std::invalid_argument("annealing needs a nonempty Hamiltonian");
    }
    if (opt.t_max < 1) {
        throw std::invalid_argument("annealing needs t_max >= 1");
    }
    size_t n = h.num_qubits();
    if (n < 2) {
        throw std::domain_error("annealing needs at least 2 qubits");
    }
    RunRecord rec;
    rec.algorithm = "sa";
    rec.seed = opt.seed;
    rec.gate_set = opt.gate_set;
    rec.schedule = opt.schedule;
    rec.t_max = opt.t_max;
    rec.cost = opt.cost;
    rec.num_qubits = n;
    rec.num_terms = h.size();

    WeightTableau tableau(h);
    Rng rng(opt.seed);
    // Average and total cost differ by the constant term count.
    const double scale = opt.cost == CostKind::Average ? 1.0 / static_cast<double>(h.size()) : 1.0;
    int64_t current = tableau.total_weight();
    rec.initial_total = current;
    rec.best_total = current;

    for (int64_t t = 1; t <= opt.t_max; ++t) {
        if (current == 0) {
            break;  // nothing left to reduce
        }
        GateUnit unit = sample_unit(opt.gate_set, n, rng);
        int64_t proposed = tableau.propose(unit);
        double delta = static_cast<double>(proposed - current) * scale;
        bool accepted =
            delta <= 0 ||
            metropolis_accept(delta, beta(static_cast<double>(t), opt.schedule, static_cast<double>(current) * scale),
                              rng);
        if (accepted) {
            tableau.accept();
            current = proposed;
            rec.moves.push_back(unit);
            if (current < rec.best_total) {
                rec.best_total = current;
                rec.best_prefix_len = rec.moves.size();
            }
        }
        if (opt.trace_every > 0 && t % opt.trace_every == 0) {
            rec.cost_trace.emplace_back(t, static_cast<double>(current) * scale);
        }
    }
    rec.final_total = current;
    return rec;
}

}  // namespace cliffmap
