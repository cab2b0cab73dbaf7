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
#include <stdexcept>
#include <string>

#include "cliffmap/clifford.hpp"
#include "cliffmap/random.hpp"

namespace cliffmap {

/// C: CNOT_ij. CH: adds CNOT_ij H_i. CHS: adds CNOT_ij S_i as well.
enum class GateSetId : uint8_t { C, CH, CHS };

inline std::string to_string(GateSetId gs) {
    switch (gs) {
        case GateSetId::C:
            return "C";
        case GateSetId::CH:
            return "CH";
        case GateSetId::CHS:
            return "CHS";
    }
    return "?";
}

inline GateSetId parse_gate_set(const std::string &name) {
    if (name == "C") {
        return GateSetId::C;
    }
    if (name == "CH") {
        return GateSetId::CH;
    }
    if (name == "CHS") {
        return GateSetId::CHS;
    }
    throw std::invalid_argument("unknown gate set '" + name + "' (expected C, CH or CHS)");
}

/// Number of units: n(n-1) per unit kind.
inline uint64_t unit_count(GateSetId gs, size_t n) {
    uint64_t pairs = static_cast<uint64_t>(n) * (n - 1);
    return pairs * (static_cast<uint64_t>(gs) + 1);
}

/// The index-th unit of the set; CNOT units come first, then CNOT-H, then
/// CNOT-S, each ordered by (control, target).
inline GateUnit unit_at(GateSetId gs, size_t n, uint64_t index) {
    if (n < 2) {
        throw std::domain_error("gate sets need at least 2 qubits");
    }
    if (index >= unit_count(gs, n)) {
        throw std::out_of_range("gate unit index out of range");
    }
    uint64_t pairs = static_cast<uint64_t>(n) * (n - 1);
    GateUnit u;
    u.kind = static_cast<GateUnit::Kind>(index / pairs);
    uint64_t pair = index % pairs;
    u.control = static_cast<uint32_t>(pair / (n - 1));
    uint32_t t = static_cast<uint32_t>(pair % (n - 1));
    u.target = t >= u.control ? t + 1 : t;
    return u;
}

/// Uniform draw from the gate set.
inline GateUnit sample_unit(GateSetId gs, size_t n, Rng &rng) {
    if (n < 2) {
        throw std::domain_error("gate sets need at least 2 qubits");
    }
    return unit_at(gs, n, uniform_index(rng, unit_count(gs, n)));
}

}  // namespace cliffmap
