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

#include <string>

#include "cliffmap/pauli_string.hpp"
#include "cliffmap/random.hpp"

namespace cliffmap::testing {

inline PauliString random_pauli(size_t n, Rng &rng, bool random_phase = true) {
    static const char kLetters[] = "IXYZ";
    std::string text;
    for (size_t q = 0; q < n; ++q) {
        text.push_back(kLetters[uniform_index(rng, 4)]);
    }
    PauliString p = PauliString::from_str(text);
    if (random_phase) {
        p.set_phase_exp(static_cast<int>(uniform_index(rng, 4)));
    }
    return p;
}

inline std::string data_path(const std::string &name) {
    return std::string(CLIFFMAP_TEST_DATA) + "/" + name;
}

}  // namespace cliffmap::testing
