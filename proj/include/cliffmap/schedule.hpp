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

namespace cliffmap {

/// beta(t) = log(c1 + c2 t) * c3 / C(B) for t > t_min and 0 before, where
/// C(B) is the current cost.
struct Schedule {
    double c1 = 1.0;
    double c2 = 1.0;
    double c3 = 1.0;
    int64_t t_min = 0;

    bool operator==(const Schedule &) const = default;
};

inline double beta(double t, const Schedule &s, double current_cost) {
    if (!(current_cost > 0)) {
        throw std::domain_error("annealing schedule needs a positive current cost");
    }
    if (t <= static_cast<double>(s.t_min)) {
        return 0.0;
    }
    return std::log(s.c1 + s.c2 * t) * s.c3 / current_cost;
}

}  // namespace cliffmap
