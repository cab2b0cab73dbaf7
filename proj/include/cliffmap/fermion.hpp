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
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliffmap {

using Complex = std::complex<double>;

/// Coefficients with magnitude below this are treated as zero.
inline constexpr double kCombineTolerance = 1e-12;

struct LadderOp {
    bool creation = false;
    uint32_t mode = 0;

    static LadderOp create(uint32_t mode) {
        return {true, mode};
    }
    static LadderOp annihilate(uint32_t mode) {
        return {false, mode};
    }
    auto operator<=>(const LadderOp &) const = default;
};

/// coeff times the ordered product of ladder operators (leftmost first).
struct FermionicTerm {
    Complex coeff{1, 0};
    std::vector<LadderOp> ops;
};

inline FermionicTerm hermitian_conjugate(const FermionicTerm &term) {
    FermionicTerm out;
    out.coeff = std::conj(term.coeff);
    for (auto it = term.ops.rbegin(); it != term.ops.rend(); ++it) {
        out.ops.push_back({!it->creation, it->mode});
    }
    return out;
}

struct FermionicHamiltonian {
    size_t n_modes = 0;
    std::vector<FermionicTerm> terms;
    bool hermitian = true;
};

inline void add_hopping(FermionicHamiltonian &h, uint32_t i, uint32_t j, Complex coeff) {
    h.terms.push_back({coeff, {LadderOp::create(i), LadderOp::annihilate(j)}});
    h.terms.push_back({std::conj(coeff), {LadderOp::create(j), LadderOp::annihilate(i)}});
}

/// Unit-coefficient hopping a_i^dagger a_j over all pairs 0 < |i - j| <= r.
inline FermionicHamiltonian build_hopping_1d(size_t sites, size_t range) {
    if (range < 1 || range >= sites) {
        throw std::domain_error("hopping range must satisfy 1 <= r < N");
    }
    FermionicHamiltonian h{sites, {}, true};
    for (uint32_t i = 0; i < sites; ++i) {
        for (uint32_t j = i + 1; j < sites && j - i <= range; ++j) {
            add_hopping(h, i, j, 1.0);
        }
    }
    return h;
}

/// Mode index of lattice site (row, col) under the snake enumeration:
/// row-major, with odd rows traversed right to left.
inline uint32_t snake_index(size_t side, size_t row, size_t col) {
    return static_cast<uint32_t>(row * side + (row % 2 == 0 ? col : side - 1 - col));
}

/// Nearest-neighbor edges of an open L x L square lattice, as snake indices.
inline std::vector<std::pair<uint32_t, uint32_t>> square_lattice_edges(size_t side) {
    std::vector<std::pair<uint32_t, uint32_t>> edges;
    for (size_t r = 0; r < side; ++r) {
        for (size_t c = 0; c < side; ++c) {
            if (c + 1 < side) {
                edges.emplace_back(snake_index(side, r, c), snake_index(side, r, c + 1));
            }
            if (r + 1 < side) {
                edges.emplace_back(snake_index(side, r, c), snake_index(side, r + 1, c));
            }
        }
    }
    return edges;
}

inline FermionicHamiltonian build_hopping_2d(size_t side) {
    if (side < 2) {
        throw std::domain_error("lattice side must be at least 2");
    }
    FermionicHamiltonian h{side * side, {}, true};
    for (auto [a, b] : square_lattice_edges(side)) {
        add_hopping(h, a, b, 1.0);
    }
    return h;
}

/// Spinful Hubbard model on the L x L lattice: -t hopping within each spin
/// species plus U n_up n_down on every site. Modes are interleaved, mode
/// 2*site + spin with spin 0 = up.
inline FermionicHamiltonian build_hubbard_2d(size_t side, double t = 1.0, double u = 1.0) {
    if (side < 2) {
        throw std::domain_error("lattice side must be at least 2");
    }
    size_t sites = side * side;
    FermionicHamiltonian h{2 * sites, {}, true};
    for (auto [a, b] : square_lattice_edges(side)) {
        for (uint32_t spin = 0; spin < 2; ++spin) {
            add_hopping(h, 2 * a + spin, 2 * b + spin, -t);
        }
    }
    for (uint32_t s = 0; s < sites; ++s) {
        h.terms.push_back({u,
                           {LadderOp::create(2 * s), LadderOp::annihilate(2 * s), LadderOp::create(2 * s + 1),
                            LadderOp::annihilate(2 * s + 1)}});
    }
    return h;
}

/// Sum of lone annihilation operators; not Hermitian.
inline FermionicHamiltonian build_single_ops(size_t n) {
    if (n == 0) {
        throw std::domain_error("single-operator sum needs n >= 1");
    }
    FermionicHamiltonian h{n, {}, false};
    for (uint32_t k = 0; k < n; ++k) {
        h.terms.push_back({1.0, {LadderOp::annihilate(k)}});
    }
    return h;
}

/// a_0^dagger a_1^dagger a_2 a_3 + h.c. on four modes.
inline FermionicHamiltonian build_exchange() {
    FermionicHamiltonian h{4, {}, true};
    FermionicTerm term{1.0,
                       {LadderOp::create(0), LadderOp::create(1), LadderOp::annihilate(2), LadderOp::annihilate(3)}};
    h.terms.push_back(term);
    h.terms.push_back(hermitian_conjugate(term));
    return h;
}

/// coeff times gamma_{i_1} gamma_{i_2} ... with strictly increasing indices
/// (0-based: mode k owns gamma indices 2k and 2k+1).
struct MajoranaMonomial {
    std::vector<uint32_t> indices;
    Complex coeff;
};

/// Rewrites the Hamiltonian in the Majorana basis using
/// a_k = (g_{2k} + i g_{2k+1}) / 2 and a_k^dagger = (g_{2k} - i g_{2k+1}) / 2,
/// with anticommutation and g^2 = 1. Monomials come out sorted by indices.
inline std::vector<MajoranaMonomial> majorana_expand(const FermionicHamiltonian &h,
                                                     double tol = kCombineTolerance) {
    std::map<std::vector<uint32_t>, Complex> acc;
    std::vector<uint32_t> word;
    for (const auto &term : h.terms) {
        size_t m = term.ops.size();
        for (uint64_t choice = 0; choice < (uint64_t{1} << m); ++choice) {
            Complex c = term.coeff;
            word.clear();
            for (size_t i = 0; i < m; ++i) {
                const auto &op = term.ops[i];
                bool odd = (choice >> i) & 1;
                word.push_back(2 * op.mode + (odd ? 1 : 0));
                c *= odd ? Complex(0, op.creation ? -0.5 : 0.5) : Complex(0.5, 0);
            }
            // Bubble sort; each exchange of distinct Majoranas flips the sign.
            bool negative = false;
            for (size_t a = 0; a < word.size(); ++a) {
                for (size_t b = 0; b + 1 < word.size() - a; ++b) {
                    if (word[b] > word[b + 1]) {
                        std::swap(word[b], word[b + 1]);
                        negative = !negative;
                    }
                }
            }
            std::vector<uint32_t> reduced;
            for (uint32_t idx : word) {
                if (!reduced.empty() && reduced.back() == idx) {
                    reduced.pop_back();
                } else {
                    reduced.push_back(idx);
                }
            }
            acc[reduced] += negative ? -c : c;
        }
    }
    std::vector<MajoranaMonomial> out;
    for (auto &[indices, coeff] : acc) {
        if (std::abs(coeff) >= tol) {
            out.push_back({indices, coeff});
        }
    }
    return out;
}

/// True when the operator equals its adjoint. Checked on the Majorana
/// expansion: a sorted monomial of k Majoranas is Hermitian up to the sign
/// (-1)^{k(k-1)/2}, so each coefficient must be real or imaginary to match.
/// Catches dangling conjugates as well as terms like n_i n_j whose adjoint
/// is written with a different operator order.
inline bool is_hermitian_closed(const FermionicHamiltonian &h, double tol = 1e-9) {
    for (const auto &mono : majorana_expand(h)) {
        size_t k = mono.indices.size();
        Complex adj = std::conj(mono.coeff) * ((k * (k - 1) / 2) % 2 == 0 ? 1.0 : -1.0);
        if (std::abs(adj - mono.coeff) > tol * std::max(1.0, std::abs(mono.coeff))) {
            return false;
        }
    }
    return true;
}

/// Checks mode indices and, for Hermitian-flagged input, closure.
inline void validate(const FermionicHamiltonian &h) {
    if (h.n_modes == 0) {
        throw std::invalid_argument("fermionic Hamiltonian needs at least one mode");
    }
    for (const auto &t : h.terms) {
        if (t.ops.size() % 2 != 0 && h.hermitian) {
            throw std::invalid_argument("Hermitian Hamiltonian term has an odd number of ladder operators");
        }
        for (const auto &op : t.ops) {
            if (op.mode >= h.n_modes) {
                throw std::out_of_range("mode " + std::to_string(op.mode) + " out of range for " +
                                        std::to_string(h.n_modes) + " modes");
            }
        }
    }
    if (h.hermitian && !is_hermitian_closed(h)) {
        throw std::invalid_argument("Hamiltonian is flagged Hermitian but is not closed under conjugation");
    }
}

}  // namespace cliffmap
