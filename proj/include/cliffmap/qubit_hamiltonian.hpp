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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "cliffmap/clifford.hpp"
#include "cliffmap/fermion.hpp"
#include "cliffmap/majorana_mapping.hpp"
#include "cliffmap/pauli_string.hpp"
#include "cliffmap/rational.hpp"

namespace cliffmap {

inline Complex phase_factor(int phase_exp) {
    static const Complex kPhases[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPhases[((phase_exp % 4) + 4) % 4];
}

/// Linear combination of Pauli strings. Keys carry no phase (it is folded
/// into the coefficient) and terms keep first-insertion order.
class QubitHamiltonian {
   public:
    struct Term {
        PauliString pauli;
        Complex coeff;
    };

    QubitHamiltonian() = default;
    explicit QubitHamiltonian(size_t num_qubits) : num_qubits_(num_qubits) {
    }

    size_t num_qubits() const {
        return num_qubits_;
    }
    size_t size() const {
        return terms_.size();
    }
    bool empty() const {
        return terms_.empty();
    }
    const std::vector<Term> &terms() const {
        return terms_;
    }

    /// Adds coeff * p. A combined coefficient that falls below `tol` removes
    /// the term.
    void add(const PauliString &p, Complex coeff, double tol = kCombineTolerance) {
        if (p.num_qubits() != num_qubits_) {
            throw std::invalid_argument("Pauli string has the wrong qubit count for this Hamiltonian");
        }
        Complex c = coeff * phase_factor(p.phase_exp());
        PauliString key = p.stripped();
        auto it = index_.find(key);
        if (it == index_.end()) {
            if (std::abs(c) >= tol) {
                index_.emplace(key, terms_.size());
                terms_.push_back({std::move(key), c});
            }
            return;
        }
        Complex &slot = terms_[it->second].coeff;
        slot += c;
        if (std::abs(slot) < tol) {
            erase_at(it->second);
        }
    }

    /// Coefficient of the phase-free string `p`; zero if absent.
    Complex coefficient(const PauliString &p) const {
        auto it = index_.find(p.stripped());
        if (it == index_.end()) {
            return {};
        }
        return terms_[it->second].coeff * phase_factor(-p.phase_exp());
    }

    bool contains(const PauliString &p) const {
        return index_.contains(p.stripped());
    }

   private:
    void erase_at(size_t pos) {
        index_.erase(terms_[pos].pauli);
        terms_.erase(terms_.begin() + static_cast<std::ptrdiff_t>(pos));
        for (size_t i = pos; i < terms_.size(); ++i) {
            index_[terms_[i].pauli] = i;
        }
    }

    size_t num_qubits_ = 0;
    std::vector<Term> terms_;
    std::unordered_map<PauliString, size_t, PauliStringHash> index_;
};

inline int64_t total_weight(const QubitHamiltonian &h) {
    int64_t total = 0;
    for (const auto &t : h.terms()) {
        total += static_cast<int64_t>(weight(t.pauli));
    }
    return total;
}

/// Mean Pauli weight over stored terms; the identity string counts as 0.
inline Rational avg_weight(const QubitHamiltonian &h) {
    if (h.empty()) {
        throw std::domain_error("average weight of an empty Hamiltonian");
    }
    return Rational(total_weight(h), static_cast<int64_t>(h.size()));
}

/// Conjugates every term: U H U^dagger for U = gates[last] ... gates[0].
inline QubitHamiltonian apply_sequence(const QubitHamiltonian &h, std::span<const CliffordGate> gates) {
    QubitHamiltonian out(h.num_qubits());
    for (const auto &t : h.terms()) {
        out.add(conjugate_sequence(t.pauli, gates), t.coeff);
    }
    return out;
}

inline QubitHamiltonian apply_sequence(const QubitHamiltonian &h, std::span<const GateUnit> units) {
    return apply_sequence(h, std::span<const CliffordGate>(expand_units(units)));
}

inline QubitHamiltonian operator+(const QubitHamiltonian &a, const QubitHamiltonian &b) {
    QubitHamiltonian out = a;
    for (const auto &t : b.terms()) {
        out.add(t.pauli, t.coeff);
    }
    return out;
}

inline QubitHamiltonian operator*(const QubitHamiltonian &a, const QubitHamiltonian &b) {
    QubitHamiltonian out(a.num_qubits());
    for (const auto &ta : a.terms()) {
        for (const auto &tb : b.terms()) {
            out.add(multiply(ta.pauli, tb.pauli), ta.coeff * tb.coeff);
        }
    }
    return out;
}

inline QubitHamiltonian adjoint(const QubitHamiltonian &h) {
    QubitHamiltonian out(h.num_qubits());
    for (const auto &t : h.terms()) {
        out.add(t.pauli, std::conj(t.coeff));
    }
    return out;
}

/// Termwise comparison with absolute tolerance on coefficients.
inline bool approx_equal(const QubitHamiltonian &a, const QubitHamiltonian &b, double tol = 1e-9) {
    if (a.num_qubits() != b.num_qubits()) {
        return false;
    }
    for (const auto &t : a.terms()) {
        if (std::abs(t.coeff - b.coefficient(t.pauli)) > tol) {
            return false;
        }
    }
    for (const auto &t : b.terms()) {
        if (std::abs(t.coeff - a.coefficient(t.pauli)) > tol) {
            return false;
        }
    }
    return true;
}

inline void check_encodable(const FermionicHamiltonian &hf, const MajoranaMapping &m) {
    if (m.n != hf.n_modes) {
        throw std::invalid_argument("mapping has " + std::to_string(m.n) + " qubits but the Hamiltonian has " +
                                    std::to_string(hf.n_modes) + " modes");
    }
    if (!is_valid_mapping(m)) {
        throw std::invalid_argument("Majorana mapping is not valid (strings must pairwise anticommute)");
    }
}

/// Image of one monomial: coeff times the ordered product of Majorana strings.
inline PauliString monomial_string(const MajoranaMapping &m, const MajoranaMonomial &mono) {
    PauliString p(m.n);
    for (uint32_t idx : mono.indices) {
        p = multiply(p, m.paulis[idx]);
    }
    return p;
}

/// Qubit image of a fermionic operator through `m`.
inline QubitHamiltonian encode(const FermionicHamiltonian &hf, const MajoranaMapping &m) {
    check_encodable(hf, m);
    QubitHamiltonian out(m.n);
    for (const auto &mono : majorana_expand(hf)) {
        out.add(monomial_string(m, mono), mono.coeff);
    }
    return out;
}

/// Image of a single ladder operator, e.g. a_k -> (P_{2k} + i P_{2k+1}) / 2.
inline QubitHamiltonian encode_ladder(const LadderOp &op, const MajoranaMapping &m) {
    if (op.mode >= m.n) {
        throw std::out_of_range("mode out of range for mapping");
    }
    QubitHamiltonian out(m.n);
    out.add(m.paulis[2 * op.mode], 0.5);
    out.add(m.paulis[2 * op.mode + 1], Complex(0, op.creation ? -0.5 : 0.5));
    return out;
}

/// Largest imaginary part among coefficients.
inline double max_imag(const QubitHamiltonian &h) {
    double worst = 0;
    for (const auto &t : h.terms()) {
        worst = std::max(worst, std::abs(t.coeff.imag()));
    }
    return worst;
}

}  // namespace cliffmap
