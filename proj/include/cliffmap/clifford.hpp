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

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cliffmap/pauli_string.hpp"

namespace cliffmap {

enum class GateKind : uint8_t { H, S, SDG, CNOT };

/// An elementary Clifford gate. Single-qubit gates use `q0` only; CNOT uses
/// `q0` as control and `q1` as target. SDG only appears in inverses.
struct CliffordGate {
    GateKind kind = GateKind::H;
    uint32_t q0 = 0;
    uint32_t q1 = 0;

    static CliffordGate h(uint32_t q) {
        return {GateKind::H, q, 0};
    }
    static CliffordGate s(uint32_t q) {
        return {GateKind::S, q, 0};
    }
    static CliffordGate sdg(uint32_t q) {
        return {GateKind::SDG, q, 0};
    }
    static CliffordGate cnot(uint32_t control, uint32_t target) {
        if (control == target) {
            throw std::invalid_argument("CNOT control and target must differ");
        }
        return {GateKind::CNOT, control, target};
    }

    bool is_two_qubit() const {
        return kind == GateKind::CNOT;
    }

    bool operator==(const CliffordGate &other) const {
        return kind == other.kind && q0 == other.q0 && (!is_two_qubit() || q1 == other.q1);
    }

    /// Circuit-file form: "H q", "S q", "SDG q" or "CNOT c t".
    std::string str() const {
        switch (kind) {
            case GateKind::H:
                return "H " + std::to_string(q0);
            case GateKind::S:
                return "S " + std::to_string(q0);
            case GateKind::SDG:
                return "SDG " + std::to_string(q0);
            case GateKind::CNOT:
                return "CNOT " + std::to_string(q0) + " " + std::to_string(q1);
        }
        return {};
    }

    static CliffordGate parse(const std::string &line) {
        std::istringstream in(line);
        std::string name;
        in >> name;
        long long a = -1, b = -1;
        if (!(in >> a) || a < 0) {
            throw std::invalid_argument("malformed gate line: '" + line + "'");
        }
        CliffordGate g;
        if (name == "CNOT") {
            if (!(in >> b) || b < 0) {
                throw std::invalid_argument("CNOT needs control and target: '" + line + "'");
            }
            g = cnot(static_cast<uint32_t>(a), static_cast<uint32_t>(b));
        } else if (name == "H") {
            g = h(static_cast<uint32_t>(a));
        } else if (name == "S") {
            g = s(static_cast<uint32_t>(a));
        } else if (name == "SDG") {
            g = sdg(static_cast<uint32_t>(a));
        } else {
            throw std::invalid_argument("unknown gate '" + name + "'");
        }
        std::string rest;
        if (in >> rest) {
            throw std::invalid_argument("trailing tokens in gate line: '" + line + "'");
        }
        return g;
    }
};

inline void check_gate(const PauliString &p, const CliffordGate &g) {
    p.check_index(g.q0);
    if (g.is_two_qubit()) {
        p.check_index(g.q1);
        if (g.q0 == g.q1) {
            throw std::invalid_argument("CNOT control and target must differ");
        }
    }
}

/// In-place p -> g p g^dagger with exact phase tracking.
inline void conjugate_inplace(PauliString &p, const CliffordGate &g) {
    check_gate(p, g);
    switch (g.kind) {
        case GateKind::H: {
            bool x = p.x(g.q0), z = p.z(g.q0);
            if (x && z) {
                p.add_phase_exp(2);
            }
            p.set(g.q0, z, x);
            break;
        }
        case GateKind::S: {
            bool x = p.x(g.q0), z = p.z(g.q0);
            if (x && z) {
                p.add_phase_exp(2);
            }
            p.set(g.q0, x, z ^ x);
            break;
        }
        case GateKind::SDG: {
            bool x = p.x(g.q0), z = p.z(g.q0);
            if (x && !z) {
                p.add_phase_exp(2);
            }
            p.set(g.q0, x, z ^ x);
            break;
        }
        case GateKind::CNOT: {
            bool xc = p.x(g.q0), zc = p.z(g.q0);
            bool xt = p.x(g.q1), zt = p.z(g.q1);
            if (xc && zt && (xt == zc)) {
                p.add_phase_exp(2);
            }
            p.set(g.q1, xt ^ xc, zt);
            p.set(g.q0, xc, zc ^ zt);
            break;
        }
    }
}

inline PauliString conjugate(PauliString p, const CliffordGate &g) {
    conjugate_inplace(p, g);
    return p;
}

/// Conjugates by every gate in order; gates[0] acts first.
inline PauliString conjugate_sequence(PauliString p, std::span<const CliffordGate> gates) {
    for (const auto &g : gates) {
        conjugate_inplace(p, g);
    }
    return p;
}

inline CliffordGate inverse(const CliffordGate &g) {
    switch (g.kind) {
        case GateKind::S:
            return CliffordGate::sdg(g.q0);
        case GateKind::SDG:
            return CliffordGate::s(g.q0);
        default:
            return g;
    }
}

/// Reversed sequence of inverses, so that conjugating by `gates` and then by
/// the result is the identity.
inline std::vector<CliffordGate> invert_sequence(std::span<const CliffordGate> gates) {
    std::vector<CliffordGate> out;
    out.reserve(gates.size());
    for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
        out.push_back(inverse(*it));
    }
    return out;
}

/// SWAP as three CNOTs.
inline std::vector<CliffordGate> swap_gates(uint32_t a, uint32_t b) {
    return {CliffordGate::cnot(a, b), CliffordGate::cnot(b, a), CliffordGate::cnot(a, b)};
}

/// A search move. The composite units CNOT_ij H_i and CNOT_ij S_i are
/// operator products, so the single-qubit gate on the control acts first.
struct GateUnit {
    enum class Kind : uint8_t { CNOT, CNOT_H, CNOT_S };

    Kind kind = Kind::CNOT;
    uint32_t control = 0;
    uint32_t target = 1;

    /// Gates in application order.
    std::vector<CliffordGate> gates() const {
        switch (kind) {
            case Kind::CNOT:
                return {CliffordGate::cnot(control, target)};
            case Kind::CNOT_H:
                return {CliffordGate::h(control), CliffordGate::cnot(control, target)};
            case Kind::CNOT_S:
                return {CliffordGate::s(control), CliffordGate::cnot(control, target)};
        }
        return {};
    }

    bool operator==(const GateUnit &other) const = default;

    /// Compact text form: "CNOT c t", "CNOT_H c t" or "CNOT_S c t".
    std::string str() const {
        static constexpr const char *kNames[3] = {"CNOT", "CNOT_H", "CNOT_S"};
        return std::string(kNames[static_cast<int>(kind)]) + " " + std::to_string(control) + " " +
               std::to_string(target);
    }

    static GateUnit parse(const std::string &text) {
        std::istringstream in(text);
        std::string name;
        long long c = -1, t = -1;
        in >> name >> c >> t;
        if (!in || c < 0 || t < 0 || c == t) {
            throw std::invalid_argument("malformed gate unit: '" + text + "'");
        }
        GateUnit u;
        if (name == "CNOT") {
            u.kind = Kind::CNOT;
        } else if (name == "CNOT_H") {
            u.kind = Kind::CNOT_H;
        } else if (name == "CNOT_S") {
            u.kind = Kind::CNOT_S;
        } else {
            throw std::invalid_argument("unknown gate unit '" + name + "'");
        }
        u.control = static_cast<uint32_t>(c);
        u.target = static_cast<uint32_t>(t);
        return u;
    }
};

inline std::vector<CliffordGate> expand_units(std::span<const GateUnit> units) {
    std::vector<CliffordGate> out;
    out.reserve(units.size() * 2);
    for (const auto &u : units) {
        for (const auto &g : u.gates()) {
            out.push_back(g);
        }
    }
    return out;
}

/// Writes one gate per line in application order.
inline void write_circuit(std::ostream &out, std::span<const CliffordGate> gates) {
    for (const auto &g : gates) {
        out << g.str() << '\n';
    }
}

/// Reads the circuit text format; blank lines and '#' comments are skipped.
inline std::vector<CliffordGate> read_circuit(std::istream &in) {
    std::vector<CliffordGate> gates;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        gates.push_back(CliffordGate::parse(line));
    }
    return gates;
}

}  // namespace cliffmap
