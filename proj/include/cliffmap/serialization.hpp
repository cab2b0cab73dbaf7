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

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cliffmap/clifford.hpp"
#include "cliffmap/fermion.hpp"
#include "cliffmap/qubit_hamiltonian.hpp"
#include "cliffmap/run_record.hpp"
#include "cliffmap/ternary_tree.hpp"

namespace cliffmap {

using Json = nlohmann::ordered_json;

/// Malformed or inconsistent input document.
struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline const Json &require(const Json &j, const char *key, const char *where) {
    if (!j.is_object() || !j.contains(key)) {
        throw SchemaError(std::string(where) + ": missing field '" + key + "'");
    }
    return j.at(key);
}

template <typename T>
T get_as(const Json &j, const char *what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception &e) {
        throw SchemaError(std::string(what) + ": " + e.what());
    }
}

inline Json complex_to_json(Complex c) {
    return Json::array({c.real(), c.imag()});
}

inline Complex complex_from_json(const Json &j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw SchemaError("coefficient must be [re, im]");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

inline Json slot_to_json(const TernaryTree &t, const TreeSlot &s);

inline Json node_to_json(const TernaryTree &t, uint32_t q) {
    Json children = Json::array();
    for (const auto &s : t.children(q)) {
        children.push_back(slot_to_json(t, s));
    }
    return Json{{"qubit", q}, {"children", std::move(children)}};
}

inline Json slot_to_json(const TernaryTree &t, const TreeSlot &s) {
    if (s.is_leaf()) {
        return Json{{"leaf", s.index}};
    }
    return node_to_json(t, s.index);
}

inline uint32_t read_node(const Json &j, std::vector<std::optional<Children>> &out) {
    uint32_t q = get_as<uint32_t>(require(j, "qubit", "tree node"), "tree node qubit");
    const Json &kids = require(j, "children", "tree node");
    if (!kids.is_array() || kids.size() != 3) {
        throw SchemaError("tree node must have exactly 3 children");
    }
    Children c;
    for (size_t s = 0; s < 3; ++s) {
        const Json &k = kids[s];
        if (k.is_object() && k.contains("leaf")) {
            c[s] = TreeSlot::leaf(get_as<uint32_t>(k.at("leaf"), "leaf index"));
        } else {
            c[s] = TreeSlot::qubit(read_node(k, out));
        }
    }
    if (q >= out.size()) {
        out.resize(q + 1);
    }
    if (out[q]) {
        throw SchemaError("qubit " + std::to_string(q) + " appears twice in tree");
    }
    out[q] = c;
    return q;
}

}  // namespace detail

// ---- ternary trees ----

inline Json tree_to_json(const TernaryTree &t) {
    return detail::node_to_json(t, t.root());
}

inline TernaryTree tree_from_json(const Json &j) {
    std::vector<std::optional<Children>> nodes;
    uint32_t root = detail::read_node(j, nodes);
    std::vector<Children> children;
    for (size_t q = 0; q < nodes.size(); ++q) {
        if (!nodes[q]) {
            throw SchemaError("qubit labels must be 0..n-1; missing " + std::to_string(q));
        }
        children.push_back(*nodes[q]);
    }
    try {
        return TernaryTree(root, std::move(children));
    } catch (const TreeStructureError &e) {
        throw SchemaError(std::string("invalid tree: ") + e.what());
    }
}

// ---- fermionic Hamiltonians ----

inline Json fermionic_to_json(const FermionicHamiltonian &h) {
    Json terms = Json::array();
    for (const auto &t : h.terms) {
        Json ops = Json::array();
        for (const auto &op : t.ops) {
            ops.push_back(Json::array({op.creation ? "c" : "a", op.mode}));
        }
        terms.push_back(Json{{"coeff", detail::complex_to_json(t.coeff)}, {"ops", std::move(ops)}});
    }
    return Json{{"n_modes", h.n_modes}, {"hermitian", h.hermitian}, {"terms", std::move(terms)}};
}

/// Parses and validates: mode range, and conjugation closure when the
/// document claims to be Hermitian.
inline FermionicHamiltonian fermionic_from_json(const Json &j) {
    FermionicHamiltonian h;
    h.n_modes = detail::get_as<size_t>(detail::require(j, "n_modes", "fermionic Hamiltonian"), "n_modes");
    h.hermitian = detail::get_as<bool>(detail::require(j, "hermitian", "fermionic Hamiltonian"), "hermitian");
    const Json &terms = detail::require(j, "terms", "fermionic Hamiltonian");
    if (!terms.is_array()) {
        throw SchemaError("terms must be an array");
    }
    for (const auto &tj : terms) {
        FermionicTerm t;
        t.coeff = detail::complex_from_json(detail::require(tj, "coeff", "term"));
        const Json &ops = detail::require(tj, "ops", "term");
        if (!ops.is_array()) {
            throw SchemaError("ops must be an array");
        }
        for (const auto &oj : ops) {
            if (!oj.is_array() || oj.size() != 2 || !oj[0].is_string()) {
                throw SchemaError("operator must be [\"c\"|\"a\", mode]");
            }
            auto kind = oj[0].get<std::string>();
            if (kind != "c" && kind != "a") {
                throw SchemaError("operator kind must be \"c\" or \"a\", got '" + kind + "'");
            }
            t.ops.push_back({kind == "c", detail::get_as<uint32_t>(oj[1], "mode")});
        }
        h.terms.push_back(std::move(t));
    }
    try {
        validate(h);
    } catch (const std::logic_error &e) {
        throw SchemaError(e.what());
    }
    return h;
}

// ---- qubit Hamiltonians ----

inline Json qubit_to_json(const QubitHamiltonian &h) {
    Json terms = Json::array();
    for (const auto &t : h.terms()) {
        terms.push_back(Json{{"coeff", detail::complex_to_json(t.coeff)}, {"pauli", t.pauli.str(false)}});
    }
    return Json{{"n_qubits", h.num_qubits()}, {"terms", std::move(terms)}};
}

inline QubitHamiltonian qubit_from_json(const Json &j) {
    size_t n = detail::get_as<size_t>(detail::require(j, "n_qubits", "qubit Hamiltonian"), "n_qubits");
    QubitHamiltonian h(n);
    const Json &terms = detail::require(j, "terms", "qubit Hamiltonian");
    if (!terms.is_array()) {
        throw SchemaError("terms must be an array");
    }
    for (const auto &tj : terms) {
        auto text = detail::get_as<std::string>(detail::require(tj, "pauli", "term"), "pauli");
        PauliString p;
        try {
            p = PauliString::from_str(text);
        } catch (const std::invalid_argument &e) {
            throw SchemaError(e.what());
        }
        if (p.num_qubits() != n) {
            throw SchemaError("Pauli string '" + text + "' does not have " + std::to_string(n) + " qubits");
        }
        h.add(p, detail::complex_from_json(detail::require(tj, "coeff", "term")));
    }
    return h;
}

// ---- run records ----

inline Json run_record_to_json(const RunRecord &r) {
    Json moves = Json::array();
    for (const auto &u : r.moves) {
        moves.push_back(u.str());
    }
    Json trace = Json::array();
    for (const auto &[t, c] : r.cost_trace) {
        trace.push_back(Json::array({t, c}));
    }
    return Json{
        {"algorithm", r.algorithm},
        {"seed", r.seed},
        {"gate_set", to_string(r.gate_set)},
        {"schedule", {{"c1", r.schedule.c1}, {"c2", r.schedule.c2}, {"c3", r.schedule.c3}, {"t_min", r.schedule.t_min}}},
        {"t_max", r.t_max},
        {"cost", to_string(r.cost)},
        {"num_qubits", r.num_qubits},
        {"num_terms", r.num_terms},
        {"initial_total", r.initial_total},
        {"best_total", r.best_total},
        {"final_total", r.final_total},
        {"initial_cost", r.initial_cost().str()},
        {"best_cost", r.best_cost().str()},
        {"best_cost_value", r.best_cost().to_double()},
        {"best_prefix_len", r.best_prefix_len},
        {"moves", std::move(moves)},
        {"cost_trace", std::move(trace)},
    };
}

inline RunRecord run_record_from_json(const Json &j) {
    using detail::get_as;
    using detail::require;
    const char *w = "run record";
    RunRecord r;
    r.algorithm = get_as<std::string>(require(j, "algorithm", w), "algorithm");
    r.seed = get_as<uint64_t>(require(j, "seed", w), "seed");
    try {
        r.gate_set = parse_gate_set(get_as<std::string>(require(j, "gate_set", w), "gate_set"));
        r.cost = parse_cost_kind(get_as<std::string>(require(j, "cost", w), "cost"));
    } catch (const std::invalid_argument &e) {
        throw SchemaError(e.what());
    }
    const Json &s = require(j, "schedule", w);
    r.schedule.c1 = get_as<double>(require(s, "c1", "schedule"), "c1");
    r.schedule.c2 = get_as<double>(require(s, "c2", "schedule"), "c2");
    r.schedule.c3 = get_as<double>(require(s, "c3", "schedule"), "c3");
    r.schedule.t_min = get_as<int64_t>(require(s, "t_min", "schedule"), "t_min");
    r.t_max = get_as<int64_t>(require(j, "t_max", w), "t_max");
    r.num_qubits = get_as<size_t>(require(j, "num_qubits", w), "num_qubits");
    r.num_terms = get_as<size_t>(require(j, "num_terms", w), "num_terms");
    r.initial_total = get_as<int64_t>(require(j, "initial_total", w), "initial_total");
    r.best_total = get_as<int64_t>(require(j, "best_total", w), "best_total");
    r.final_total = get_as<int64_t>(require(j, "final_total", w), "final_total");
    r.best_prefix_len = get_as<size_t>(require(j, "best_prefix_len", w), "best_prefix_len");
    for (const auto &m : require(j, "moves", w)) {
        try {
            r.moves.push_back(GateUnit::parse(get_as<std::string>(m, "move")));
        } catch (const std::invalid_argument &e) {
            throw SchemaError(e.what());
        }
    }
    if (r.best_prefix_len > r.moves.size()) {
        throw SchemaError("best_prefix_len exceeds the number of moves");
    }
    for (const auto &p : require(j, "cost_trace", w)) {
        if (!p.is_array() || p.size() != 2) {
            throw SchemaError("cost_trace entries must be [t, cost]");
        }
        r.cost_trace.emplace_back(get_as<int64_t>(p[0], "trace t"), get_as<double>(p[1], "trace cost"));
    }
    return r;
}

inline void write_trace_csv(std::ostream &out, const RunRecord &r) {
    out << "t,cost\n";
    std::ostringstream line;
    line.precision(17);
    for (const auto &[t, c] : r.cost_trace) {
        line.str("");
        line << t << ',' << c << '\n';
        out << line.str();
    }
}

// ---- files ----

inline Json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw SchemaError(path + ": " + e.what());
    }
}

inline void write_json_file(const std::string &path, const Json &j) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    out << j.dump(2) << '\n';
}

inline FermionicHamiltonian load_fermionic_json(const std::string &path) {
    return fermionic_from_json(read_json_file(path));
}

inline void save_fermionic_json(const std::string &path, const FermionicHamiltonian &h) {
    write_json_file(path, fermionic_to_json(h));
}

inline QubitHamiltonian load_qubit_json(const std::string &path) {
    return qubit_from_json(read_json_file(path));
}

inline void save_qubit_json(const std::string &path, const QubitHamiltonian &h) {
    write_json_file(path, qubit_to_json(h));
}

inline std::vector<CliffordGate> load_circuit(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    return read_circuit(in);
}

inline void save_circuit(const std::string &path, std::span<const CliffordGate> gates) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    write_circuit(out, gates);
}

}  // namespace cliffmap
