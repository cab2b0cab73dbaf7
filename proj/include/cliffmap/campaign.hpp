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
#include <atomic>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "cliffmap/annealing.hpp"
#include "cliffmap/best_first.hpp"
#include "cliffmap/compare.hpp"
#include "cliffmap/fermion.hpp"
#include "cliffmap/serialization.hpp"
#include "cliffmap/ternary_tree.hpp"

namespace cliffmap {

/// Invalid campaign or model configuration.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A search run threw; per-run files already written are kept.
struct RunFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A result failed its own replay check.
struct VerificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModelSpec {
    /// hopping1d, hopping2d, hubbard2d, single-ops, exchange or file.
    std::string kind;
    size_t sites = 0;
    size_t range = 1;
    size_t side = 0;
    size_t n = 0;
    double t = 1.0;
    double u = 1.0;
    std::string path;

    std::string describe() const {
        if (kind == "hopping1d") {
            return "hopping1d(sites=" + std::to_string(sites) + ",range=" + std::to_string(range) + ")";
        }
        if (kind == "hopping2d") {
            return "hopping2d(side=" + std::to_string(side) + ")";
        }
        if (kind == "hubbard2d") {
            return "hubbard2d(side=" + std::to_string(side) + ",t=" + std::to_string(t) + ",u=" + std::to_string(u) +
                   ")";
        }
        if (kind == "single-ops") {
            return "single-ops(n=" + std::to_string(n) + ")";
        }
        if (kind == "file") {
            return "file(" + path + ")";
        }
        return kind;
    }
};

inline const std::vector<std::string> &model_kinds() {
    static const std::vector<std::string> kinds{"hopping1d", "hopping2d", "hubbard2d", "single-ops", "exchange",
                                                "file"};
    return kinds;
}

inline FermionicHamiltonian build_model(const ModelSpec &spec) {
    try {
        if (spec.kind == "hopping1d") {
            return build_hopping_1d(spec.sites, spec.range);
        }
        if (spec.kind == "hopping2d") {
            if (spec.side < 2) {
                throw std::domain_error("hopping2d needs side >= 2");
            }
            return build_hopping_2d(spec.side);
        }
        if (spec.kind == "hubbard2d") {
            if (spec.side < 2) {
                throw std::domain_error("hubbard2d needs side >= 2");
            }
            return build_hubbard_2d(spec.side, spec.t, spec.u);
        }
        if (spec.kind == "single-ops") {
            if (spec.n < 1) {
                throw std::domain_error("single-ops needs n >= 1");
            }
            return build_single_ops(spec.n);
        }
        if (spec.kind == "exchange") {
            return build_exchange();
        }
        if (spec.kind == "file") {
            if (!std::filesystem::exists(spec.path)) {
                throw std::invalid_argument("Hamiltonian file '" + spec.path + "' does not exist");
            }
            return load_fermionic_json(spec.path);
        }
    } catch (const ConfigError &) {
        throw;
    } catch (const std::exception &e) {
        throw ConfigError(spec.describe() + ": " + e.what());
    }
    throw ConfigError("unknown model kind '" + spec.kind + "'");
}

/// jw, bk, balanced, or a path to a tree JSON file.
inline TernaryTree initial_tree(const std::string &mapping, size_t n) {
    if (mapping == "jw" || mapping == "bk" || mapping == "balanced") {
        return conventional_tree(mapping, n);
    }
    if (!std::filesystem::exists(mapping)) {
        throw ConfigError("mapping must be jw, bk, balanced or an existing tree file; got '" + mapping + "'");
    }
    TernaryTree t = [&] {
        try {
            return tree_from_json(read_json_file(mapping));
        } catch (const std::exception &e) {
            throw ConfigError(mapping + ": " + e.what());
        }
    }();
    if (t.num_qubits() != n) {
        throw ConfigError("tree in '" + mapping + "' has " + std::to_string(t.num_qubits()) +
                          " qubits; the model has " + std::to_string(n) + " modes");
    }
    return t;
}

struct CampaignConfig {
    ModelSpec model;
    std::string mapping = "jw";
    std::string algorithm = "sa";
    GateSetId gate_set = GateSetId::CH;
    Schedule schedule;
    int64_t t_max = 100000;
    std::vector<uint64_t> seeds{0};
    CostKind cost = CostKind::Average;
    int64_t trace_every = 1000;
    BfsBudget bfs;
    size_t workers = 1;
    /// Empty: keep everything in memory.
    std::string out_dir;
};

/// count seeds starting at master: master, master+1, ...
inline std::vector<uint64_t> sequential_seeds(uint64_t master, size_t count) {
    std::vector<uint64_t> out(count);
    for (size_t i = 0; i < count; ++i) {
        out[i] = master + i;
    }
    return out;
}

/// Drops repeated seeds, keeping first occurrences in order.
inline std::vector<uint64_t> dedup_seeds(const std::vector<uint64_t> &seeds) {
    std::vector<uint64_t> out;
    std::set<uint64_t> seen;
    for (auto s : seeds) {
        if (seen.insert(s).second) {
            out.push_back(s);
        }
    }
    return out;
}

inline void validate_campaign(const CampaignConfig &c) {
    if (c.algorithm != "sa" && c.algorithm != "bfs") {
        throw ConfigError("algorithm must be sa or bfs, got '" + c.algorithm + "'");
    }
    if (c.seeds.empty()) {
        throw ConfigError("at least one seed is required");
    }
    if (c.algorithm == "sa" && c.t_max < 1) {
        throw ConfigError("t_max must be at least 1");
    }
    if (c.schedule.c1 <= 0 || c.schedule.c2 < 0 || c.schedule.c3 <= 0 || c.schedule.t_min < 0) {
        throw ConfigError("schedule needs c1 > 0, c2 >= 0, c3 > 0 and t_min >= 0");
    }
    if (c.workers < 1) {
        throw ConfigError("workers must be at least 1");
    }
}

struct CampaignResult {
    FermionicHamiltonian fermionic;
    QubitHamiltonian initial;
    std::vector<RunRecord> runs;
    Json summary;
};

namespace detail {

inline Json conventional_json(const FermionicHamiltonian &hf) {
    Json out = Json::object();
    for (const char *name : {"jw", "bk", "balanced"}) {
        auto hq = encode(hf, compile(conventional_tree(name, hf.n_modes)));
        out[name] = Json{{"avg", avg_weight(hq).str()}, {"total", total_weight(hq)}};
    }
    return out;
}

inline std::string run_stem(const std::string &out_dir, uint64_t seed) {
    return (std::filesystem::path(out_dir) / "runs" / ("seed_" + std::to_string(seed))).string();
}

inline void write_run_files(const std::string &out_dir, const RunRecord &rec) {
    std::string stem = run_stem(out_dir, rec.seed);
    write_json_file(stem + ".json", run_record_to_json(rec));
    save_circuit(stem + ".circuit", expand_units(rec.best_moves()));
    std::ofstream trace(stem + ".trace.csv");
    write_trace_csv(trace, rec);
}

}  // namespace detail

inline RunRecord run_single(const QubitHamiltonian &h, const CampaignConfig &c, uint64_t seed) {
    if (c.algorithm == "bfs") {
        RunRecord rec = bfs_run(h, c.gate_set, c.cost, c.bfs);
        rec.seed = seed;
        return rec;
    }
    SaOptions opt;
    opt.gate_set = c.gate_set;
    opt.schedule = c.schedule;
    opt.t_max = c.t_max;
    opt.seed = seed;
    opt.cost = c.cost;
    opt.trace_every = c.trace_every;
    return sa_run(h, opt);
}

/// Runs every seed (up to c.workers at a time), checks each record by
/// replay, and builds the summary. With an output directory, per-run
/// record, circuit and trace files are written as runs finish and the
/// summary plus the initial qubit Hamiltonian at the end.
inline CampaignResult run_campaign(const CampaignConfig &config) {
    validate_campaign(config);
    CampaignConfig c = config;
    c.seeds = dedup_seeds(c.seeds);

    CampaignResult result;
    result.fermionic = build_model(c.model);
    size_t n = result.fermionic.n_modes;
    if (n < 2) {
        throw ConfigError("optimization needs at least 2 modes");
    }
    TernaryTree tree = initial_tree(c.mapping, n);
    result.initial = encode(result.fermionic, compile(tree));
    if (result.initial.empty()) {
        throw ConfigError("encoded Hamiltonian has no terms");
    }
    if (!c.out_dir.empty()) {
        std::filesystem::create_directories(std::filesystem::path(c.out_dir) / "runs");
        save_qubit_json((std::filesystem::path(c.out_dir) / "initial_qubit.json").string(), result.initial);
    }

    result.runs.resize(c.seeds.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> failed{false};
    std::mutex error_mutex;
    std::string error;
    auto worker = [&] {
        while (!failed) {
            size_t i = next++;
            if (i >= c.seeds.size()) {
                return;
            }
            try {
                RunRecord rec = run_single(result.initial, c, c.seeds[i]);
                if (!c.out_dir.empty()) {
                    detail::write_run_files(c.out_dir, rec);
                }
                result.runs[i] = std::move(rec);
            } catch (const std::exception &e) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!failed.exchange(true)) {
                    error = "seed " + std::to_string(c.seeds[i]) + ": " + e.what();
                }
            }
        }
    };
    size_t threads = std::min(c.workers, c.seeds.size());
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (size_t w = 0; w < threads; ++w) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (failed) {
        throw RunFailure(error);
    }

    for (const auto &rec : result.runs) {
        Rational replayed = cost_of(replay_best(result.initial, rec), rec.cost);
        if (replayed != rec.best_cost()) {
            throw VerificationError("seed " + std::to_string(rec.seed) + ": replay gives " + replayed.str() +
                                    ", record says " + rec.best_cost().str());
        }
    }

    size_t best = 0;
    for (size_t i = 1; i < result.runs.size(); ++i) {
        if (result.runs[i].best_total < result.runs[best].best_total) {
            best = i;
        }
    }
    const RunRecord &winner = result.runs[best];
    auto report = compare_conventional(result.fermionic, c.cost, winner.best_cost());

    Json runs = Json::array();
    for (const auto &rec : result.runs) {
        runs.push_back(Json{{"seed", rec.seed},
                            {"initial_cost", rec.initial_cost().str()},
                            {"best_cost", rec.best_cost().str()},
                            {"best_total", rec.best_total},
                            {"best_prefix_len", rec.best_prefix_len}});
    }
    result.summary = Json{
        {"model", c.model.describe()},
        {"mapping", c.mapping},
        {"algorithm", c.algorithm},
        {"gate_set", to_string(c.gate_set)},
        {"cost", to_string(c.cost)},
        {"n_qubits", n},
        {"n_terms", result.initial.size()},
        {"conventional", detail::conventional_json(result.fermionic)},
        {"best_conventional", {{"mapping", report.best_name}, {"cost", report.best.str()}}},
        {"best",
         {{"seed", winner.seed},
          {"best_cost", winner.best_cost().str()},
          {"best_cost_value", winner.best_cost().to_double()},
          {"best_total", winner.best_total},
          {"percent_reduction", report.percent_reduction->str()},
          {"percent_reduction_value", report.percent_reduction->to_double()}}},
        {"runs", std::move(runs)},
    };
    if (!c.out_dir.empty()) {
        write_json_file((std::filesystem::path(c.out_dir) / "summary.json").string(), result.summary);
    }
    return result;
}

}  // namespace cliffmap
