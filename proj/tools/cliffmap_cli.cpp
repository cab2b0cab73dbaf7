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

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cliffmap/brute_force.hpp"
#include "cliffmap/campaign.hpp"
#include "cliffmap/compare.hpp"
#include "cliffmap/serialization.hpp"
#include "cliffmap/verify.hpp"

namespace {

using namespace cliffmap;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRun = 3;
constexpr int kExitVerify = 4;

void add_model_options(CLI::App *cmd, ModelSpec &m, bool positional_kind) {
    auto *kind = positional_kind ? cmd->add_option("kind", m.kind, "Model kind")
                                 : cmd->add_option("--model", m.kind, "Model kind");
    kind->check(CLI::IsMember(model_kinds()));
    if (positional_kind) {
        kind->required();
    }
    cmd->add_option("--sites", m.sites, "hopping1d: number of sites");
    cmd->add_option("--range", m.range, "hopping1d: hopping range r");
    cmd->add_option("--side", m.side, "hopping2d/hubbard2d: lattice side L");
    cmd->add_option("--n", m.n, "single-ops: number of modes");
    cmd->add_option("-t,--hopping", m.t, "hubbard2d: hopping strength t");
    cmd->add_option("-u,--interaction", m.u, "hubbard2d: on-site interaction U");
    cmd->add_option("--hamiltonian", m.path, "file: fermionic JSON to load");
}

/// --hamiltonian alone selects a file model.
void resolve_model(ModelSpec &m) {
    if (m.kind.empty() && !m.path.empty()) {
        m.kind = "file";
    }
    if (m.kind.empty()) {
        throw ConfigError("no model given (use --model KIND or --hamiltonian FILE)");
    }
}

void print_json(const Json &j) {
    std::cout << j.dump(2) << '\n';
}

std::string toml_string(const std::string &s) {
    return Json(s).dump();
}

/// The campaign as a config file that reproduces it via --config.
std::string effective_config(const CampaignConfig &c) {
    std::ostringstream out;
    out.precision(17);
    out << "[optimize]\n";
    const auto &m = c.model;
    out << "model=" << toml_string(m.kind) << '\n';
    if (m.kind == "hopping1d") {
        out << "sites=" << m.sites << "\nrange=" << m.range << '\n';
    } else if (m.kind == "hopping2d") {
        out << "side=" << m.side << '\n';
    } else if (m.kind == "hubbard2d") {
        out << "side=" << m.side << "\nhopping=" << m.t << "\ninteraction=" << m.u << '\n';
    } else if (m.kind == "single-ops") {
        out << "n=" << m.n << '\n';
    } else if (m.kind == "file") {
        out << "hamiltonian=" << toml_string(m.path) << '\n';
    }
    out << "mapping=" << toml_string(c.mapping) << '\n';
    out << "algorithm=" << toml_string(c.algorithm) << '\n';
    out << "gate-set=" << toml_string(to_string(c.gate_set)) << '\n';
    out << "cost=" << toml_string(to_string(c.cost)) << '\n';
    out << "c1=" << c.schedule.c1 << "\nc2=" << c.schedule.c2 << "\nc3=" << c.schedule.c3 << '\n';
    out << "t-min=" << c.schedule.t_min << "\nt-max=" << c.t_max << "\ntrace-every=" << c.trace_every << '\n';
    out << "seed-list=[";
    for (size_t i = 0; i < c.seeds.size(); ++i) {
        out << (i ? "," : "") << c.seeds[i];
    }
    out << "]\n";
    out << "max-nodes=" << c.bfs.max_nodes << "\ntimeout=" << c.bfs.timeout_seconds << '\n';
    out << "workers=" << c.workers << '\n';
    out << "out=" << toml_string(c.out_dir) << '\n';
    return out.str();
}

int cmd_build(ModelSpec &m, const std::string &out) {
    resolve_model(m);
    auto hf = build_model(m);
    if (out.empty() || out == "-") {
        print_json(fermionic_to_json(hf));
    } else {
        save_fermionic_json(out, hf);
        std::cerr << "wrote " << hf.terms.size() << " terms on " << hf.n_modes << " modes to " << out << '\n';
    }
    return kExitOk;
}

int cmd_encode(ModelSpec &m, const std::string &mapping, const std::string &out, bool drop_identity) {
    resolve_model(m);
    auto hf = build_model(m);
    auto hq = encode(hf, compile(initial_tree(mapping, hf.n_modes)));
    if (drop_identity) {
        QubitHamiltonian trimmed(hq.num_qubits());
        for (const auto &t : hq.terms()) {
            if (!t.pauli.is_identity()) {
                trimmed.add(t.pauli, t.coeff);
            }
        }
        hq = std::move(trimmed);
    }
    if (out.empty() || out == "-") {
        print_json(qubit_to_json(hq));
    } else {
        save_qubit_json(out, hq);
    }
    if (!hq.empty()) {
        std::cerr << hq.size() << " terms, total weight " << total_weight(hq) << ", average "
                  << avg_weight(hq).str() << '\n';
    }
    return kExitOk;
}

int cmd_enumerate(ModelSpec &m, size_t bound, bool force) {
    resolve_model(m);
    auto hf = build_model(m);
    size_t limit = force ? std::max(bound, hf.n_modes) : bound;
    TreeSearchReport r;
    try {
        r = brute_force_trees(hf, limit);
    } catch (const EnumerationBoundError &e) {
        throw ConfigError(std::string(e.what()) + " (pass --force)");
    }
    print_json(Json{{"n_qubits", hf.n_modes},
                    {"mappings", r.mappings},
                    {"n_terms", r.num_terms},
                    {"min_total", r.min_total},
                    {"min_avg", r.min_avg().str()},
                    {"argmin", tree_to_json(*r.argmin)}});
    return kExitOk;
}

int cmd_compare(ModelSpec &m, const std::string &cost, const std::string &optimized) {
    resolve_model(m);
    auto hf = build_model(m);
    CostKind kind = parse_cost_kind(cost);
    std::optional<Rational> opt;
    if (!optimized.empty()) {
        opt = Rational::parse(optimized);
    }
    auto r = compare_conventional(hf, kind, opt);
    Json out{{"cost", to_string(kind)},
             {"n_terms", r.num_terms},
             {"jw", r.jw.str()},
             {"bk", r.bk.str()},
             {"balanced", r.balanced.str()},
             {"best", {{"mapping", r.best_name}, {"cost", r.best.str()}}}};
    if (r.percent_reduction) {
        out["optimized"] = r.optimized->str();
        out["percent_reduction"] = r.percent_reduction->str();
        out["percent_reduction_value"] = r.percent_reduction->to_double();
    }
    print_json(out);
    return kExitOk;
}

int cmd_verify() {
    bool ok = true;
    for (const auto &s : run_all_suites()) {
        std::cout << (s.passed() ? "PASS " : "FAIL ") << s.name << ": " << (s.checks - s.failures) << "/" << s.checks
                  << '\n';
        for (const auto &m : s.messages) {
            std::cout << "  " << m << '\n';
        }
        for (const auto &note : s.notes) {
            std::cout << "  note: " << note << '\n';
        }
        ok = ok && s.passed();
    }
    return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Clifford optimization of fermion-to-qubit mappings"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML config file mirroring the flags; flags override it");

    ModelSpec build_model_spec;
    std::string build_out;
    auto *build = app.add_subcommand("build", "Write a fermionic Hamiltonian as JSON");
    add_model_options(build, build_model_spec, true);
    build->add_option("-o,--out", build_out, "Output file (default stdout)");

    ModelSpec encode_model;
    std::string encode_mapping = "jw", encode_out;
    bool drop_identity = false;
    auto *enc = app.add_subcommand("encode", "Encode a fermionic Hamiltonian into Pauli strings");
    add_model_options(enc, encode_model, false);
    enc->add_option("--mapping", encode_mapping, "jw, bk, balanced or a tree JSON file");
    enc->add_option("-o,--out", encode_out, "Output file (default stdout)");
    enc->add_flag("--drop-identity", drop_identity, "Omit the identity string from the output");

    CampaignConfig campaign;
    std::string gate_set = "CH", cost = "avg";
    size_t seed_count = 1;
    uint64_t master_seed = 0;
    std::vector<uint64_t> seed_list;
    auto *opt = app.add_subcommand("optimize", "Run a seeded search campaign");
    opt->configurable();
    add_model_options(opt, campaign.model, false);
    opt->add_option("--mapping", campaign.mapping, "Initial mapping: jw, bk, balanced or a tree JSON file");
    opt->add_option("--algorithm", campaign.algorithm, "sa or bfs")->check(CLI::IsMember({"sa", "bfs"}));
    opt->add_option("--gate-set", gate_set, "C, CH or CHS")->check(CLI::IsMember({"C", "CH", "CHS"}));
    opt->add_option("--cost", cost, "avg or total")->check(CLI::IsMember({"avg", "total"}));
    opt->add_option("--c1", campaign.schedule.c1, "Schedule c1");
    opt->add_option("--c2", campaign.schedule.c2, "Schedule c2");
    opt->add_option("--c3", campaign.schedule.c3, "Schedule c3");
    opt->add_option("--t-min", campaign.schedule.t_min, "Schedule t_min");
    opt->add_option("--t-max", campaign.t_max, "Annealing steps per run");
    opt->add_option("--trace-every", campaign.trace_every, "Cost-trace period (0 disables)");
    opt->add_option("--seeds", seed_count, "Number of sequential seeds");
    opt->add_option("--master-seed", master_seed, "First sequential seed");
    opt->add_option("--seed-list", seed_list, "Explicit seeds (overrides --seeds)")->delimiter(',');
    opt->add_option("--max-nodes", campaign.bfs.max_nodes, "bfs: node budget");
    opt->add_option("--timeout", campaign.bfs.timeout_seconds, "bfs: wall-clock budget in seconds (0 = none)");
    opt->add_option("-j,--workers", campaign.workers, "Concurrent runs");
    opt->add_option("-o,--out", campaign.out_dir, "Output directory")->required();

    ModelSpec enum_model;
    size_t enum_bound = kDefaultMappingBound;
    bool force = false;
    auto *en = app.add_subcommand("enumerate-trees", "Brute-force every ternary-tree mapping");
    add_model_options(en, enum_model, false);
    en->add_option("--bound", enum_bound, "Largest n enumerated without --force");
    en->add_flag("--force", force, "Enumerate even beyond the bound");

    ModelSpec cmp_model;
    std::string cmp_cost = "avg", cmp_opt;
    auto *cmp = app.add_subcommand("compare", "Costs under the conventional mappings");
    add_model_options(cmp, cmp_model, false);
    cmp->add_option("--cost", cmp_cost, "avg or total")->check(CLI::IsMember({"avg", "total"}));
    cmp->add_option("--optimized", cmp_opt, "Optimized cost (p/q) to report a percent reduction for");

    auto *ver = app.add_subcommand("verify", "Run the built-in property suites");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        if (*build) {
            return cmd_build(build_model_spec, build_out);
        }
        if (*enc) {
            return cmd_encode(encode_model, encode_mapping, encode_out, drop_identity);
        }
        if (*opt) {
            resolve_model(campaign.model);
            campaign.gate_set = parse_gate_set(gate_set);
            campaign.cost = parse_cost_kind(cost);
            campaign.seeds = seed_list.empty() ? sequential_seeds(master_seed, seed_count) : seed_list;
            std::filesystem::create_directories(campaign.out_dir);
            std::ofstream((std::filesystem::path(campaign.out_dir) / "effective_config.toml").string())
                << effective_config(campaign);
            auto result = run_campaign(campaign);
            const auto &best = result.summary["best"];
            std::cout << "best " << to_string(campaign.cost) << " cost " << best["best_cost"].get<std::string>()
                      << " (seed " << best["seed"].get<uint64_t>() << "), percent reduction "
                      << best["percent_reduction_value"].get<double>() * 100 << "% vs "
                      << result.summary["best_conventional"]["mapping"].get<std::string>() << '\n';
            return kExitOk;
        }
        if (*en) {
            return cmd_enumerate(enum_model, enum_bound, force);
        }
        if (*cmp) {
            return cmd_compare(cmp_model, cmp_cost, cmp_opt);
        }
        if (*ver) {
            return cmd_verify();
        }
    } catch (const ConfigError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const SchemaError &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const std::invalid_argument &e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const VerificationError &e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kExitVerify;
    } catch (const RunFailure &e) {
        std::cerr << "run failed: " << e.what() << '\n';
        return kExitRun;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRun;
    }
    return kExitOk;
}
