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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cliffmap/annealing.hpp"
#include "cliffmap/random_tree.hpp"
#include "cliffmap/serialization.hpp"

using namespace cliffmap;

namespace {

std::filesystem::path scratch_dir(const std::string &name) {
    auto dir = std::filesystem::temp_directory_path() / ("cliffmap_ser_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

Json minimal_fermionic() {
    return Json::parse(R"({"n_modes": 2, "hermitian": true,
        "terms": [{"coeff": [1, 0], "ops": [["c", 0], ["a", 1]]},
                  {"coeff": [1, 0], "ops": [["c", 1], ["a", 0]]}]})");
}

}  // namespace

TEST(Serialization, TreeRoundTrip) {
    Rng rng(11);
    for (size_t n = 1; n <= 8; ++n) {
        for (int rep = 0; rep < 10; ++rep) {
            auto t = random_tree(n, rng);
            auto back = tree_from_json(Json::parse(tree_to_json(t).dump()));
            EXPECT_EQ(back, t);
        }
    }
    EXPECT_EQ(tree_from_json(tree_to_json(jw_tree(5))), jw_tree(5));
}

TEST(Serialization, TreeSchemaErrors) {
    auto j = tree_to_json(jw_tree(2));
    auto dup = j;
    dup["children"][2]["qubit"] = 0;
    EXPECT_THROW(tree_from_json(dup), SchemaError);
    auto two_kids = j;
    two_kids["children"].erase(0);
    EXPECT_THROW(tree_from_json(two_kids), SchemaError);
    auto no_qubit = j;
    no_qubit.erase("qubit");
    EXPECT_THROW(tree_from_json(no_qubit), SchemaError);
    auto gap = j;
    gap["children"][2]["qubit"] = 5;
    EXPECT_THROW(tree_from_json(gap), SchemaError);
    auto bad_leaf = j;
    bad_leaf["children"][0]["leaf"] = 1;  // duplicates another leaf
    EXPECT_THROW(tree_from_json(bad_leaf), SchemaError);
}

TEST(Serialization, FermionicRoundTrip) {
    for (const auto &h : {build_hopping_1d(5, 2), build_hubbard_2d(2, 0.5, 4.0), build_single_ops(3), build_exchange()}) {
        auto back = fermionic_from_json(Json::parse(fermionic_to_json(h).dump()));
        ASSERT_EQ(back.n_modes, h.n_modes);
        ASSERT_EQ(back.hermitian, h.hermitian);
        ASSERT_EQ(back.terms.size(), h.terms.size());
        for (size_t i = 0; i < h.terms.size(); ++i) {
            EXPECT_EQ(back.terms[i].coeff, h.terms[i].coeff);
            EXPECT_EQ(back.terms[i].ops, h.terms[i].ops);
        }
    }
}

TEST(Serialization, FermionicSchemaErrors) {
    EXPECT_NO_THROW(fermionic_from_json(minimal_fermionic()));
    auto missing = minimal_fermionic();
    missing.erase("n_modes");
    EXPECT_THROW(fermionic_from_json(missing), SchemaError);
    auto kind = minimal_fermionic();
    kind["terms"][0]["ops"][0][0] = "x";
    EXPECT_THROW(fermionic_from_json(kind), SchemaError);
    auto range = minimal_fermionic();
    range["terms"][0]["ops"][1][1] = 2;
    EXPECT_THROW(fermionic_from_json(range), SchemaError);
    auto dangling = minimal_fermionic();
    dangling["terms"].erase(1);
    EXPECT_THROW(fermionic_from_json(dangling), SchemaError);
    dangling["hermitian"] = false;
    EXPECT_NO_THROW(fermionic_from_json(dangling));
    auto coeff = minimal_fermionic();
    coeff["terms"][0]["coeff"] = 1;
    EXPECT_THROW(fermionic_from_json(coeff), SchemaError);
    auto negative = minimal_fermionic();
    negative["terms"][0]["ops"][0][1] = -1;
    EXPECT_THROW(fermionic_from_json(negative), SchemaError);
}

TEST(Serialization, QubitRoundTrip) {
    auto h = encode(build_hubbard_2d(2), compile(balanced_tree(8)));
    auto back = qubit_from_json(Json::parse(qubit_to_json(h).dump()));
    EXPECT_TRUE(approx_equal(back, h, 0));
    EXPECT_EQ(back.size(), h.size());
    auto bad = qubit_to_json(h);
    bad["terms"][0]["pauli"] = "XQ";
    EXPECT_THROW(qubit_from_json(bad), SchemaError);
    bad["terms"][0]["pauli"] = "XX";
    EXPECT_THROW(qubit_from_json(bad), SchemaError);
}

TEST(Serialization, RunRecordRoundTrip) {
    auto h = encode(build_hopping_1d(5, 1), compile(jw_tree(5)));
    SaOptions opt;
    opt.t_max = 5000;
    opt.seed = 9;
    opt.trace_every = 250;
    opt.gate_set = GateSetId::CHS;
    opt.schedule = Schedule{1.5, 0.25, 3, 10};
    auto rec = sa_run(h, opt);
    auto back = run_record_from_json(Json::parse(run_record_to_json(rec).dump()));
    EXPECT_EQ(back, rec);
    auto bad = run_record_to_json(rec);
    bad["moves"] = Json::array({"SWAP 0 1"});
    EXPECT_THROW(run_record_from_json(bad), SchemaError);
}

TEST(Serialization, TraceCsv) {
    RunRecord r;
    r.cost_trace = {{0, 2.0}, {10, 1.5}};
    std::ostringstream out;
    write_trace_csv(out, r);
    EXPECT_EQ(out.str(), "t,cost\n0,2\n10,1.5\n");
}

TEST(Serialization, FileHelpers) {
    auto dir = scratch_dir("files");
    auto hf = build_exchange();
    save_fermionic_json((dir / "h.json").string(), hf);
    EXPECT_EQ(load_fermionic_json((dir / "h.json").string()).terms.size(), 2u);
    auto hq = encode(hf, compile(bk_tree(4)));
    save_qubit_json((dir / "q.json").string(), hq);
    EXPECT_TRUE(approx_equal(load_qubit_json((dir / "q.json").string()), hq, 0));
    std::vector<CliffordGate> gates{CliffordGate::h(1), CliffordGate::cnot(1, 0), CliffordGate::s(2),
                                    CliffordGate::sdg(0)};
    save_circuit((dir / "c.txt").string(), gates);
    EXPECT_EQ(load_circuit((dir / "c.txt").string()), gates);
    EXPECT_ANY_THROW(read_json_file((dir / "missing.json").string()));
    {
        std::ofstream f(dir / "broken.json");
        f << "{ not json";
    }
    EXPECT_ANY_THROW(read_json_file((dir / "broken.json").string()));
    std::filesystem::remove_all(dir);
}
