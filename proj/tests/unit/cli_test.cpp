// Copyright 2026 The Hierarchon Authors
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

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "hierarchon/interchange.hpp"
#include "hierarchon/phasespace.hpp"

namespace hierarchon::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
    int code;
    std::string out;
    std::string err;
};

class CliTest : public ::testing::Test {
   protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("hierarchon_cli_" + std::to_string(::getpid()) + "_" +
                                            ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    Result call(std::vector<std::string> args) {
        args.push_back("--cache-dir");
        args.push_back((dir_ / "cache").string());
        return bare(args);
    }
    Result bare(const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return {code, out.str(), err.str()};
    }
    std::string write_gate(const ExactMatrix& m, const std::string& name) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << gate_json(ScaledUnitary::from_matrix(m), 3).dump();
        return p.string();
    }

    fs::path dir_;
};

TEST_F(CliTest, EnumerateTable) {
    const Result r = call({"enumerate", "--d", "3", "--n", "1", "--max-level", "3"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("1944"), std::string::npos);
    EXPECT_NE(r.out.find("MATCH"), std::string::npos);
    EXPECT_EQ(r.out.find("MISMATCH"), std::string::npos);
    EXPECT_NE(r.err.find("level 3: computed"), std::string::npos);
    const Result warm = call({"enumerate", "--d", "3", "--n", "1", "--max-level", "3"});
    EXPECT_EQ(warm.out, r.out);
    EXPECT_NE(warm.err.find("level 3: cache"), std::string::npos);
}

TEST_F(CliTest, EnumerateJsonSchema) {
    const Result r = call({"enumerate", "--max-level", "2", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["version"], 1);
    ASSERT_EQ(j["levels"].size(), 2u);
    EXPECT_EQ(j["levels"][1], (json{{"k", 2}, {"count", 216}, {"reference", 216}, {"status", "MATCH"}, {"exact", true}}));
    EXPECT_TRUE(j["invariants_ok"].get<bool>());
}

TEST_F(CliTest, EnumerateCountLast) {
    const Result r = call({"enumerate", "--max-level", "4", "--count-last", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["levels"][3]["count"], 7128);
    EXPECT_TRUE(j["levels"][3]["exact"].get<bool>());
    EXPECT_FALSE(fs::exists(dir_ / "cache" / "d3_n1" / "level_4.json"));
}

TEST_F(CliTest, JobsDoNotChangeReports) {
    const Result a = call({"enumerate", "--max-level", "3", "--jobs", "1", "--format", "json"});
    fs::remove_all(dir_ / "cache");
    const Result b = call({"enumerate", "--max-level", "3", "--jobs", "8", "--format", "json"});
    EXPECT_EQ(a.out, b.out);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(call({"enumerate", "--d", "4"}).code, kExitUsage);
    EXPECT_EQ(call({"enumerate", "--n", "3"}).code, kExitUsage);
    EXPECT_EQ(call({"enumerate", "--max-level", "0"}).code, kExitUsage);
    EXPECT_EQ(call({"enumerate", "--format", "xml"}).code, kExitUsage);
    EXPECT_EQ(bare({}).code, kExitUsage);
    EXPECT_EQ(bare({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(call({"semiclifford"}).code, kExitUsage);
    EXPECT_EQ(bare({"--help"}).code, kExitOk);
}

TEST_F(CliTest, SizeGuardRefuses) {
    const Result r = call({"enumerate", "--d", "3", "--n", "2", "--max-level", "2"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("refused"), std::string::npos);
}

TEST_F(CliTest, Membership) {
    const std::string f = write_gate(dft(3), "dft.json");
    Result r = call({"membership", "--gate", f, "--k", "2", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    EXPECT_TRUE(json::parse(r.out)["member"].get<bool>());
    r = call({"membership", "--gate", f, "--k", "1", "--format", "json"});
    EXPECT_FALSE(json::parse(r.out)["member"].get<bool>());
}

TEST_F(CliTest, BadGateFileNamesInvariant) {
    const fs::path p = dir_ / "bad.json";
    json j = gate_json(ScaledUnitary::from_matrix(pauli_x(3, 1, 0)), 3);
    j["entries"][0] = json::array({json::array({2, 1}), json::array({0, 1})});
    std::ofstream(p) << j.dump();
    const Result r = call({"semiclifford", "--gate", p.string()});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_NE(r.err.find("unitary"), std::string::npos);
}

TEST_F(CliTest, SemiCliffordGate) {
    const ExactMatrix d = ExactMatrix::diagonal(std::vector<Cyclo>{1, Cyclo::zeta(3, 2, 1), Cyclo::zeta(3, 2, 2)});
    const Result r = call({"semiclifford", "--gate", write_gate(d, "d.json"), "--format", "json", "--all-witnesses"});
    ASSERT_EQ(r.code, kExitOk);
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["verified"].get<bool>());
    EXPECT_EQ(j["witness"]["semibasis"][0], (json{{"p", {1}}, {"q", {0}}}));
    EXPECT_GE(j["all_witnesses"].size(), 1u);
}

TEST_F(CliTest, SemiCliffordCatalog) {
    const Result r = call({"semiclifford", "--catalog", "3", "--jobs", "2"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("1944/1944"), std::string::npos);
}

TEST_F(CliTest, DiagonalVerify) {
    const Result r = call({"diagonal", "verify", "--d", "3", "--k", "3", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(j["levels"][2]["delta_count"], 27);
}

TEST_F(CliTest, TeleportVerifyWritesReport) {
    const fs::path out = dir_ / "teleport.json";
    const Result r = call({"teleport", "verify", "--samples", "10", "--states", "2", "--seed", "3", "--out", out.string()});
    EXPECT_EQ(r.code, kExitOk);
    std::ifstream in(out);
    const json j = json::parse(in);
    EXPECT_EQ(j["seed"], 3);
    EXPECT_EQ(j["samples"], 10);
    EXPECT_TRUE(j["failures"].empty());
    for (const char* key : {"d", "branches_checked", "states_per_gate", "non_clifford_corrections"})
        EXPECT_TRUE(j.contains(key)) << key;
}

TEST_F(CliTest, Qutrit3Survey) {
    const Result r = call({"qutrit3", "survey", "--stride", "100", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["total"], 4199040);
    EXPECT_EQ(j["failed"], 0);
    EXPECT_EQ(call({"qutrit3", "survey", "--d", "5"}).code, kExitUsage);
}

TEST(CliReference, KnownCounts) {
    EXPECT_EQ(reference_count(3, 1, 4), 7128u);
    EXPECT_EQ(reference_count(5, 1, 3), 7500u);
    EXPECT_EQ(reference_count(7, 1, 3), 806736u);
    EXPECT_FALSE(reference_count(3, 1, 7).has_value());
    EXPECT_FALSE(reference_count(3, 2, 1).has_value());
}

}  // namespace
}  // namespace hierarchon::cli
