/*
   Copyright 2026 The mf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "mf/cli.hpp"

using namespace mf;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

class TempFile {
public:
    explicit TempFile(const std::string& text) {
        path_ = std::filesystem::temp_directory_path() /
                ("mf_tree_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + ".json");
        std::ofstream(path_) << text;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string path() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST(Cli, Dim) {
    const CliRun r = run_cli({"dim", "--n", "3"});
    EXPECT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["R"], "10");
    EXPECT_EQ(j["S"], "5");
    EXPECT_EQ(j["hook"], "5");
    EXPECT_EQ(j["basis_size"], 5);
    EXPECT_EQ(j["status"], "pass");
    EXPECT_NE(r.err.find("10 - 5 = 5 = 6!/(4!*3!) = 5"), std::string::npos) << r.err;
}

TEST(Cli, Cremona) {
    const CliRun r = run_cli({"cremona", "--point", "1,2,3"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "6,3,2\n");
}

TEST(Cli, PointVerbs) {
    EXPECT_EQ(run_cli({"phi", "--n", "2", "--point", "1,2,3"}).out, "1,4\n");
    EXPECT_EQ(run_cli({"config", "--n", "2", "--point", "1,2,3"}).out, "1:1,1:2,1:3,1:0\n");
    const CliRun g = run_cli({"git-point", "--n", "2", "--config", "1:1,1:2,1:3,1:0"});
    EXPECT_EQ(g.out, "3,1\n");
    EXPECT_EQ(g.err, "Stable\n");
    const CliRun z = run_cli({"git-point", "--n", "3", "--config", "1:1,1:1,1:1,1:1,1:2,1:3"});
    EXPECT_EQ(z.code, 0);
    EXPECT_EQ(z.out, "ZeroVector\n");
    EXPECT_EQ(z.err, "Unstable\n");
}

TEST(Cli, JsonVerbs) {
    const Json ob = Json::parse(run_cli({"omega-basis", "--n", "2"}).out);
    EXPECT_EQ(ob["dimension"], 2);
    EXPECT_EQ(ob["basis"].size(), 2u);
    const Json xb = Json::parse(run_cli({"xi-basis", "--n", "3"}).out);
    EXPECT_EQ(xb["dimension"], 5);
    const CliRun rnc = run_cli({"rnc", "--points", "1,0,0;0,1,0;0,0,1;1,1,1;1,2,4"});
    ASSERT_EQ(rnc.code, 0) << rnc.err;
    const Json c = Json::parse(rnc.out);
    EXPECT_EQ(c["components"][0], Json::parse(R"(["8","-6","1"])"));
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    const CliRun missing = run_cli({"phi", "--n", "2"});
    EXPECT_EQ(missing.code, 2);
    EXPECT_NE(missing.err.find("--point"), std::string::npos);
    EXPECT_EQ(run_cli({"phi", "--n", "2", "--point", "1,x,3"}).code, 2);
    EXPECT_EQ(run_cli({"phi", "--n", "2", "--point", "1,2"}).code, 2);
    EXPECT_EQ(run_cli({"dim", "--n", "1"}).code, 2);
    EXPECT_EQ(run_cli({"verify", "--suite", "nope", "--n", "2"}).code, 2);
    EXPECT_EQ(run_cli({"tree"}).code, 2);
    EXPECT_EQ(run_cli({"tree", "contract", "--tree", "/nonexistent/tree.json"}).code, 2);
    EXPECT_EQ(run_cli({"dim", "--help"}).code, 0);
}

TEST(Cli, DegenerateInputs) {
    const CliRun base = run_cli({"phi", "--n", "2", "--point", "1,0,0"});
    EXPECT_EQ(base.code, 3);
    EXPECT_NE(base.err.find("BaseLocusPoint"), std::string::npos);
    EXPECT_EQ(run_cli({"cremona", "--point", "0,0,1"}).code, 3);
    EXPECT_EQ(run_cli({"config", "--n", "2", "--point", "1,1,2"}).code, 3);
    const CliRun rnc = run_cli({"rnc", "--points", "1,0,0;0,1,0;0,0,1;1,1,1;1,1,2"});
    EXPECT_EQ(rnc.code, 3);
    EXPECT_NE(rnc.err.find("witness"), std::string::npos);
}

TEST(Cli, VerifyPassesAndIsReproducible) {
    const std::vector<std::string> args{"verify", "--suite", "fiber-contraction", "--n", "2", "--seed", "7",
                                        "--samples", "10"};
    const CliRun a = run_cli(args);
    const CliRun b = run_cli(args);
    EXPECT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const Json j = Json::parse(a.out);
    EXPECT_EQ(j["status"], "pass");
    EXPECT_EQ(j["suite"], "fiber-contraction");
    EXPECT_EQ(j["samples"], 10);
    EXPECT_FALSE(j.contains("elapsed_ms"));
}

TEST(Cli, VerifyTiming) {
    const CliRun r = run_cli({"verify", "--suite", "dimensions", "--n", "3", "--timing"});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(Json::parse(r.out).contains("elapsed_ms"));
}

TEST(Cli, VerifyFailureExitsOne) {
    // no trials means nothing was verified
    EXPECT_EQ(run_cli({"verify", "--suite", "base-locus", "--n", "3", "--samples", "0"}).code, 1);
}

TEST(Cli, SeedFromEnvironment) {
    const std::vector<std::string> args{"verify", "--suite", "base-locus", "--n", "3", "--samples", "3"};
    ::setenv("MF_SEED", "12345", 1);
    const CliRun env = run_cli(args);
    ::unsetenv("MF_SEED");
    EXPECT_EQ(Json::parse(env.out)["seed"], 12345);
    auto explicit_args = args;
    explicit_args.insert(explicit_args.end(), {"--seed", "12345"});
    EXPECT_EQ(run_cli(explicit_args).out, env.out);
    EXPECT_EQ(Json::parse(run_cli(args).out)["seed"], 0);
}

TEST(Cli, TreeContract) {
    TempFile path_tree(R"({"vertices":3,"edges":[[0,1],[1,2]],"marking":{"1":0,"2":0,"3":0,"4":0,"5":1,"6":2,"7":2}})");
    const CliRun r = run_cli({"tree", "contract", "--tree", path_tree.path()});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(Json::parse(r.out).dump(), R"({"central":0,"classes":[[1],[2],[3],[4],[5,6,7]]})");

    TempFile balanced(R"({"vertices":2,"edges":[[0,1]],"marking":{"1":0,"2":0,"3":0,"4":1,"5":1,"6":1}})");
    EXPECT_EQ(Json::parse(run_cli({"tree", "contract", "--tree", balanced.path()}).out).dump(),
              R"({"no_central":[[1,2,3],[4,5,6]]})");

    TempFile unstable(R"({"vertices":2,"edges":[[0,1]],"marking":{"1":0,"2":1,"3":1,"4":1}})");
    EXPECT_EQ(run_cli({"tree", "contract", "--tree", unstable.path()}).code, 3);

    TempFile garbage("not json");
    EXPECT_EQ(run_cli({"tree", "contract", "--tree", garbage.path()}).code, 2);
}

TEST(Cli, TreeEnum2) {
    const CliRun r = run_cli({"tree", "enum2", "--n", "6"});
    EXPECT_EQ(r.code, 0);
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["count"], 25);
    EXPECT_EQ(j["no_central"], 10);
    EXPECT_EQ(j["profiles"]["3|3"], 10);
    EXPECT_EQ(j["profiles"]["2|4"], 15);
    EXPECT_EQ(j["trees"].size(), 25u);
}
