/*
   Copyright 2026 The dgov Authors

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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cli/app.hpp"
#include "cli/config.hpp"
#include "cli/state.hpp"

namespace dgov::cli {
namespace {

namespace fs = std::filesystem;

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

class CliTest : public ::testing::Test {
  protected:
    void SetUp() override {
        std::random_device rd;
        dir_ = fs::temp_directory_path() / ("dgov-cli-" + std::to_string(rd()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    Outcome cli(std::vector<std::string> args, const std::string& state = "state") {
        args.insert(args.begin(), {"--state", (dir_ / state).string(), "--seed", "cli-test"});
        std::ostringstream out, err;
        const int code = run(args, out, err);
        return {code, out.str(), err.str()};
    }

    std::string write(const std::string& name, const std::string& body) {
        const auto p = dir_ / name;
        std::ofstream(p, std::ios::binary) << body;
        return p.string();
    }

    std::string slurp(const std::string& name) {
        std::ifstream in(dir_ / name, std::ios::binary);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    void deploy(const std::string& state = "state") {
        ASSERT_EQ(cli({"setup", "--authorities", "3", "--k", "1"}, state).code, kOk);
        ASSERT_EQ(cli({"authority-setup"}, state).code, kOk);
    }

    fs::path dir_;
};

TEST_F(CliTest, EndToEndShareAndRetrieve) {
    deploy();
    EXPECT_EQ(cli({"register", "--user", "alice", "--fee", "1000001"}).code, kOk);
    EXPECT_EQ(cli({"keygen", "--user", "alice", "--attributes", "entry,agent"}).code, kOk);
    const auto file = write("report.txt", "quarterly numbers\n");
    const auto shared = cli({"share", file, "--policy", "entry,agent", "--keyword", "finance"});
    ASSERT_EQ(shared.code, kOk) << shared.err;
    const auto j = nlohmann::json::parse(shared.out);
    EXPECT_EQ(j["index"], 0);

    const auto got = cli({"retrieve", "--user", "alice", "--index", "0", "--out", (dir_ / "got.txt").string()});
    ASSERT_EQ(got.code, kOk) << got.err;
    EXPECT_EQ(slurp("got.txt"), "quarterly numbers\n");
}

TEST_F(CliTest, UnsatisfiedPolicyExitsPolicyDenied) {
    deploy();
    ASSERT_EQ(cli({"register", "--user", "bob", "--fee", "5000000"}).code, kOk);
    ASSERT_EQ(cli({"keygen", "--user", "bob", "--attributes", "entry"}).code, kOk);
    ASSERT_EQ(cli({"share", write("f", "x"), "--policy", "entry,agent"}).code, kOk);
    const auto r = cli({"retrieve", "--user", "bob", "--index", "0"});
    EXPECT_EQ(r.code, kPolicyDenied);
    EXPECT_NE(r.err.find("policy denied"), std::string::npos);
}

TEST_F(CliTest, FeeAtThresholdIsLedgerReject) {
    deploy();
    const auto r = cli({"register", "--user", "carol", "--fee", "1000000"});
    EXPECT_EQ(r.code, kLedgerReject);
    EXPECT_EQ(cli({"keygen", "--user", "carol", "--attributes", "entry"}).code, kNotFound);
}

TEST_F(CliTest, NotFoundAndUsageCodes) {
    EXPECT_EQ(cli({"authority-setup"}).code, kNotFound);  // empty state directory
    deploy();
    EXPECT_EQ(cli({"retrieve", "--user", "nobody", "--index", "0"}).code, kNotFound);
    ASSERT_EQ(cli({"register", "--user", "dave", "--fee", "1000001"}).code, kOk);
    ASSERT_EQ(cli({"keygen", "--user", "dave", "--attributes", "entry"}).code, kOk);
    EXPECT_EQ(cli({"retrieve", "--user", "dave", "--index", "3"}).code, kNotFound);
    EXPECT_EQ(cli({"share", write("g", "y"), "--policy", "janitor"}).code, kNotFound);
    EXPECT_EQ(cli({"frobnicate"}).code, kUsage);
    EXPECT_EQ(cli({"setup", "--k", "0"}, "other").code, kUsage);
    EXPECT_EQ(cli({"setup"}).code, kGeneric);  // already initialized
}

TEST_F(CliTest, SeededRunsAreReproducible) {
    deploy("a");
    deploy("b");
    const auto va = cli({"verify-transcript"}, "a");
    const auto vb = cli({"verify-transcript"}, "b");
    ASSERT_EQ(va.code, kOk);
    EXPECT_EQ(va.out, vb.out);
    EXPECT_EQ(cli({"trace"}, "a").out, cli({"trace"}, "b").out);
}

TEST_F(CliTest, VerifyTranscriptDetectsTampering) {
    deploy();
    const auto ok = cli({"verify-transcript"});
    ASSERT_EQ(ok.code, kOk);
    EXPECT_TRUE(nlohmann::json::parse(ok.out)["ok"].get<bool>());

    auto bytes = slurp("state/ledger.transcript");
    bytes[bytes.size() / 2] ^= 0x01;
    const auto bad = cli({"verify-transcript", write("bad.transcript", bytes)});
    EXPECT_EQ(bad.code, kVerificationFailed);
    EXPECT_FALSE(nlohmann::json::parse(bad.out)["ok"].get<bool>());
}

TEST_F(CliTest, AttackCommandsReportBothConfigurations) {
    const auto rogue = cli({"attack", "rogue-key"});
    ASSERT_EQ(rogue.code, kOk) << rogue.err;
    std::istringstream lines(rogue.out);
    std::string line;
    std::map<std::string, bool> seen;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        seen[j["configuration"]] = j["success"];
    }
    EXPECT_EQ(seen, (std::map<std::string, bool>{{"insecure-no-pok", true}, {"default", false}}));

    const auto infer = cli({"attack", "infer-s", "--trials", "5"});
    ASSERT_EQ(infer.code, kOk);
    EXPECT_NE(infer.out.find("\"success\":true"), std::string::npos);
    EXPECT_NE(infer.out.find("\"success\":false"), std::string::npos);
}

TEST(CliConfig, RenderParseRoundTrip) {
    auto c = default_config(3, 2);
    c.insecure_no_pok = true;
    c.sys = {10, 20, 30};
    const auto back = parse_config(render_config(c));
    EXPECT_EQ(render_config(back), render_config(c));
    EXPECT_EQ(back.roster.size(), 3u);
    EXPECT_TRUE(back.roster.back().trust);
    EXPECT_EQ(back.roster[0].attributes, (std::vector<std::string>{"entry", "mid", "senior"}));
}

TEST(CliConfig, RejectsInvalidDescriptions) {
    EXPECT_THROW(parse_config("[system]\nk = 0\n"), ConfigError);
    auto c = default_config(3, 2);
    c.roster.back().trust = false;
    EXPECT_THROW(c.validate(), ConfigError);
    c = default_config(3, 2);
    c.sys = {300, 200, 100};
    EXPECT_THROW(c.validate(), ConfigError);
    EXPECT_THROW(parse_config("[deadlines]\nsys = 1,2\n"), ConfigError);
}

TEST(CliConfig, DefaultRosterForOtherSizes) {
    const auto c = default_config(4, 1);
    ASSERT_EQ(c.roster.size(), 4u);
    EXPECT_TRUE(c.roster[3].trust);
    EXPECT_FALSE(c.roster[0].trust);
    EXPECT_NO_THROW(c.validate());
}

}  // namespace
}  // namespace dgov::cli
