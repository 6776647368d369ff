// Copyright 2026 The ndnsec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>
#include <sys/wait.h>

#include "ndnsec/cli/bench.hpp"
#include "ndnsec/cli/commands.hpp"
#include "ndnsec/node/trust_store.hpp"
#include "sim_fixtures.hpp"

namespace ndnsec::cli {
namespace {

namespace fs = std::filesystem;
using ndnsec::testing::config_path;

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / ("ndnsec_cli_test_" + std::to_string(getpid()));
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

TEST(Bench, SingleIterationRowsHaveZeroDeviation) {
  SystemRandom rng;
  BenchOptions o;
  o.iterations = 1;
  o.warmup = 0;
  o.msg_size = 64;
  auto rows = run_bench(o, rng);
  ASSERT_EQ(rows.size(), 18u);
  std::set<std::pair<sig::SchemeId, std::string>> pairs;
  for (const auto& r : rows) {
    EXPECT_EQ(r.iterations, 1u);
    EXPECT_EQ(r.stddev_us, 0.0);
    EXPECT_GT(r.mean_us, 0.0);
    EXPECT_EQ(r.msg_size, 64u);
    pairs.insert({r.scheme, r.operation});
  }
  EXPECT_EQ(pairs.size(), 18u);
}

TEST(Bench, CsvHasFixedHeaderAndOneRowPerPair) {
  std::ostringstream log, err;
  fs::path out = scratch("bench.csv");
  ASSERT_EQ(cmd_bench({"ecdsa", "bls"}, 3, 128, out, log, err), kExitOk) << err.str();
  auto rows = lines(slurp(out));
  ASSERT_EQ(rows.size(), 7u);
  EXPECT_EQ(rows[0], "scheme,operation,iterations,mean_us,stddev_us,msg_size,rank");
  std::set<std::string> keys;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto comma = rows[i].find(',', rows[i].find(',') + 1);
    keys.insert(rows[i].substr(0, comma));
    EXPECT_EQ(std::count(rows[i].begin(), rows[i].end(), ','), 6);
  }
  EXPECT_EQ(keys.size(), 6u);
  EXPECT_NE(log.str().find("verify ranking"), std::string::npos);
}

TEST(Bench, RanksComeFromReportedMeans) {
  std::vector<BenchRow> rows = {
      {sig::SchemeId::kRsa, "verify", 1, 3.0, 0, 0, 0},
      {sig::SchemeId::kRing, "verify", 1, 9.0, 0, 0, 0},
      {sig::SchemeId::kBls, "verify", 1, 5.0, 0, 0, 0},
      {sig::SchemeId::kRsa, "sign", 1, 7.0, 0, 0, 0},
  };
  assign_ranks(rows);
  EXPECT_EQ(rows[0].rank, 1u);
  EXPECT_EQ(rows[1].rank, 3u);
  EXPECT_EQ(rows[2].rank, 2u);
  EXPECT_EQ(rows[3].rank, 1u);
  EXPECT_EQ(ranking(rows, "verify"),
            (std::vector{sig::SchemeId::kRing, sig::SchemeId::kBls, sig::SchemeId::kRsa}));
}

TEST(Bench, UnknownSchemeExits2) {
  std::ostringstream log, err;
  EXPECT_EQ(cmd_bench({"md5"}, 1, 16, {}, log, err), kExitConfig);
  EXPECT_NE(err.str().find("md5"), std::string::npos);
  EXPECT_EQ(cmd_bench({"nc"}, 1, 16, {}, log, err), kExitConfig);
}

TEST(Sim, LineDemoCountsOneCacheHit) {
  std::ostringstream err;
  fs::path out = scratch("sim_line");
  ASSERT_EQ(cmd_sim(config_path("line_topology.json"), config_path("two_requests.json"), out,
                    err),
            kExitOk)
      << err.str();
  EXPECT_NE(slurp(out / "counters.csv").find("r1,cs_hits,1\n"), std::string::npos);
  EXPECT_FALSE(slurp(out / "trace.jsonl").empty());
  EXPECT_EQ(lines(slurp(out / "deliveries.csv")).size(), 3u);
}

TEST(Sim, MalformedConfigExits2) {
  fs::path bad = scratch("bad_topology.json");
  std::ofstream(bad) << "{\"nodes\": [";
  std::ostringstream err;
  EXPECT_EQ(cmd_sim(bad, config_path("two_requests.json"), scratch("sim_bad"), err),
            kExitConfig);
  EXPECT_FALSE(err.str().empty());
  std::ostringstream err2;
  EXPECT_EQ(cmd_sim(scratch("missing.json"), config_path("two_requests.json"),
                    scratch("sim_bad"), err2),
            kExitConfig);
}

TEST(Sim, TickLimitZeroExits3) {
  fs::path scen = scratch("limit0.json");
  std::ofstream(scen) << R"({"tick_limit":0,"schedule":[{"tick":0,"consumer":"c1","name":"/snnu/a"}]})";
  std::ostringstream err;
  EXPECT_EQ(cmd_sim(config_path("line_topology.json"), scen, scratch("sim_limit"), err),
            kExitTickLimit);
}

TEST(Keygen, BlsKeyLoadsIntoTrustStore) {
  fs::path out = scratch("bls.json");
  std::ostringstream err;
  ASSERT_EQ(cmd_keygen("bls", out, "/snnu", err), kExitOk) << err.str();
  auto store = node::TrustStore::from_json("[" + slurp(out) + "]");
  ASSERT_EQ(store.size(), 1u);
  const auto* e = store.lookup(Name::parse("/snnu/KEY"));
  ASSERT_TRUE(e);
  EXPECT_EQ(e->scheme, sig::SchemeId::kBls);
  auto again = node::TrustStore::from_json(store.to_json());
  EXPECT_EQ(again.entries()[0].key, e->key);
}

TEST(Keygen, RsaModulusIs1024Bits) {
  fs::path out = scratch("rsa.json");
  std::ostringstream err;
  ASSERT_EQ(cmd_keygen("rsa", out, "/", err), kExitOk) << err.str();
  auto store = node::TrustStore::from_json("[" + slurp(out) + "]");
  const auto& pub = store.entries()[0].key.as<sig::rsa::PublicKey>();
  EXPECT_EQ(pub.modulus_bits(), 1024u);
}

TEST(Keygen, UnknownSchemeExits2) {
  std::ostringstream err;
  EXPECT_EQ(cmd_keygen("unknown", scratch("x.json"), "/", err), kExitConfig);
  EXPECT_FALSE(fs::exists(scratch("x.json")));
}

int run_tool(const std::string& args) {
  std::string cmd = std::string(NDNSEC_TOOL) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Tool, ExitCodes) {
  EXPECT_EQ(run_tool("keygen --scheme unknown --out " + scratch("t.json").string()), 2);
  EXPECT_EQ(run_tool("keygen --scheme ecdsa --out " + scratch("t.json").string()), 0);
  EXPECT_EQ(run_tool("sim --topology " + config_path("line_topology.json") + " --scenario " +
                     config_path("two_requests.json") + " --out " +
                     scratch("tool_sim").string()),
            0);
  EXPECT_EQ(run_tool("sim --topology " + config_path("two_requests.json") + " --scenario " +
                     config_path("two_requests.json") + " --out " +
                     scratch("tool_sim").string()),
            2);
  EXPECT_EQ(run_tool("bench --schemes ecdsa --iterations 2 --out " +
                     scratch("tool_bench.csv").string()),
            0);
  EXPECT_EQ(run_tool("frobnicate"), 2);
}

}  // namespace
}  // namespace ndnsec::cli
