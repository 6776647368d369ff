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

#include <gtest/gtest.h>

#include "ndnsec/error.hpp"
#include "ndnsec/sim/simulator.hpp"
#include "sim_fixtures.hpp"

namespace ndnsec::sim {
namespace {

using ndnsec::testing::line_topology;
using ndnsec::testing::read_config;

const Name kName = Name::parse("/snnu/images/a.jpg/v1/s1");

Scenario two_requests() { return parse_scenario(read_config("two_requests.json")); }

std::size_t count_events(const Trace& t, const std::string& node, const std::string& event) {
  std::size_t n = 0;
  for (const auto& r : t.records) n += r.node == node && r.event == event;
  return n;
}

TEST(Topology, MinimalLine) {
  auto topo = build_topology(read_config("line_topology.json"));
  EXPECT_EQ(topo.nodes.size(), 3u);
  EXPECT_EQ(topo.links.size(), 2u);
  auto r1 = *topo.index_of("r1");
  ASSERT_EQ(topo.routes[r1].size(), 1u);
  EXPECT_EQ(topo.routes[r1][0], (std::pair{Name::parse("/snnu"), FaceId{2}}));
  auto p1 = *topo.index_of("p1");
  EXPECT_EQ(topo.routes[p1][0].second, kAppFace);
  EXPECT_EQ(topo.trust.size(), 1u);
}

TEST(Topology, ConfigErrors) {
  const char* bad[] = {
      "not json",
      R"({"nodes":[{"id":"a"}],"links":[{"a":"a","a_face":1,"b":"ghost","b_face":1}]})",
      R"({"nodes":[{"id":"a"},{"id":"b"},{"id":"c"}],
          "links":[{"a":"a","a_face":1,"b":"b","b_face":1},{"a":"a","a_face":1,"b":"c","b_face":1}]})",
      R"({"nodes":[{"id":"a"},{"id":"b"}],"links":[{"a":"a","a_face":0,"b":"b","b_face":1}]})",
      R"({"nodes":[{"id":"a"},{"id":"a"}]})",
      R"({"nodes":[{"id":"c","role":"consumer"},{"id":"p","role":"producer"}],
          "producers":[{"prefix":"/x","node":"p"}]})",
      R"({"nodes":[{"id":"r"}],"producers":[{"prefix":"/x","node":"r"}]})",
      R"({"nodes":[{"id":"p","role":"producer"}],"producers":[{"prefix":"/x","node":"p","scheme":"rot13"}]})",
      R"({"nodes":[{"id":"a","role":"wizard"}]})",
      R"({"nodes":[{"id":"a","cs_capacity":"many"}]})",
  };
  for (const char* cfg : bad) EXPECT_THROW(build_topology(cfg), ConfigError) << cfg;
}

TEST(Topology, SharedRouterServesBothConsumers) {
  auto topo = build_topology(read_config("shared_router.json"));
  auto scen = parse_scenario(R"({"schedule":[
      {"tick":0,"consumer":"alice","name":"/snnu/images/a.jpg/v1/s1"},
      {"tick":0,"consumer":"bob","name":"/snnu/images/a.jpg/v1/s2"}]})");
  auto trace = run(topo, scen);
  ASSERT_EQ(trace.deliveries.size(), 2u);
  for (const auto& d : trace.deliveries) EXPECT_TRUE(d.authentic);
}

TEST(Topology, ShortestPathIsChosen) {
  auto topo = build_topology(R"({
    "nodes":[{"id":"c","role":"consumer"},{"id":"slow"},{"id":"fast1"},{"id":"fast2"},
             {"id":"p","role":"producer"}],
    "links":[{"a":"c","a_face":1,"b":"slow","b_face":1,"latency":50},
             {"a":"slow","a_face":2,"b":"p","b_face":1,"latency":50},
             {"a":"c","a_face":2,"b":"fast1","b_face":1,"latency":5},
             {"a":"fast1","a_face":2,"b":"fast2","b_face":1,"latency":5},
             {"a":"fast2","a_face":2,"b":"p","b_face":2,"latency":5}],
    "producers":[{"prefix":"/snnu","node":"p"}]})");
  EXPECT_EQ(topo.routes[*topo.index_of("c")][0].second, 2u);
}

TEST(Run, SecondRequestHitsRouterCache) {
  auto topo = build_topology(read_config("line_topology.json"));
  auto trace = run(topo, two_requests());
  ASSERT_EQ(trace.deliveries.size(), 2u);
  EXPECT_EQ(count_events(trace, "p1", "produce"), 1u);
  EXPECT_LT(trace.deliveries[1].hops, trace.deliveries[0].hops);
  EXPECT_EQ(trace.deliveries[0].hops, 4u);
  EXPECT_EQ(trace.deliveries[1].hops, 2u);
  EXPECT_EQ(trace.counters.at("r1").cs_hits, 1u);
  for (const auto& d : trace.deliveries) EXPECT_TRUE(d.authentic);
}

TEST(Run, SameSeedSameTrace) {
  auto topo = build_topology(read_config("line_topology.json"));
  auto scen = parse_scenario(read_config("poison.json"));
  auto a = run(topo, scen);
  auto b = run(build_topology(read_config("line_topology.json")), scen);
  EXPECT_EQ(a.to_jsonl(), b.to_jsonl());
  EXPECT_EQ(a.counters_csv(), b.counters_csv());
  EXPECT_FALSE(a.to_jsonl().empty());
}

TEST(Run, EmptyScheduleIsQuiet) {
  auto topo = build_topology(read_config("line_topology.json"));
  auto trace = run(topo, Scenario{});
  EXPECT_TRUE(trace.records.empty());
  EXPECT_TRUE(trace.deliveries.empty());
  for (const auto& [node, c] : trace.counters) EXPECT_EQ(c, node::Counters{}) << node;
}

TEST(Run, ReceptionsFollowEmissionsByLinkLatency) {
  auto topo = build_topology(read_config("shared_router.json"));
  auto scen = parse_scenario(R"({"schedule":[
      {"tick":0,"consumer":"alice","name":"/snnu/x"},
      {"tick":1,"consumer":"bob","name":"/snnu/x"},
      {"tick":40,"consumer":"bob","name":"/snnu/x"},
      {"tick":40,"consumer":"alice","name":"/snnu/y"}]})");
  auto trace = run(topo, scen);
  std::size_t sends = 0, recvs = 0;
  for (const auto& r : trace.records) {
    sends += r.event == "send";
    if (r.event != "recv") continue;
    ++recvs;
    bool matched = false;
    for (const auto& l : topo.links) {
      for (auto [from, ff, to, tf] : {std::tuple{l.a, l.a_face, l.b, l.b_face},
                                      std::tuple{l.b, l.b_face, l.a, l.a_face}}) {
        if (to != r.node || tf != r.face || r.tick < l.latency) continue;
        for (const auto& s : trace.records) {
          if (s.event == "send" && s.node == from && s.face == ff &&
              s.tick == r.tick - l.latency && s.name == r.name && s.packet == r.packet) {
            matched = true;
          }
        }
      }
    }
    EXPECT_TRUE(matched) << r.node << " " << r.tick << " " << r.name.to_text();
  }
  EXPECT_EQ(sends, recvs);
  EXPECT_GT(sends, 0u);
}

TEST(Poison, VerifyingConsumerRecovers) {
  auto topo = build_topology(line_topology(true));
  auto trace = run(topo, parse_scenario(read_config("poison.json")));
  EXPECT_GE(trace.counters.at("c1").dropped_bogus, 1u);
  ASSERT_EQ(trace.deliveries.size(), 1u);
  EXPECT_TRUE(trace.deliveries[0].authentic);
  EXPECT_EQ(trace.deliveries[0].content, topo.producers[0].content_for(kName));
  EXPECT_GT(trace.deliveries[0].attempt, 1u);
}

TEST(Poison, NonVerifyingConsumerIsFooled) {
  auto topo = build_topology(line_topology(false));
  auto trace = run(topo, parse_scenario(read_config("poison.json")));
  ASSERT_EQ(trace.deliveries.size(), 1u);
  EXPECT_FALSE(trace.deliveries[0].authentic);
  EXPECT_NE(trace.deliveries[0].content, topo.producers[0].content_for(kName));
  EXPECT_EQ(trace.deliveries[0].content, to_bytes("illegitimate content"));
}

TEST(Poison, InjectedAttackRecoversWithVerification) {
  auto topo = build_topology(line_topology(true));
  auto scen = inject_poison(topo, Scenario{}, 0, "r1", kName, 5);
  scen.schedule.push_back({1, "c1", kName});
  auto trace = run(topo, scen);
  EXPECT_GE(trace.counters.at("c1").dropped_bogus, 1u);
  ASSERT_EQ(trace.deliveries.size(), 1u);
  EXPECT_TRUE(trace.deliveries[0].authentic);
}

TEST(Poison, UnrequestedNameHasNoEffect) {
  auto topo = build_topology(line_topology(false));
  auto clean = run(topo, two_requests());
  auto scen = inject_poison(topo, two_requests(), 0, "r1", Name::parse("/snnu/other"), 9);
  auto poisoned = run(topo, scen);
  ASSERT_EQ(clean.deliveries.size(), poisoned.deliveries.size());
  for (std::size_t i = 0; i < clean.deliveries.size(); ++i) {
    EXPECT_EQ(clean.deliveries[i].content, poisoned.deliveries[i].content);
    EXPECT_EQ(clean.deliveries[i].hops, poisoned.deliveries[i].hops);
    EXPECT_EQ(clean.deliveries[i].tick, poisoned.deliveries[i].tick);
  }
}

TEST(Poison, UnknownNodeThrows) {
  auto topo = build_topology(line_topology(true));
  EXPECT_THROW(inject_poison(topo, Scenario{}, 0, "r9", kName, 1), UnknownNode);
  Scenario s;
  s.attacks.push_back({0, "ghost", kName, 1, to_bytes("x"), 10});
  EXPECT_THROW(run(topo, s), UnknownNode);
}

TEST(Run, DeliveriesToVerifyingConsumersAreAuthentic) {
  auto topo = build_topology(line_topology(true));
  auto scen = parse_scenario(read_config("poison.json"));
  for (int i = 0; i < 5; ++i) {
    scen.attacks.push_back({static_cast<Time>(20 * i), "r1",
                            Name::parse("/snnu/v/" + std::to_string(i)),
                            static_cast<std::uint64_t>(100 + i), to_bytes("fake"), 100000});
    scen.schedule.push_back({static_cast<Time>(20 * i + 1), "c1",
                             Name::parse("/snnu/v/" + std::to_string(i))});
  }
  auto trace = run(topo, scen);
  for (const auto& d : trace.deliveries) {
    EXPECT_TRUE(d.authentic) << d.name.to_text();
  }
}

TEST(Run, UnansweredRequestGivesUpAfterThreeAttempts) {
  auto topo = build_topology(line_topology(true));
  auto scen = parse_scenario(R"({"schedule":[{"tick":0,"consumer":"c1","name":"/edu/x"}]})");
  auto trace = run(topo, scen);
  EXPECT_TRUE(trace.deliveries.empty());
  EXPECT_EQ(count_events(trace, "c1", "request"), 1u);
  EXPECT_EQ(count_events(trace, "c1", "retransmit"), 2u);
  ASSERT_EQ(trace.failed.size(), 1u);
  EXPECT_EQ(trace.counters.at("c1").no_route, 3u);
}

TEST(Run, TickLimit) {
  auto topo = build_topology(line_topology(true));
  auto scen = two_requests();
  scen.tick_limit = 0;
  EXPECT_THROW(run(topo, scen), TickLimitExceeded);
  scen.tick_limit = 50;
  EXPECT_THROW(run(topo, scen), TickLimitExceeded);
}

TEST(Run, RequestsMustComeFromConsumers) {
  auto topo = build_topology(line_topology(true));
  auto scen = parse_scenario(R"({"schedule":[{"tick":0,"consumer":"r1","name":"/snnu/x"}]})");
  EXPECT_THROW(run(topo, scen), ConfigError);
  auto ghost = parse_scenario(R"({"schedule":[{"tick":0,"consumer":"zz","name":"/snnu/x"}]})");
  EXPECT_THROW(run(topo, ghost), UnknownNode);
}

TEST(Scenario, ParseErrors) {
  EXPECT_THROW(parse_scenario("[]"), ConfigError);
  EXPECT_THROW(parse_scenario(R"({"schedule":[{"tick":0,"consumer":"c1"}]})"), ConfigError);
  EXPECT_THROW(parse_scenario(R"({"schedule":[{"tick":0,"consumer":"c1","name":"x"}]})"),
               ConfigError);
  EXPECT_THROW(parse_scenario(R"({"lifetime_ms":0})"), ConfigError);
}

TEST(Trace, ExportFormats) {
  auto topo = build_topology(read_config("line_topology.json"));
  auto trace = run(topo, two_requests());
  std::string jsonl = trace.to_jsonl();
  EXPECT_EQ(static_cast<std::size_t>(std::count(jsonl.begin(), jsonl.end(), '\n')),
            trace.records.size());
  EXPECT_EQ(jsonl.rfind("{\"event\":\"request\"", 0), 0u);
  std::string csv = trace.counters_csv();
  EXPECT_EQ(csv.rfind("node,counter,value\n", 0), 0u);
  EXPECT_NE(csv.find("r1,cs_hits,1\n"), std::string::npos);
}

}  // namespace
}  // namespace ndnsec::sim
