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

#pragma once

// Deterministic discrete-event run of a topology. Events are ordered by
// (tick, node declaration index, arrival order). Consumers re-express an
// unanswered Interest after its lifetime, up to `max_attempts` times in all.
//
// Scenario JSON:
//
//   {
//     "seed": 42, "tick_limit": 100000, "lifetime_ms": 4000,
//     "max_attempts": 3,
//     "schedule": [{"tick": 0, "consumer": "c1", "name": "/snnu/a"}, ...],
//     "attacks": [{"tick": 0, "node": "r1", "name": "/snnu/a",
//                  "forged_key_seed": 99, "content": "bogus",
//                  "freshness": 3000}, ...]
//   }
//
// An attack plants Data signed with a key derived from forged_key_seed
// straight into the node's Content Store. It claims the real producer's key
// locator and scheme.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ndnsec/name.hpp"
#include "ndnsec/sim/topology.hpp"

namespace ndnsec::sim {

inline constexpr Time kDefaultPoisonFreshness = 3000;

struct Request {
  Time tick = 0;
  std::string consumer;
  Name name;
};

struct PoisonAttack {
  Time tick = 0;
  std::string node;
  Name name;
  std::uint64_t forged_key_seed = 0;
  Bytes content;
  Time freshness = kDefaultPoisonFreshness;
};

struct Scenario {
  std::uint64_t seed = 1;
  Time tick_limit = 1'000'000;
  std::uint32_t lifetime_ms = 4000;
  unsigned max_attempts = 3;
  std::vector<Request> schedule;
  std::vector<PoisonAttack> attacks;
};

// Throws ConfigError.
Scenario parse_scenario(std::string_view json_text);

// Adds a poisoning attack. Throws UnknownNode when the node is not in the
// topology.
Scenario inject_poison(const Topology& topo, Scenario scenario, Time tick,
                       const std::string& node, const Name& name,
                       std::uint64_t forged_key_seed);

struct TraceRecord {
  Time tick = 0;
  std::string node;
  // send, recv, request, retransmit, deliver, give_up, poison
  std::string event;
  std::string packet;  // interest, data or empty
  Name name;
  FaceId face = 0;
  std::uint32_t hops = 0;
  friend bool operator==(const TraceRecord&, const TraceRecord&) = default;
};

struct Delivery {
  std::string consumer;
  Name name;
  Time tick = 0;
  std::uint32_t hops = 0;  // link traversals of Interest and Data
  unsigned attempt = 1;
  Bytes content;
  bool authentic = false;  // identical to the producer's content
};

struct Trace {
  std::vector<TraceRecord> records;
  std::vector<Delivery> deliveries;
  std::vector<std::string> failed;  // "consumer name" after the last attempt
  std::map<std::string, node::Counters> counters;
  Time end_tick = 0;

  // One JSON object per line.
  std::string to_jsonl() const;
  // node,counter,value rows under a header.
  std::string counters_csv() const;
};

// Throws UnknownNode for schedule or attack nodes missing from the topology,
// ConfigError when a request targets a non-consumer, and TickLimitExceeded
// when an event falls after the tick limit.
Trace run(const Topology& topo, const Scenario& scenario);

}  // namespace ndnsec::sim
