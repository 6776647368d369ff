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

// One NDN forwarder. All state changes go through process_interest and
// process_data, which return the packets to send and on which faces.
//
// Interest pipeline:
//   repeated (name, nonce)      drop, dropped_loop
//   fresh CS entry              Data back on the incoming face, cs_hits
//   live PIT entry              add the face, send nothing
//   FIB longest-prefix match    new PIT entry, forward on the route faces
//   otherwise                   drop, no_route
//
// Data pipeline:
//   no live PIT entry           drop, dropped_unsolicited
//   verification on, bad sig    drop, dropped_bogus, PIT entry kept
//   otherwise                   send on every PIT face, erase the entry,
//                               cache a copy

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "ndnsec/node/tables.hpp"
#include "ndnsec/node/trust_store.hpp"
#include "ndnsec/wire.hpp"

namespace ndnsec::node {

struct Emission {
  FaceId face;
  wire::Packet packet;
  friend bool operator==(const Emission&, const Emission&) = default;
};

struct NodeConfig {
  std::size_t cs_capacity = 64;
  Time cs_freshness = 10000;
  bool verify = false;
  std::shared_ptr<const ReplacementPolicy> policy = std::make_shared<LruPolicy>();
};

struct Counters {
  std::uint64_t cs_hits = 0;
  std::uint64_t cs_misses = 0;
  std::uint64_t forwarded = 0;  // Interest transmissions
  std::uint64_t data_sent = 0;  // Data transmissions
  std::uint64_t dropped_unsolicited = 0;
  std::uint64_t dropped_bogus = 0;
  std::uint64_t no_route = 0;
  std::uint64_t dropped_loop = 0;

  // Flat name -> value table in a fixed order.
  std::vector<std::pair<std::string, std::uint64_t>> table() const;
  friend bool operator==(const Counters&, const Counters&) = default;
};

class Node {
 public:
  explicit Node(NodeConfig config = {}, TrustStore trust = {});

  std::vector<Emission> process_interest(FaceId face, const wire::Interest& interest,
                                         Time now);
  std::vector<Emission> process_data(FaceId face, const wire::Data& data, Time now);

  void fib_add_route(const Name& prefix, FaceId face) { fib_.add_route(prefix, face); }
  std::vector<Name> cs_evict(Time now) { return cs_.evict(now); }
  // Drops expired PIT entries and remembered nonces.
  void sweep(Time now);

  ContentStore& cs() { return cs_; }
  const ContentStore& cs() const { return cs_; }
  const Pit& pit() const { return pit_; }
  const Fib& fib() const { return fib_; }
  TrustStore& trust() { return trust_; }
  const TrustStore& trust() const { return trust_; }
  const NodeConfig& config() const { return config_; }
  const Counters& counters() const { return counters_; }

 private:
  NodeConfig config_;
  TrustStore trust_;
  ContentStore cs_;
  Pit pit_;
  Fib fib_;
  std::map<std::pair<Name, std::uint32_t>, Time> seen_nonces_;  // -> expiry
  Counters counters_;
};

}  // namespace ndnsec::node
