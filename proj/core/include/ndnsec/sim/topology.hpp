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

// Simulation topology, read from JSON:
//
//   {
//     "nodes": [{"id": "c1", "role": "consumer", "verify": true,
//                "cs_capacity": 0, "cs_freshness": 10000}, ...],
//     "links": [{"a": "c1", "a_face": 1, "b": "r1", "b_face": 1,
//                "latency": 5}, ...],
//     "producers": [{"prefix": "/snnu", "node": "p1", "scheme": "bls",
//                    "key_seed": 1, "content_size": 64}, ...]
//   }
//
// Face 0 of every node is its application face; link faces start at 1.
// FIB entries follow the lowest-latency path to each producer.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ndnsec/name.hpp"
#include "ndnsec/node/node.hpp"
#include "ndnsec/sig/scheme.hpp"

namespace ndnsec::sim {

using node::FaceId;
using node::Time;

inline constexpr FaceId kAppFace = 0;

enum class Role { kConsumer, kRouter, kProducer };

std::string_view role_name(Role r);

struct NodeSpec {
  std::string id;
  Role role = Role::kRouter;
  bool verify = false;
  std::size_t cs_capacity = 64;
  Time cs_freshness = 10000;
};

struct LinkSpec {
  std::string a;
  FaceId a_face = 1;
  std::string b;
  FaceId b_face = 1;
  Time latency = 1;
};

struct ProducerSpec {
  Name prefix;
  std::string node;
  sig::SchemeId scheme = sig::SchemeId::kBls;
  std::uint64_t key_seed = 1;
  std::size_t content_size = 64;
};

struct Producer {
  ProducerSpec spec;
  std::shared_ptr<const sig::KeyPair> key;
  Name key_name;  // prefix + "KEY", the key locator of its Data

  // Deterministic content published under the name.
  Bytes content_for(const Name& name) const;
};

struct Topology {
  std::vector<NodeSpec> nodes;
  std::vector<LinkSpec> links;
  std::vector<Producer> producers;
  // node index -> (prefix, face) routes
  std::vector<std::vector<std::pair<Name, FaceId>>> routes;
  // Trust anchors for every producer.
  node::TrustStore trust;

  std::optional<std::size_t> index_of(std::string_view id) const;
  // Producer whose prefix is the longest match for the name.
  const Producer* producer_for(const Name& name) const;
};

// Throws ConfigError for malformed JSON, dangling links, reused faces,
// duplicate node ids, unknown schemes and prefixes some consumer cannot
// reach.
Topology build_topology(std::string_view json_text);

}  // namespace ndnsec::sim
