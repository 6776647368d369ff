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

#include "ndnsec/sim/topology.hpp"

#include <limits>
#include <queue>
#include <set>
#include <tuple>

#include <nlohmann/json.hpp>

#include "ndnsec/error.hpp"
#include "ndnsec/hash.hpp"
#include "ndnsec/random.hpp"

namespace ndnsec::sim {

using json = nlohmann::json;

std::string_view role_name(Role r) {
  switch (r) {
    case Role::kConsumer: return "consumer";
    case Role::kRouter: return "router";
    case Role::kProducer: return "producer";
  }
  return "router";
}

namespace {

Role parse_role(const std::string& s) {
  if (s == "consumer") return Role::kConsumer;
  if (s == "router") return Role::kRouter;
  if (s == "producer") return Role::kProducer;
  throw ConfigError("unknown role: " + s);
}

template <class T>
T field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw ConfigError(std::string("missing field: ") + key);
  return obj.at(key).get<T>();
}

template <class T>
T field_or(const json& obj, const char* key, T fallback) {
  return obj.contains(key) ? obj.at(key).get<T>() : fallback;
}

Name parse_prefix(const std::string& text) {
  try {
    return Name::parse(text);
  } catch (const MalformedName& e) {
    throw ConfigError(std::string("bad name: ") + e.what());
  }
}

void parse_sections(const json& doc, Topology& topo) {
  if (!doc.is_object()) throw ConfigError("topology must be a JSON object");
  for (const auto& n : doc.value("nodes", json::array())) {
    NodeSpec spec;
    spec.id = field<std::string>(n, "id");
    spec.role = parse_role(field_or<std::string>(n, "role", "router"));
    spec.verify = field_or<bool>(n, "verify", false);
    spec.cs_capacity = field_or<std::size_t>(
        n, "cs_capacity", spec.role == Role::kConsumer ? 0 : 64);
    spec.cs_freshness = field_or<Time>(n, "cs_freshness", spec.cs_freshness);
    topo.nodes.push_back(std::move(spec));
  }
  for (const auto& l : doc.value("links", json::array())) {
    LinkSpec spec;
    spec.a = field<std::string>(l, "a");
    spec.a_face = field<FaceId>(l, "a_face");
    spec.b = field<std::string>(l, "b");
    spec.b_face = field<FaceId>(l, "b_face");
    spec.latency = field_or<Time>(l, "latency", 1);
    topo.links.push_back(std::move(spec));
  }
  for (const auto& p : doc.value("producers", json::array())) {
    ProducerSpec spec;
    spec.prefix = parse_prefix(field<std::string>(p, "prefix"));
    spec.node = field<std::string>(p, "node");
    try {
      spec.scheme = sig::parse_scheme(field_or<std::string>(p, "scheme", "bls"));
    } catch (const UnknownScheme& e) {
      throw ConfigError(e.what());
    }
    spec.key_seed = field_or<std::uint64_t>(p, "key_seed", 1);
    spec.content_size = field_or<std::size_t>(p, "content_size", 64);
    topo.producers.push_back(Producer{std::move(spec), nullptr, Name()});
  }
}

void validate(const Topology& topo) {
  std::set<std::string> ids;
  for (const auto& n : topo.nodes) {
    if (n.id.empty()) throw ConfigError("empty node id");
    if (!ids.insert(n.id).second) throw ConfigError("duplicate node id: " + n.id);
  }
  std::set<std::pair<std::string, FaceId>> faces;
  for (const auto& l : topo.links) {
    for (const auto& [id, face] : {std::pair{l.a, l.a_face}, std::pair{l.b, l.b_face}}) {
      if (!ids.count(id)) throw ConfigError("link to unknown node: " + id);
      if (face == kAppFace) throw ConfigError("face 0 is the application face");
      if (!faces.insert({id, face}).second) {
        throw ConfigError("face " + std::to_string(face) + " of " + id + " reused");
      }
    }
    if (l.a == l.b) throw ConfigError("self link at " + l.a);
    if (l.latency == 0) throw ConfigError("link latency must be positive");
  }
  for (const auto& p : topo.producers) {
    auto idx = topo.index_of(p.spec.node);
    if (!idx) throw ConfigError("producer on unknown node: " + p.spec.node);
    if (topo.nodes[*idx].role != Role::kProducer) {
      throw ConfigError("node " + p.spec.node + " is not a producer");
    }
    if (p.spec.scheme == sig::SchemeId::kNetworkCoding) {
      throw ConfigError("producers sign with a plain signature scheme");
    }
    if (p.spec.prefix.empty()) throw ConfigError("producer prefix is empty");
  }
}

// Dijkstra from `origin`; returns the face each node uses toward it.
std::vector<std::optional<FaceId>> next_hops(const Topology& topo, std::size_t origin) {
  const std::size_t n = topo.nodes.size();
  struct Edge {
    std::size_t to;
    FaceId to_face;  // face on `to` that leads back to the source of the edge
    Time latency;
  };
  std::vector<std::vector<Edge>> adj(n);
  for (const auto& l : topo.links) {
    std::size_t a = *topo.index_of(l.a);
    std::size_t b = *topo.index_of(l.b);
    adj[a].push_back({b, l.b_face, l.latency});
    adj[b].push_back({a, l.a_face, l.latency});
  }
  constexpr Time kInf = std::numeric_limits<Time>::max();
  std::vector<Time> dist(n, kInf);
  std::vector<std::optional<FaceId>> hop(n);
  using Item = std::pair<Time, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[origin] = 0;
  queue.push({0, origin});
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (d != dist[u]) continue;
    for (const auto& e : adj[u]) {
      if (d + e.latency < dist[e.to]) {
        dist[e.to] = d + e.latency;
        hop[e.to] = e.to_face;
        queue.push({dist[e.to], e.to});
      }
    }
  }
  return hop;
}

}  // namespace

Bytes Producer::content_for(const Name& name) const {
  Bytes seed = to_bytes(name.to_text());
  for (int i = 0; i < 8; ++i) {
    seed.push_back(static_cast<std::uint8_t>(spec.key_seed >> (8 * i)));
  }
  return mgf1_sha256(seed, spec.content_size);
}

std::optional<std::size_t> Topology::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].id == id) return i;
  }
  return std::nullopt;
}

const Producer* Topology::producer_for(const Name& name) const {
  const Producer* best = nullptr;
  for (const auto& p : producers) {
    if (p.spec.prefix.is_prefix_of(name) &&
        (!best || p.spec.prefix.size() > best->spec.prefix.size())) {
      best = &p;
    }
  }
  return best;
}

Topology build_topology(std::string_view json_text) {
  Topology topo;
  try {
    parse_sections(json::parse(json_text), topo);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("topology: ") + e.what());
  }
  validate(topo);

  topo.routes.assign(topo.nodes.size(), {});
  for (auto& p : topo.producers) {
    SeededRandom rng(p.spec.key_seed);
    sig::SchemeParams params;
    params.scheme = p.spec.scheme;
    p.key = std::make_shared<const sig::KeyPair>(sig::keygen(params, rng));
    p.key_name = p.spec.prefix;
    p.key_name.append(std::string_view("KEY"));
    topo.trust.add(p.spec.prefix, p.spec.scheme, p.key->public_key());

    std::size_t origin = *topo.index_of(p.spec.node);
    auto hops = next_hops(topo, origin);
    topo.routes[origin].push_back({p.spec.prefix, kAppFace});
    for (std::size_t i = 0; i < topo.nodes.size(); ++i) {
      if (i == origin) continue;
      if (hops[i]) {
        topo.routes[i].push_back({p.spec.prefix, *hops[i]});
      } else if (topo.nodes[i].role == Role::kConsumer) {
        throw ConfigError("consumer " + topo.nodes[i].id + " cannot reach " +
                          p.spec.prefix.to_text());
      }
    }
  }
  return topo;
}

}  // namespace ndnsec::sim
