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

#include "ndnsec/sim/simulator.hpp"

#include <queue>
#include <sstream>
#include <variant>

#include <nlohmann/json.hpp>

#include "ndnsec/error.hpp"
#include "ndnsec/random.hpp"

namespace ndnsec::sim {

using json = nlohmann::json;

namespace {

template <class T>
T field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw ConfigError(std::string("missing field: ") + key);
  return obj.at(key).get<T>();
}

template <class T>
T field_or(const json& obj, const char* key, T fallback) {
  return obj.contains(key) ? obj.at(key).get<T>() : fallback;
}

Name parse_name_field(const json& obj, const char* key) {
  try {
    return Name::parse(field<std::string>(obj, key));
  } catch (const MalformedName& e) {
    throw ConfigError(std::string("bad name: ") + e.what());
  }
}

struct Arrival {
  FaceId face;
  wire::Packet packet;
  std::uint32_t hops;
};
struct Express {
  Name name;
  std::uint64_t request_id;
};
struct Timeout {
  Name name;
  std::uint64_t request_id;
  unsigned attempt;
};
struct Plant {
  std::size_t attack;
};

struct Event {
  Time tick;
  std::size_t node;
  std::uint64_t seq;
  std::variant<Arrival, Express, Timeout, Plant> what;
};

struct Later {
  bool operator()(const Event& a, const Event& b) const {
    return std::tie(a.tick, a.node, a.seq) > std::tie(b.tick, b.node, b.seq);
  }
};

struct Pending {
  std::uint64_t request_id;
  unsigned attempt;
};

struct Peer {
  std::size_t node;
  FaceId face;
  Time latency;
};

std::string_view packet_kind(const wire::Packet& p) {
  return std::holds_alternative<wire::Interest>(p) ? "interest" : "data";
}

class Run {
 public:
  Run(const Topology& topo, const Scenario& scenario)
      : topo_(topo), scenario_(scenario), rng_(scenario.seed) {
    for (std::size_t i = 0; i < topo.nodes.size(); ++i) {
      const auto& spec = topo.nodes[i];
      node::NodeConfig cfg;
      cfg.cs_capacity = spec.cs_capacity;
      cfg.cs_freshness = spec.cs_freshness;
      cfg.verify = spec.verify;
      nodes_.emplace_back(cfg, topo.trust);
      for (const auto& [prefix, face] : topo.routes[i]) {
        nodes_.back().fib_add_route(prefix, face);
      }
    }
    for (const auto& l : topo.links) {
      std::size_t a = *topo.index_of(l.a);
      std::size_t b = *topo.index_of(l.b);
      peers_[{a, l.a_face}] = {b, l.b_face, l.latency};
      peers_[{b, l.b_face}] = {a, l.a_face, l.latency};
    }
    pending_.resize(topo.nodes.size());

    for (const auto& req : scenario.schedule) {
      auto idx = topo.index_of(req.consumer);
      if (!idx) throw UnknownNode(req.consumer);
      if (topo.nodes[*idx].role != Role::kConsumer) {
        throw ConfigError("node " + req.consumer + " is not a consumer");
      }
      push(req.tick, *idx, Express{req.name, next_request_++});
    }
    for (std::size_t i = 0; i < scenario.attacks.size(); ++i) {
      const auto& atk = scenario.attacks[i];
      auto idx = topo.index_of(atk.node);
      if (!idx) throw UnknownNode(atk.node);
      push(atk.tick, *idx, Plant{i});
    }
  }

  Trace execute() {
    while (!queue_.empty()) {
      Event ev = queue_.top();
      queue_.pop();
      if (ev.tick > scenario_.tick_limit) {
        throw TickLimitExceeded("event at tick " + std::to_string(ev.tick) +
                                " beyond limit " +
                                std::to_string(scenario_.tick_limit));
      }
      now_ = ev.tick;
      nodes_[ev.node].sweep(now_);
      std::visit([&](auto& what) { handle(ev.node, what); }, ev.what);
    }
    trace_.end_tick = now_;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      trace_.counters[topo_.nodes[i].id] = nodes_[i].counters();
    }
    return std::move(trace_);
  }

 private:
  template <class T>
  void push(Time tick, std::size_t node, T what) {
    queue_.push(Event{tick, node, seq_++, std::move(what)});
  }

  void record(std::size_t node, std::string event, std::string_view packet,
              const Name& name, FaceId face, std::uint32_t hops) {
    trace_.records.push_back(TraceRecord{now_, topo_.nodes[node].id, std::move(event),
                                         std::string(packet), name, face, hops});
  }

  void express(std::size_t node, const Name& name, std::uint64_t id, unsigned attempt) {
    pending_[node][name] = Pending{id, attempt};
    record(node, attempt == 1 ? "request" : "retransmit", "interest", name, kAppFace, 0);
    wire::Interest interest{name, static_cast<std::uint32_t>(rng_.next_u64()),
                            scenario_.lifetime_ms};
    push(now_ + scenario_.lifetime_ms, node, Timeout{name, id, attempt});
    dispatch(node, nodes_[node].process_interest(kAppFace, interest, now_), 0);
  }

  void handle(std::size_t node, const Express& e) { express(node, e.name, e.request_id, 1); }

  void handle(std::size_t node, const Timeout& t) {
    auto it = pending_[node].find(t.name);
    if (it == pending_[node].end() || it->second.request_id != t.request_id ||
        it->second.attempt != t.attempt) {
      return;
    }
    if (t.attempt >= scenario_.max_attempts) {
      pending_[node].erase(it);
      record(node, "give_up", "interest", t.name, kAppFace, 0);
      trace_.failed.push_back(topo_.nodes[node].id + " " + t.name.to_text());
      return;
    }
    express(node, t.name, t.request_id, t.attempt + 1);
  }

  void handle(std::size_t node, const Arrival& a) {
    const Name& name = wire::packet_name(a.packet);
    record(node, "recv", packet_kind(a.packet), name, a.face, a.hops);
    if (const auto* interest = std::get_if<wire::Interest>(&a.packet)) {
      dispatch(node, nodes_[node].process_interest(a.face, *interest, now_), a.hops);
    } else {
      dispatch(node, nodes_[node].process_data(a.face, std::get<wire::Data>(a.packet), now_),
               a.hops);
    }
  }

  void handle(std::size_t node, const Plant& p) {
    const PoisonAttack& atk = scenario_.attacks[p.attack];
    const Producer* real = topo_.producer_for(atk.name);
    sig::SchemeParams params;
    params.scheme = real ? real->spec.scheme : sig::SchemeId::kBls;
    SeededRandom key_rng(atk.forged_key_seed);
    sig::KeyPair forged = sig::keygen(params, key_rng);

    wire::Data data;
    data.name = atk.name;
    data.content = atk.content;
    if (real) {
      data.key_locator = real->key_name;
    } else {
      data.key_locator = atk.name.prefix(1);
      data.key_locator.append(std::string_view("KEY"));
    }
    data.scheme_id = static_cast<std::uint8_t>(params.scheme);
    data.signature = sig::sign(forged, wire::signed_portion(data), rng_).bytes;
    nodes_[node].cs().insert(data, now_, atk.freshness);
    record(node, "poison", "data", atk.name, kAppFace, 0);
  }

  void dispatch(std::size_t node, std::vector<ndnsec::node::Emission> emissions,
                std::uint32_t hops) {
    for (auto& e : emissions) {
      if (e.face == kAppFace) {
        to_app(node, std::move(e.packet), hops);
        continue;
      }
      auto it = peers_.find({node, e.face});
      if (it == peers_.end()) continue;
      const Peer& peer = it->second;
      record(node, "send", packet_kind(e.packet), wire::packet_name(e.packet), e.face,
             hops + 1);
      push(now_ + peer.latency, peer.node, Arrival{peer.face, std::move(e.packet), hops + 1});
    }
  }

  void to_app(std::size_t node, wire::Packet packet, std::uint32_t hops) {
    if (const auto* interest = std::get_if<wire::Interest>(&packet)) {
      const Producer* producer = producer_at(node, interest->name);
      if (!producer) return;
      wire::Data data;
      data.name = interest->name;
      data.content = producer->content_for(interest->name);
      data.key_locator = producer->key_name;
      data.scheme_id = static_cast<std::uint8_t>(producer->spec.scheme);
      data.signature = sig::sign(*producer->key, wire::signed_portion(data), rng_).bytes;
      record(node, "produce", "data", data.name, kAppFace, hops);
      dispatch(node, nodes_[node].process_data(kAppFace, data, now_), hops);
      return;
    }
    auto& data = std::get<wire::Data>(packet);
    auto it = pending_[node].find(data.name);
    if (it == pending_[node].end()) return;
    Delivery d;
    d.consumer = topo_.nodes[node].id;
    d.name = data.name;
    d.tick = now_;
    d.hops = hops;
    d.attempt = it->second.attempt;
    d.content = data.content;
    const Producer* producer = topo_.producer_for(data.name);
    d.authentic = producer && producer->content_for(data.name) == data.content;
    pending_[node].erase(it);
    record(node, "deliver", "data", data.name, kAppFace, hops);
    trace_.deliveries.push_back(std::move(d));
  }

  const Producer* producer_at(std::size_t node, const Name& name) const {
    const Producer* best = nullptr;
    for (const auto& p : topo_.producers) {
      if (p.spec.node == topo_.nodes[node].id && p.spec.prefix.is_prefix_of(name) &&
          (!best || p.spec.prefix.size() > best->spec.prefix.size())) {
        best = &p;
      }
    }
    return best;
  }

  const Topology& topo_;
  const Scenario& scenario_;
  SeededRandom rng_;
  std::vector<node::Node> nodes_;
  std::map<std::pair<std::size_t, FaceId>, Peer> peers_;
  std::vector<std::map<Name, Pending>> pending_;
  std::priority_queue<Event, std::vector<Event>, Later> queue_;
  std::uint64_t seq_ = 0;
  std::uint64_t next_request_ = 0;
  Time now_ = 0;
  Trace trace_;
};

}  // namespace

Scenario parse_scenario(std::string_view json_text) {
  Scenario s;
  try {
    json doc = json::parse(json_text);
    if (!doc.is_object()) throw ConfigError("scenario must be a JSON object");
    s.seed = field_or<std::uint64_t>(doc, "seed", s.seed);
    s.tick_limit = field_or<Time>(doc, "tick_limit", s.tick_limit);
    s.lifetime_ms = field_or<std::uint32_t>(doc, "lifetime_ms", s.lifetime_ms);
    s.max_attempts = field_or<unsigned>(doc, "max_attempts", s.max_attempts);
    if (s.lifetime_ms == 0) throw ConfigError("lifetime_ms must be positive");
    if (s.max_attempts == 0) throw ConfigError("max_attempts must be positive");
    for (const auto& r : doc.value("schedule", json::array())) {
      s.schedule.push_back(Request{field<Time>(r, "tick"), field<std::string>(r, "consumer"),
                                   parse_name_field(r, "name")});
    }
    for (const auto& a : doc.value("attacks", json::array())) {
      PoisonAttack atk;
      atk.tick = field<Time>(a, "tick");
      atk.node = field<std::string>(a, "node");
      atk.name = parse_name_field(a, "name");
      atk.forged_key_seed = field_or<std::uint64_t>(a, "forged_key_seed", 0);
      atk.content = to_bytes(field_or<std::string>(a, "content", "poisoned"));
      atk.freshness = field_or<Time>(a, "freshness", kDefaultPoisonFreshness);
      s.attacks.push_back(std::move(atk));
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("scenario: ") + e.what());
  }
  return s;
}

Scenario inject_poison(const Topology& topo, Scenario scenario, Time tick,
                       const std::string& node, const Name& name,
                       std::uint64_t forged_key_seed) {
  if (!topo.index_of(node)) throw UnknownNode(node);
  PoisonAttack atk;
  atk.tick = tick;
  atk.node = node;
  atk.name = name;
  atk.forged_key_seed = forged_key_seed;
  atk.content = to_bytes("poisoned");
  scenario.attacks.push_back(std::move(atk));
  return scenario;
}

std::string Trace::to_jsonl() const {
  std::string out;
  for (const auto& r : records) {
    json line = {{"tick", r.tick},         {"node", r.node}, {"event", r.event},
                 {"packet", r.packet},     {"name", r.name.to_text()},
                 {"face", r.face},         {"hops", r.hops}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

std::string Trace::counters_csv() const {
  std::ostringstream out;
  out << "node,counter,value\n";
  for (const auto& [node, c] : counters) {
    for (const auto& [name, value] : c.table()) {
      out << node << ',' << name << ',' << value << '\n';
    }
  }
  return out.str();
}

Trace run(const Topology& topo, const Scenario& scenario) {
  return Run(topo, scenario).execute();
}

}  // namespace ndnsec::sim
