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

#include "ndnsec/node/node.hpp"

namespace ndnsec::node {

std::vector<std::pair<std::string, std::uint64_t>> Counters::table() const {
  return {{"cs_hits", cs_hits},
          {"cs_misses", cs_misses},
          {"forwarded", forwarded},
          {"data_sent", data_sent},
          {"dropped_unsolicited", dropped_unsolicited},
          {"dropped_bogus", dropped_bogus},
          {"no_route", no_route},
          {"dropped_loop", dropped_loop}};
}

Node::Node(NodeConfig config, TrustStore trust)
    : config_(std::move(config)),
      trust_(std::move(trust)),
      cs_(config_.cs_capacity, config_.policy) {}

std::vector<Emission> Node::process_interest(FaceId face, const wire::Interest& interest,
                                             Time now) {
  const Time expiry = now + interest.lifetime_ms;
  auto key = std::pair(interest.name, interest.nonce);
  if (auto it = seen_nonces_.find(key); it != seen_nonces_.end() && it->second > now) {
    ++counters_.dropped_loop;
    return {};
  }
  seen_nonces_[key] = expiry;

  if (auto data = cs_.lookup(interest.name, now)) {
    ++counters_.cs_hits;
    ++counters_.data_sent;
    return {{face, std::move(*data)}};
  }
  ++counters_.cs_misses;

  if (PitEntry* e = pit_.find(interest.name, now)) {
    e->faces.insert(face);
    e->expiry = std::max(e->expiry, expiry);
    return {};
  }

  std::vector<Emission> out;
  if (const auto* faces = fib_.lookup(interest.name)) {
    for (FaceId f : *faces) {
      if (f != face) out.push_back({f, interest});
    }
  }
  if (out.empty()) {
    ++counters_.no_route;
    return {};
  }
  pit_.insert(interest.name, face, expiry);
  counters_.forwarded += out.size();
  return out;
}

std::vector<Emission> Node::process_data(FaceId /*face*/, const wire::Data& data, Time now) {
  PitEntry* e = pit_.find(data.name, now);
  if (e == nullptr) {
    ++counters_.dropped_unsolicited;
    return {};
  }
  if (config_.verify && !trust_.verify(data)) {
    ++counters_.dropped_bogus;
    return {};
  }
  std::vector<Emission> out;
  for (FaceId f : e->faces) out.push_back({f, data});
  pit_.erase(data.name);
  counters_.data_sent += out.size();
  cs_.insert(data, now, config_.cs_freshness);
  return out;
}

void Node::sweep(Time now) {
  pit_.sweep(now);
  std::erase_if(seen_nonces_, [now](const auto& kv) { return kv.second <= now; });
  cs_.evict(now);
}

}  // namespace ndnsec::node
