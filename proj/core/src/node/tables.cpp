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

#include "ndnsec/node/tables.hpp"

#include <algorithm>

namespace ndnsec::node {

const Name& LruPolicy::victim(const std::map<Name, CsEntry>& entries) const {
  auto it = std::min_element(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::pair(a.second.last_access, a.second.access_seq) <
           std::pair(b.second.last_access, b.second.access_seq);
  });
  return it->first;
}

const Name& FifoPolicy::victim(const std::map<Name, CsEntry>& entries) const {
  auto it = std::min_element(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::pair(a.second.inserted, a.second.inserted_seq) <
           std::pair(b.second.inserted, b.second.inserted_seq);
  });
  return it->first;
}

ContentStore::ContentStore(std::size_t capacity,
                           std::shared_ptr<const ReplacementPolicy> policy)
    : capacity_(capacity), policy_(std::move(policy)) {}

std::optional<wire::Data> ContentStore::lookup(const Name& name, Time now) {
  auto it = entries_.find(name);
  if (it == entries_.end()) return std::nullopt;
  if (!it->second.fresh(now)) {
    entries_.erase(it);
    return std::nullopt;
  }
  it->second.last_access = now;
  it->second.access_seq = ++seq_;
  return it->second.data;
}

void ContentStore::insert(const wire::Data& data, Time now, Time freshness) {
  if (capacity_ == 0) return;
  CsEntry e{data, now, now, now + freshness, ++seq_, 0};
  e.access_seq = e.inserted_seq;
  entries_.insert_or_assign(data.name, std::move(e));
  evict(now);
}

std::vector<Name> ContentStore::evict(Time now) {
  std::vector<Name> out;
  for (auto it = entries_.begin(); it != entries_.end();) {
    if (!it->second.fresh(now)) {
      out.push_back(it->first);
      it = entries_.erase(it);
    } else {
      ++it;
    }
  }
  while (entries_.size() > capacity_) {
    Name v = policy_->victim(entries_);
    entries_.erase(v);
    out.push_back(std::move(v));
  }
  return out;
}

const CsEntry* ContentStore::find(const Name& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? nullptr : &it->second;
}

PitEntry* Pit::find(const Name& name, Time now) {
  auto it = entries_.find(name);
  if (it == entries_.end()) return nullptr;
  if (it->second.expiry <= now) {
    entries_.erase(it);
    return nullptr;
  }
  return &it->second;
}

PitEntry& Pit::insert(const Name& name, FaceId face, Time expiry) {
  auto& e = entries_[name];
  e.name = name;
  e.faces.insert(face);
  e.expiry = std::max(e.expiry, expiry);
  return e;
}

std::size_t Pit::sweep(Time now) {
  return std::erase_if(entries_, [now](const auto& kv) { return kv.second.expiry <= now; });
}

void Fib::add_route(const Name& prefix, FaceId face) {
  auto& faces = entries_[prefix];
  if (std::find(faces.begin(), faces.end(), face) == faces.end()) faces.push_back(face);
}

const std::vector<FaceId>* Fib::lookup(const Name& name) const {
  for (std::size_t k = name.size() + 1; k-- > 0;) {
    auto it = entries_.find(name.prefix(k));
    if (it != entries_.end()) return &it->second;
  }
  return nullptr;
}

}  // namespace ndnsec::node
