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

// Content Store, Pending Interest Table and Forwarding Information Base of
// one forwarder. Times are integer ticks (one tick per millisecond).

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "ndnsec/name.hpp"
#include "ndnsec/wire.hpp"

namespace ndnsec::node {

using FaceId = std::uint32_t;
using Time = std::uint64_t;

struct CsEntry {
  wire::Data data;
  Time inserted = 0;
  Time last_access = 0;
  Time fresh_until = 0;
  // Insertion and access order; breaks ties between equal times.
  std::uint64_t inserted_seq = 0;
  std::uint64_t access_seq = 0;

  bool fresh(Time now) const { return now < fresh_until; }
};

// Picks the entry to drop when the store is over capacity.
class ReplacementPolicy {
 public:
  virtual ~ReplacementPolicy() = default;
  // `entries` is never empty.
  virtual const Name& victim(const std::map<Name, CsEntry>& entries) const = 0;
};

class LruPolicy final : public ReplacementPolicy {
 public:
  const Name& victim(const std::map<Name, CsEntry>& entries) const override;
};

class FifoPolicy final : public ReplacementPolicy {
 public:
  const Name& victim(const std::map<Name, CsEntry>& entries) const override;
};

class ContentStore {
 public:
  explicit ContentStore(std::size_t capacity,
                        std::shared_ptr<const ReplacementPolicy> policy =
                            std::make_shared<LruPolicy>());

  // Exact-name lookup of a fresh entry; refreshes its access time. Stale
  // entries are dropped on the way.
  std::optional<wire::Data> lookup(const Name& name, Time now);
  // Stores a copy, replacing any entry of the same name, then evicts.
  void insert(const wire::Data& data, Time now, Time freshness);
  // Drops stale entries, then policy victims until size <= capacity.
  // Returns the evicted names in eviction order.
  std::vector<Name> evict(Time now);
  bool erase(const Name& name) { return entries_.erase(name) != 0; }

  bool contains(const Name& name) const { return entries_.count(name) != 0; }
  const CsEntry* find(const Name& name) const;
  std::size_t size() const { return entries_.size(); }
  std::size_t capacity() const { return capacity_; }
  const std::map<Name, CsEntry>& entries() const { return entries_; }

 private:
  std::size_t capacity_;
  std::shared_ptr<const ReplacementPolicy> policy_;
  std::map<Name, CsEntry> entries_;
  std::uint64_t seq_ = 0;
};

struct PitEntry {
  Name name;
  std::set<FaceId> faces;
  Time expiry = 0;
};

class Pit {
 public:
  // The live entry for the name; an expired one is erased instead.
  PitEntry* find(const Name& name, Time now);
  PitEntry& insert(const Name& name, FaceId face, Time expiry);
  bool erase(const Name& name) { return entries_.erase(name) != 0; }
  // Erases expired entries and returns how many.
  std::size_t sweep(Time now);

  std::size_t size() const { return entries_.size(); }
  const std::map<Name, PitEntry>& entries() const { return entries_; }

 private:
  std::map<Name, PitEntry> entries_;
};

class Fib {
 public:
  // Appends the face to the prefix's list unless already present.
  void add_route(const Name& prefix, FaceId face);
  // Faces of the longest matching prefix, or nullptr.
  const std::vector<FaceId>* lookup(const Name& name) const;
  const std::map<Name, std::vector<FaceId>>& entries() const { return entries_; }

 private:
  std::map<Name, std::vector<FaceId>> entries_;
};

}  // namespace ndnsec::node
