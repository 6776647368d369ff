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

// Prefix-keyed trust anchors: a Data packet is checked against the key of
// the longest entry prefix that matches its key locator.
//
// JSON form, shared with the configuration files and `ndnsec keygen`:
//
//   [{"prefix": "/snnu", "scheme": "bls", "public_key": "<hex>"}, ...]
//
// The network-coding scheme ("nc") takes a BLS public key and checks the
// coded packet carried in the content.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ndnsec/name.hpp"
#include "ndnsec/sig/scheme.hpp"
#include "ndnsec/wire.hpp"

namespace ndnsec::node {

struct TrustEntry {
  Name prefix;
  sig::SchemeId scheme;
  sig::PublicKey key;
};

class TrustStore {
 public:
  // Replaces an entry with the same prefix. Throws SchemeMismatch when the
  // key does not suit the scheme.
  void add(Name prefix, sig::SchemeId scheme, sig::PublicKey key);
  const TrustEntry* lookup(const Name& key_locator) const;
  // Signature over the signed portion (or the coded packet for "nc") under
  // the matching entry. False without a matching entry or when the packet
  // names another scheme.
  bool verify(const wire::Data& data) const;

  std::size_t size() const { return entries_.size(); }
  const std::vector<TrustEntry>& entries() const { return entries_; }

  // Throws ConfigError.
  static TrustStore from_json(std::string_view text);
  std::string to_json() const;

 private:
  std::vector<TrustEntry> entries_;
};

}  // namespace ndnsec::node
