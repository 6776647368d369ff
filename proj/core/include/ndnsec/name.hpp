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

// Hierarchical content names. The text form is "/" followed by the
// components joined with "/". Bytes outside 0x21-0x7E, and "/" and "%",
// appear as %XX with uppercase hex. The empty name (text "/") is the root and
// only serves as a catch-all FIB prefix.

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ndnsec/bytes.hpp"

namespace ndnsec {

class Name {
 public:
  Name() = default;
  // Throws MalformedName if a component is empty.
  explicit Name(std::vector<Bytes> components);

  // Throws MalformedName for a missing leading slash, an empty component, a
  // raw control character or a bad escape.
  static Name parse(std::string_view text);
  std::string to_text() const;

  std::size_t size() const { return components_.size(); }
  bool empty() const { return components_.empty(); }
  const Bytes& operator[](std::size_t i) const { return components_[i]; }
  const std::vector<Bytes>& components() const { return components_; }

  // Throws MalformedName for an empty component.
  Name& append(Bytes component);
  Name& append(std::string_view component) { return append(to_bytes(component)); }
  // The first k components.
  Name prefix(std::size_t k) const;

  bool is_prefix_of(const Name& other) const;

  friend bool operator==(const Name&, const Name&) = default;
  friend std::strong_ordering operator<=>(const Name& a, const Name& b) {
    return a.components_ <=> b.components_;
  }

 private:
  std::vector<Bytes> components_;
};

Name parse_name(std::string_view text);
bool is_prefix(const Name& p, const Name& n);
// The matching entry with the most components.
std::optional<Name> longest_prefix_match(std::span<const Name> entries, const Name& n);
std::optional<Name> longest_prefix_match(const std::set<Name>& entries, const Name& n);

}  // namespace ndnsec

template <>
struct std::hash<ndnsec::Name> {
  std::size_t operator()(const ndnsec::Name& n) const noexcept;
};
