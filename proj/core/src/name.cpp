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

#include "ndnsec/name.hpp"

#include "ndnsec/error.hpp"

namespace ndnsec {

namespace {

bool plain(std::uint8_t c) { return c >= 0x21 && c <= 0x7E && c != '/' && c != '%'; }

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  return -1;
}

}  // namespace

Name::Name(std::vector<Bytes> components) : components_(std::move(components)) {
  for (const auto& c : components_) {
    if (c.empty()) throw MalformedName("name component is empty");
  }
}

Name Name::parse(std::string_view text) {
  if (text.empty() || text.front() != '/') {
    throw MalformedName("name must start with '/': " + std::string(text));
  }
  Name out;
  if (text.size() == 1) return out;
  text.remove_prefix(1);
  Bytes current;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '/') {
      if (current.empty()) throw MalformedName("empty name component");
      out.components_.push_back(std::move(current));
      current.clear();
      continue;
    }
    const auto c = static_cast<std::uint8_t>(text[i]);
    if (c == '%') {
      int hi = i + 1 < text.size() ? hex_value(text[i + 1]) : -1;
      int lo = i + 2 < text.size() ? hex_value(text[i + 2]) : -1;
      if (hi < 0 || lo < 0) throw MalformedName("bad percent escape in name");
      current.push_back(static_cast<std::uint8_t>(hi * 16 + lo));
      i += 2;
    } else if (c < 0x20 || c == 0x7F) {
      throw MalformedName("raw control character in name");
    } else {
      current.push_back(c);
    }
  }
  return out;
}

std::string Name::to_text() const {
  if (components_.empty()) return "/";
  static constexpr char kHex[] = "0123456789ABCDEF";
  std::string out;
  for (const auto& comp : components_) {
    out.push_back('/');
    for (std::uint8_t c : comp) {
      if (plain(c)) {
        out.push_back(static_cast<char>(c));
      } else {
        out.push_back('%');
        out.push_back(kHex[c >> 4]);
        out.push_back(kHex[c & 0xF]);
      }
    }
  }
  return out;
}

Name& Name::append(Bytes component) {
  if (component.empty()) throw MalformedName("name component is empty");
  components_.push_back(std::move(component));
  return *this;
}

Name Name::prefix(std::size_t k) const {
  Name out;
  k = std::min(k, components_.size());
  out.components_.assign(components_.begin(),
                         components_.begin() + static_cast<std::ptrdiff_t>(k));
  return out;
}

bool Name::is_prefix_of(const Name& other) const {
  if (size() > other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (components_[i] != other.components_[i]) return false;
  }
  return true;
}

Name parse_name(std::string_view text) { return Name::parse(text); }

bool is_prefix(const Name& p, const Name& n) { return p.is_prefix_of(n); }

std::optional<Name> longest_prefix_match(std::span<const Name> entries, const Name& n) {
  const Name* best = nullptr;
  for (const auto& e : entries) {
    if (e.is_prefix_of(n) && (best == nullptr || e.size() > best->size())) best = &e;
  }
  if (best == nullptr) return std::nullopt;
  return *best;
}

std::optional<Name> longest_prefix_match(const std::set<Name>& entries, const Name& n) {
  // Probe prefixes from the longest down.
  for (std::size_t k = n.size() + 1; k-- > 0;) {
    auto it = entries.find(n.prefix(k));
    if (it != entries.end()) return *it;
  }
  return std::nullopt;
}

}  // namespace ndnsec

std::size_t std::hash<ndnsec::Name>::operator()(const ndnsec::Name& n) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (const auto& c : n.components()) {
    for (std::uint8_t b : c) h = (h ^ b) * 0x100000001b3ULL;
    h = (h ^ 0x2F) * 0x100000001b3ULL;
  }
  return h;
}
