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

#include "ndnsec/sig/scheme_id.hpp"

#include <array>
#include <cstdlib>
#include <string>

#include "ndnsec/error.hpp"

namespace ndnsec::sig {

namespace {

struct NamedScheme {
  SchemeId id;
  std::string_view name;
};

constexpr std::array<NamedScheme, 7> kNames = {{
    {SchemeId::kRsa, "rsa"},
    {SchemeId::kDsa, "dsa"},
    {SchemeId::kEcdsa, "ecdsa"},
    {SchemeId::kBls, "bls"},
    {SchemeId::kGroup, "group"},
    {SchemeId::kRing, "ring"},
    {SchemeId::kNetworkCoding, "nc"},
}};

}  // namespace

std::string_view scheme_name(SchemeId id) {
  for (const auto& n : kNames) {
    if (n.id == id) return n.name;
  }
  return "unknown";
}

SchemeId parse_scheme(std::string_view name) {
  for (const auto& n : kNames) {
    if (n.name == name) return n.id;
  }
  throw UnknownScheme("unknown scheme '" + std::string(name) + "'");
}

std::optional<SchemeId> scheme_from_code(std::uint8_t code) {
  if (code >= 1 && code <= 7) return static_cast<SchemeId>(code);
  return std::nullopt;
}

bool insecure_params_allowed() {
  const char* v = std::getenv("NDNSEC_ALLOW_INSECURE_PARAMS");
  return v != nullptr && std::string_view(v) == "1";
}

}  // namespace ndnsec::sig
