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

#include <cstdint>
#include <optional>
#include <string_view>

namespace ndnsec::sig {

// Codes carried in the scheme_id field of a Data packet.
enum class SchemeId : std::uint8_t {
  kRsa = 1,
  kDsa = 2,
  kEcdsa = 3,
  kBls = 4,
  kGroup = 5,
  kRing = 6,
  kNetworkCoding = 7,
};

// Lower-case names used on the command line and in key files.
std::string_view scheme_name(SchemeId id);
// Throws UnknownScheme.
SchemeId parse_scheme(std::string_view name);
std::optional<SchemeId> scheme_from_code(std::uint8_t code);

// Toy parameter sizes (such as an RSA modulus of a few bits) are
// refused unless the environment variable NDNSEC_ALLOW_INSECURE_PARAMS is set
// to 1. Unit tests set it; nothing else should.
bool insecure_params_allowed();

}  // namespace ndnsec::sig
