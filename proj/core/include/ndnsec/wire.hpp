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

// Interest and Data packets in TLV form. Types are one byte, lengths use
// the varint of tlv.hpp, integers are big-endian and fields appear in the
// fixed order below.
//
//   Interest  0x05 { Name 0x07, Nonce 0x0A (4 B), Lifetime 0x0C (4 B, ms) }
//   Data      0x06 { Name 0x07, Content 0x15, KeyLocator 0x1C { Name },
//                    SchemeId 0x1D (1 B), Signature 0x17 }
//   Name      0x07 { NameComponent 0x08 ... }
//
// Interest{/a, nonce 0x01020304, lifetime 4000} encodes as
//
//   05 11 07 03 08 01 61 0A 04 01 02 03 04 0C 04 00 00 0F A0

#include <cstdint>
#include <variant>

#include "ndnsec/bytes.hpp"
#include "ndnsec/name.hpp"

namespace ndnsec::wire {

inline constexpr std::uint8_t kInterest = 0x05;
inline constexpr std::uint8_t kData = 0x06;
inline constexpr std::uint8_t kName = 0x07;
inline constexpr std::uint8_t kNameComponent = 0x08;
inline constexpr std::uint8_t kNonce = 0x0A;
inline constexpr std::uint8_t kLifetime = 0x0C;
inline constexpr std::uint8_t kContent = 0x15;
inline constexpr std::uint8_t kSignature = 0x17;
inline constexpr std::uint8_t kKeyLocator = 0x1C;
inline constexpr std::uint8_t kSchemeId = 0x1D;

inline constexpr std::uint32_t kDefaultLifetimeMs = 4000;

struct Interest {
  Name name;
  std::uint32_t nonce = 0;
  std::uint32_t lifetime_ms = kDefaultLifetimeMs;
  friend bool operator==(const Interest&, const Interest&) = default;
};

struct Data {
  Name name;
  Bytes content;
  Name key_locator;
  std::uint8_t scheme_id = 0;
  Bytes signature;
  friend bool operator==(const Data&, const Data&) = default;
};

using Packet = std::variant<Interest, Data>;

// Throws MalformedName for an empty packet name, MalformedEncoding for a
// zero lifetime and OversizeField for a length beyond the varint range.
Bytes encode(const Interest& interest);
Bytes encode(const Data& data);
Bytes encode_packet(const Packet& packet);

// Throws TruncatedPacket, UnknownTlvType (unknown outer type, or a missing
// or unexpected inner field), DuplicateField, MalformedName, and
// MalformedEncoding for bad field widths and trailing bytes.
Packet decode_packet(ByteView bytes);

// Name, Content, KeyLocator and SchemeId TLVs: everything the signature
// covers.
Bytes signed_portion(const Data& data);

Bytes encode_name(const Name& name);
// Value of a Name TLV.
Name decode_name_value(ByteView value);

const Name& packet_name(const Packet& packet);

}  // namespace ndnsec::wire
