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

#include "ndnsec/wire.hpp"

#include <array>
#include <string>

#include "ndnsec/error.hpp"
#include "ndnsec/tlv.hpp"

namespace ndnsec::wire {

namespace {

void require_name(const Name& n) {
  if (n.empty()) throw MalformedName("packet name needs at least one component");
}

Bytes u32_value(std::uint32_t v) {
  return {static_cast<std::uint8_t>(v >> 24), static_cast<std::uint8_t>(v >> 16),
          static_cast<std::uint8_t>(v >> 8), static_cast<std::uint8_t>(v)};
}

std::string type_hex(std::uint8_t t) {
  static constexpr char kHex[] = "0123456789ABCDEF";
  return std::string("0x") + kHex[t >> 4] + kHex[t & 0xF];
}

// Reads the inner fields of a packet in their fixed order.
class FieldReader {
 public:
  explicit FieldReader(ByteView value) : r_(value) {}

  ByteView next(std::uint8_t type) {
    auto t = r_.peek_type();
    if (!t) throw UnknownTlvType("missing required field " + type_hex(type));
    check_known(*t);
    if (*t != type) throw UnknownTlvType("unexpected field " + type_hex(*t));
    seen_.push_back(type);
    return r_.read().value;
  }

  void finish() {
    if (auto t = r_.peek_type()) {
      check_known(*t);
      throw UnknownTlvType("unexpected field " + type_hex(*t));
    }
  }

 private:
  void check_known(std::uint8_t t) const {
    for (auto s : seen_) {
      if (s == t) throw DuplicateField("field " + type_hex(t) + " appears twice");
    }
  }

  tlv::Reader r_;
  std::vector<std::uint8_t> seen_;
};

std::uint32_t fixed_u32(ByteView v, const char* what) {
  if (v.size() != 4) throw MalformedEncoding(std::string(what) + " must be 4 bytes");
  return tlv::read_uint32(v);
}

Interest decode_interest(ByteView value) {
  FieldReader f(value);
  Interest i;
  i.name = decode_name_value(f.next(kName));
  require_name(i.name);
  i.nonce = fixed_u32(f.next(kNonce), "nonce");
  i.lifetime_ms = fixed_u32(f.next(kLifetime), "lifetime");
  if (i.lifetime_ms == 0) throw MalformedEncoding("interest lifetime must be positive");
  f.finish();
  return i;
}

Data decode_data(ByteView value) {
  FieldReader f(value);
  Data d;
  d.name = decode_name_value(f.next(kName));
  require_name(d.name);
  ByteView content = f.next(kContent);
  d.content.assign(content.begin(), content.end());
  tlv::Reader kl(f.next(kKeyLocator));
  d.key_locator = decode_name_value(kl.expect(kName));
  if (!kl.empty()) throw MalformedEncoding("trailing bytes in key locator");
  ByteView scheme = f.next(kSchemeId);
  if (scheme.size() != 1) throw MalformedEncoding("scheme id must be 1 byte");
  d.scheme_id = scheme[0];
  ByteView sig = f.next(kSignature);
  d.signature.assign(sig.begin(), sig.end());
  f.finish();
  return d;
}

void append_signed_portion(Bytes& out, const Data& d) {
  Bytes name = encode_name(d.name);
  out.insert(out.end(), name.begin(), name.end());
  tlv::write_tlv(out, kContent, d.content);
  tlv::write_tlv(out, kKeyLocator, encode_name(d.key_locator));
  std::array<std::uint8_t, 1> scheme{d.scheme_id};
  tlv::write_tlv(out, kSchemeId, scheme);
}

}  // namespace

Bytes encode_name(const Name& name) {
  Bytes value;
  for (const auto& c : name.components()) tlv::write_tlv(value, kNameComponent, c);
  Bytes out;
  tlv::write_tlv(out, kName, value);
  return out;
}

Name decode_name_value(ByteView value) {
  tlv::Reader r(value);
  std::vector<Bytes> comps;
  while (!r.empty()) {
    ByteView c = r.expect(kNameComponent);
    if (c.empty()) throw MalformedName("empty name component on the wire");
    comps.emplace_back(c.begin(), c.end());
  }
  return Name(std::move(comps));
}

Bytes encode(const Interest& interest) {
  require_name(interest.name);
  if (interest.lifetime_ms == 0) throw MalformedEncoding("interest lifetime must be positive");
  Bytes value = encode_name(interest.name);
  tlv::write_tlv(value, kNonce, u32_value(interest.nonce));
  tlv::write_tlv(value, kLifetime, u32_value(interest.lifetime_ms));
  Bytes out;
  tlv::write_tlv(out, kInterest, value);
  return out;
}

Bytes encode(const Data& data) {
  require_name(data.name);
  Bytes value;
  append_signed_portion(value, data);
  tlv::write_tlv(value, kSignature, data.signature);
  Bytes out;
  tlv::write_tlv(out, kData, value);
  return out;
}

Bytes encode_packet(const Packet& packet) {
  return std::visit([](const auto& p) { return encode(p); }, packet);
}

Packet decode_packet(ByteView bytes) {
  tlv::Reader r(bytes);
  auto outer = r.peek_type();
  if (!outer) throw TruncatedPacket("empty packet");
  if (*outer != kInterest && *outer != kData) {
    throw UnknownTlvType("unknown packet type " + type_hex(*outer));
  }
  tlv::Element e = r.read();
  if (!r.empty()) throw MalformedEncoding("trailing bytes after packet");
  if (e.type == kInterest) return decode_interest(e.value);
  return decode_data(e.value);
}

Bytes signed_portion(const Data& data) {
  Bytes out;
  append_signed_portion(out, data);
  return out;
}

const Name& packet_name(const Packet& packet) {
  return std::visit([](const auto& p) -> const Name& { return p.name; }, packet);
}

}  // namespace ndnsec::wire
