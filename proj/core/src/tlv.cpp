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

#include "ndnsec/tlv.hpp"

#include <limits>

#include "ndnsec/error.hpp"

namespace ndnsec::tlv {

std::size_t length_size(std::uint64_t length) {
  if (length < 253) return 1;
  if (length <= 0xFFFF) return 3;
  if (length <= 0xFFFFFFFFull) return 5;
  throw OversizeField("length " + std::to_string(length) + " exceeds 32 bits");
}

void write_length(Bytes& out, std::uint64_t length) {
  switch (length_size(length)) {
    case 1:
      out.push_back(static_cast<std::uint8_t>(length));
      break;
    case 3:
      out.push_back(253);
      out.push_back(static_cast<std::uint8_t>(length >> 8));
      out.push_back(static_cast<std::uint8_t>(length));
      break;
    default:
      out.push_back(254);
      for (int shift = 24; shift >= 0; shift -= 8) {
        out.push_back(static_cast<std::uint8_t>(length >> shift));
      }
  }
}

void write_tlv(Bytes& out, std::uint8_t type, ByteView value) {
  out.push_back(type);
  write_length(out, value.size());
  out.insert(out.end(), value.begin(), value.end());
}

void write_uint32(Bytes& out, std::uint8_t type, std::uint32_t value) {
  std::uint8_t buf[4] = {static_cast<std::uint8_t>(value >> 24),
                         static_cast<std::uint8_t>(value >> 16),
                         static_cast<std::uint8_t>(value >> 8),
                         static_cast<std::uint8_t>(value)};
  write_tlv(out, type, buf);
}

std::optional<std::uint8_t> Reader::peek_type() const {
  if (empty()) return std::nullopt;
  return data_[pos_];
}

std::uint64_t Reader::read_length() {
  if (empty()) throw TruncatedPacket("missing length");
  std::uint8_t first = data_[pos_++];
  std::size_t extra = 0;
  if (first < 253) return first;
  if (first == 253) {
    extra = 2;
  } else if (first == 254) {
    extra = 4;
  } else {
    throw MalformedEncoding("unsupported length prefix 0xFF");
  }
  if (remaining() < extra) throw TruncatedPacket("truncated length");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < extra; ++i) v = (v << 8) | data_[pos_++];
  if (v < (extra == 2 ? 253u : 0x10000u)) throw MalformedEncoding("non-minimal length");
  return v;
}

Element Reader::read() {
  if (empty()) throw TruncatedPacket("missing type");
  std::uint8_t type = data_[pos_++];
  std::uint64_t len = read_length();
  return {type, read_bytes(len)};
}

ByteView Reader::expect(std::uint8_t type) {
  auto t = peek_type();
  if (!t) throw TruncatedPacket("missing element");
  if (*t != type) throw UnknownTlvType("unexpected TLV type " + std::to_string(*t));
  return read().value;
}

ByteView Reader::read_bytes(std::size_t n) {
  if (n > remaining()) throw TruncatedPacket("value shorter than its length");
  ByteView v = data_.subspan(pos_, n);
  pos_ += n;
  return v;
}

void append_field(Bytes& out, ByteView field) {
  write_length(out, field.size());
  out.insert(out.end(), field.begin(), field.end());
}

Bytes encode_fields(std::initializer_list<ByteView> fields) {
  Bytes out;
  for (auto f : fields) append_field(out, f);
  return out;
}

std::vector<Bytes> decode_fields(ByteView data) {
  std::vector<Bytes> out;
  Reader r(data);
  try {
    while (!r.empty()) {
      std::uint64_t len = r.read_length();
      if (len > r.remaining()) throw MalformedEncoding("field overruns input");
      ByteView f = r.read_bytes(len);
      out.emplace_back(f.begin(), f.end());
    }
  } catch (const TruncatedPacket& e) {
    throw MalformedEncoding(e.what());
  }
  return out;
}

std::vector<Bytes> decode_fields(ByteView data, std::size_t expected_count) {
  auto f = decode_fields(data);
  if (f.size() != expected_count) {
    throw MalformedEncoding("expected " + std::to_string(expected_count) +
                            " fields, found " + std::to_string(f.size()));
  }
  return f;
}

std::uint32_t read_uint32(ByteView value) {
  if (value.size() != 4) throw MalformedEncoding("32-bit field must be 4 bytes");
  return (std::uint32_t{value[0]} << 24) | (std::uint32_t{value[1]} << 16) |
         (std::uint32_t{value[2]} << 8) | value[3];
}

}  // namespace ndnsec::tlv
