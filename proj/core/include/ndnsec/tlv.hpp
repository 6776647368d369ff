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

// Type-length-value primitives shared by the packet codec and the key and
// signature serializations. Types are one byte; lengths use the varint below.
//
//   length < 253          1 byte
//   length <= 0xFFFF      0xFD, then 2 bytes big-endian
//   length <= 0xFFFFFFFF  0xFE, then 4 bytes big-endian

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <vector>

#include "ndnsec/bytes.hpp"

namespace ndnsec::tlv {

void write_length(Bytes& out, std::uint64_t length);
void write_tlv(Bytes& out, std::uint8_t type, ByteView value);
void write_uint32(Bytes& out, std::uint8_t type, std::uint32_t value);
std::size_t length_size(std::uint64_t length);

struct Element {
  std::uint8_t type;
  ByteView value;
};

// Sequential reader over a byte range. All reads throw TruncatedPacket when
// the range ends early.
class Reader {
 public:
  explicit Reader(ByteView data) : data_(data) {}

  bool empty() const { return pos_ == data_.size(); }
  std::size_t remaining() const { return data_.size() - pos_; }
  std::optional<std::uint8_t> peek_type() const;

  std::uint64_t read_length();
  Element read();
  ByteView read_bytes(std::size_t n);
  // Reads the next element and requires the given type.
  ByteView expect(std::uint8_t type);

 private:
  ByteView data_;
  std::size_t pos_ = 0;
};

// Concatenation of length-prefixed fields, the framing used for keys and
// signatures. Every field is written without a type byte.
Bytes encode_fields(std::initializer_list<ByteView> fields);
void append_field(Bytes& out, ByteView field);
// Throws MalformedEncoding on framing errors.
std::vector<Bytes> decode_fields(ByteView data);
std::vector<Bytes> decode_fields(ByteView data, std::size_t expected_count);

std::uint32_t read_uint32(ByteView value);

}  // namespace ndnsec::tlv
