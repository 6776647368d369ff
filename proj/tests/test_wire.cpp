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

#include <algorithm>

#include <gtest/gtest.h>

#include "ndnsec/error.hpp"
#include "ndnsec/random.hpp"
#include "ndnsec/tlv.hpp"
#include "ndnsec/wire.hpp"

namespace ndnsec::wire {
namespace {

const Bytes kInterestA = from_hex(
    "0511" "0703080161" "0a0401020304" "0c0400000fa0");

Data sample_data() {
  Data d;
  d.name = Name::parse("/snnu/images/a.jpg/v1/s1");
  d.content = to_bytes("hello");
  d.key_locator = Name::parse("/snnu/KEY");
  d.scheme_id = 4;
  d.signature = Bytes(21, 0xAB);
  return d;
}

Name random_name(RandomSource& rng) {
  std::vector<Bytes> comps(1 + rng.uniform(5));
  for (auto& c : comps) c = rng.bytes(1 + rng.uniform(10));
  return Name(comps);
}

TEST(Wire, InterestEncodingIsExact) {
  Interest i{Name::parse("/a"), 0x01020304, 4000};
  EXPECT_EQ(encode(i), kInterestA);
  EXPECT_EQ(kInterestA.size(), 19u);
}

TEST(Wire, InterestDecodesFromExampleBytes) {
  auto p = decode_packet(kInterestA);
  ASSERT_TRUE(std::holds_alternative<Interest>(p));
  EXPECT_EQ(std::get<Interest>(p), (Interest{Name::parse("/a"), 0x01020304, 4000}));
}

TEST(Wire, EmptyContentIsValid) {
  Data d = sample_data();
  d.content.clear();
  Bytes enc = encode(d);
  EXPECT_EQ(std::get<Data>(decode_packet(enc)), d);
  // Zero-length content TLV present.
  Bytes needle{kContent, 0x00};
  EXPECT_NE(std::search(enc.begin(), enc.end(), needle.begin(), needle.end()), enc.end());
}

TEST(Wire, RandomPacketsRoundTrip) {
  SeededRandom rng(3);
  for (int i = 0; i < 1000; ++i) {
    Packet p;
    if (rng.uniform(2) == 0) {
      p = Interest{random_name(rng), static_cast<std::uint32_t>(rng.next_u64()),
                   static_cast<std::uint32_t>(1 + rng.uniform(100000))};
    } else {
      Data d;
      d.name = random_name(rng);
      d.content = rng.bytes(rng.uniform(600));
      d.key_locator = random_name(rng);
      d.scheme_id = static_cast<std::uint8_t>(1 + rng.uniform(7));
      d.signature = rng.bytes(rng.uniform(300));
      p = d;
    }
    EXPECT_EQ(decode_packet(encode_packet(p)), p);
  }
}

TEST(Wire, TruncationIsDetected) {
  Bytes cut(kInterestA.begin(), kInterestA.end() - 1);
  EXPECT_THROW(decode_packet(cut), TruncatedPacket);
  Bytes data = encode(sample_data());
  for (std::size_t n = 0; n < data.size(); ++n) {
    EXPECT_THROW(decode_packet(ByteView(data.data(), n)), Error) << n;
  }
}

TEST(Wire, UnknownOuterTypeIsRejected) {
  Bytes b = kInterestA;
  b[0] = 0x09;
  EXPECT_THROW(decode_packet(b), UnknownTlvType);
}

TEST(Wire, DuplicateFieldIsRejected) {
  // Interest with the nonce repeated.
  Bytes b = from_hex("0517" "0703080161" "0a0401020304" "0a0401020304" "0c0400000fa0");
  EXPECT_THROW(decode_packet(b), DuplicateField);
}

TEST(Wire, TrailingBytesAreRejected) {
  Bytes b = kInterestA;
  b.push_back(0x00);
  EXPECT_THROW(decode_packet(b), MalformedEncoding);
}

TEST(Wire, NonMinimalLengthIsRejected) {
  Bytes b = from_hex("05fd0011" "0703080161" "0a0401020304" "0c0400000fa0");
  EXPECT_THROW(decode_packet(b), MalformedEncoding);
}

TEST(Wire, PacketsNeedAName) {
  Interest i{Name(), 1, 4000};
  EXPECT_THROW(decode_packet(encode(i)), MalformedName);
}

TEST(Wire, SignedPortionExcludesOnlyTheSignature) {
  Data a = sample_data();
  Data b = a;
  b.signature = Bytes(21, 0xCD);
  EXPECT_EQ(signed_portion(a), signed_portion(b));

  Data c = a;
  c.name = Name::parse("/snnu/images/b.jpg/v1/s1");
  EXPECT_NE(signed_portion(a), signed_portion(c));

  Data d = a;
  d.content[0] ^= 1;
  EXPECT_NE(signed_portion(a), signed_portion(d));

  Data e = a;
  e.key_locator = Name::parse("/other/KEY");
  EXPECT_NE(signed_portion(a), signed_portion(e));
}

TEST(Tlv, LengthEncodingBoundaries) {
  for (std::uint64_t len : {0ull, 252ull, 253ull, 65535ull, 65536ull, 0xFFFFFFFFull}) {
    Bytes out;
    tlv::write_length(out, len);
    EXPECT_EQ(out.size(), tlv::length_size(len));
    tlv::Reader r(out);
    EXPECT_EQ(r.read_length(), len);
  }
}

TEST(Tlv, FieldFraming) {
  Bytes a{1, 2, 3}, b{};
  Bytes enc = tlv::encode_fields({a, b});
  auto fields = tlv::decode_fields(enc, 2);
  EXPECT_EQ(fields[0], a);
  EXPECT_EQ(fields[1], b);
  EXPECT_THROW(tlv::decode_fields(enc, 3), MalformedEncoding);
}

}  // namespace
}  // namespace ndnsec::wire
