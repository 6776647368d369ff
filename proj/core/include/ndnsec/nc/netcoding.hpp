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

// Homomorphic signatures for linear network coding over the BN pairing
// groups. Content is cut into m vectors of n field elements; vector i is
// augmented with the i-th unit vector, so a coded packet carries
// (u_1..u_n, c_1..c_m). With public generators g_k for the data slots and
// per-generation points h_j = H(id, j) for the coefficient slots,
//
//   sigma = x * (sum_j c_j h_j + sum_k u_k g_k),   pk = x * Q
//
// is checked as e(sigma, -Q) * e(sum_j c_j h_j + sum_k u_k g_k, pk) == 1.
// The map from vector to signature is linear, so any linear combination of
// signed packets carries a valid signature for the combined vector.

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "ndnsec/bytes.hpp"
#include "ndnsec/math/bn.hpp"
#include "ndnsec/random.hpp"
#include "ndnsec/sig/bls.hpp"

namespace ndnsec::nc {

using math::bn::Fr;
using math::bn::G1;
using PublicKey = sig::bls::PublicKey;
using PrivateKey = sig::bls::PrivateKey;

inline constexpr std::size_t kDefaultDataDim = 32;     // n
inline constexpr std::size_t kDefaultVectorCount = 8;  // m
// Content bytes packed into one field element.
inline constexpr std::size_t kBytesPerElement = 19;
// Big-endian content length in front of the packed content.
inline constexpr std::size_t kLengthPrefix = 8;

using Vector = std::vector<Fr>;

struct Generation {
  Bytes id;
  std::size_t n = kDefaultDataDim;
  std::size_t m = kDefaultVectorCount;

  // Content bytes that fit one generation.
  std::size_t capacity() const;
};

struct CodedPacket {
  Bytes generation_id;
  std::size_t n = 0;
  std::size_t m = 0;
  Vector vector;  // n data elements, then m coefficients
  G1 signature;

  std::span<const Fr> data() const { return {vector.data(), n}; }
  std::span<const Fr> coefficients() const { return {vector.data() + n, m}; }

  // Content TLV body: header (id, n, m), vector, signature.
  Bytes encode() const;
  // Throws MalformedEncoding or TruncatedPacket.
  static CodedPacket decode(ByteView data);

  friend bool operator==(const CodedPacket& a, const CodedPacket& b) {
    return a.generation_id == b.generation_id && a.n == b.n && a.m == b.m &&
           a.vector == b.vector && a.signature == b.signature;
  }
};

PrivateKey keygen(RandomSource& rng);

// Length prefix, content and zero padding cut into m vectors of n elements.
// Throws DimensionError for empty content, zero dimensions or content larger
// than the generation capacity.
std::vector<Vector> pack(ByteView content, std::size_t n, std::size_t m);
// Appends the i-th unit vector of length rows.size() to row i.
std::vector<Vector> augment(std::vector<Vector> rows);
std::vector<Vector> split_and_augment(ByteView content, const Generation& gen);

// Throws DimensionError when the vector length is not n + m.
CodedPacket nc_sign(const PrivateKey& key, const Generation& gen, Vector vector);
// Signs every augmented vector of the content.
std::vector<CodedPacket> sign_content(const PrivateKey& key, const Generation& gen,
                                      ByteView content);

// sum_i coeffs[i] * packets[i] in both vector and signature. Throws
// GenerationMismatch when the packets disagree on generation or dimensions
// and DimensionError for empty or unequal-length inputs.
CodedPacket combine(std::span<const CodedPacket> packets, std::span<const Fr> coeffs);

bool nc_verify(const PublicKey& pub, const CodedPacket& packet);

// Gaussian elimination on the coefficient part. Needs at least m packets of
// one generation; throws RankDeficient when they do not span all m
// coefficient directions, and GenerationMismatch or DimensionError for
// inconsistent inputs.
Bytes decode(std::span<const CodedPacket> packets);

// An in-network recoder: keeps the verified packets of each generation and
// emits fresh random combinations of them.
class Relay {
 public:
  explicit Relay(PublicKey producer) : producer_(std::move(producer)) {}

  // Verifies and buffers the packet; false if it was rejected.
  bool receive(const CodedPacket& packet);
  // `count` combinations with uniform coefficients of the buffered packets
  // of the generation. Empty if nothing is buffered.
  std::vector<CodedPacket> emit(ByteView generation_id, std::size_t count,
                                RandomSource& rng) const;

  std::size_t accepted() const { return accepted_; }
  std::size_t rejected() const { return rejected_; }

 private:
  PublicKey producer_;
  std::map<Bytes, std::vector<CodedPacket>> buffer_;
  std::size_t accepted_ = 0;
  std::size_t rejected_ = 0;
};

}  // namespace ndnsec::nc
