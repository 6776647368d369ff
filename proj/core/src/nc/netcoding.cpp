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

#include "ndnsec/nc/netcoding.hpp"

#include <mutex>
#include <utility>

#include "ndnsec/error.hpp"
#include "ndnsec/tlv.hpp"

namespace ndnsec::nc {

namespace {

constexpr std::string_view kDataDomain = "ndnsec-nc-data";
constexpr std::string_view kCoefDomain = "ndnsec-nc-coef";

constexpr std::uint8_t kHeaderType = 0x01;
constexpr std::uint8_t kVectorType = 0x02;
constexpr std::uint8_t kSignatureType = 0x03;
constexpr std::size_t kMaxDimension = 1 << 16;

Bytes u32_bytes(std::uint32_t v) {
  return {static_cast<std::uint8_t>(v >> 24), static_cast<std::uint8_t>(v >> 16),
          static_cast<std::uint8_t>(v >> 8), static_cast<std::uint8_t>(v)};
}

// g_0 .. g_{n-1}, shared by every generation.
std::vector<G1> data_generators(std::size_t n) {
  static std::mutex mu;
  static std::vector<G1> cache;
  std::lock_guard lock(mu);
  while (cache.size() < n) {
    Bytes idx = u32_bytes(static_cast<std::uint32_t>(cache.size()));
    cache.push_back(math::bn::hash_to_g1(idx, kDataDomain));
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(n)};
}

G1 coefficient_generator(ByteView id, std::size_t j) {
  Bytes msg(id.begin(), id.end());
  Bytes idx = u32_bytes(static_cast<std::uint32_t>(j));
  msg.insert(msg.end(), idx.begin(), idx.end());
  return math::bn::hash_to_g1(msg, kCoefDomain);
}

// sum_j c_j h_j + sum_k u_k g_k, skipping zero scalars.
G1 message_point(ByteView id, std::size_t n, std::size_t m, const Vector& v) {
  std::vector<G1> points;
  std::vector<Fr> scalars;
  const auto gens = data_generators(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (v[k].is_zero()) continue;
    points.push_back(gens[k]);
    scalars.push_back(v[k]);
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (v[n + j].is_zero()) continue;
    points.push_back(coefficient_generator(id, j));
    scalars.push_back(v[n + j]);
  }
  return G1::multi_mul(points, scalars);
}

Fr element_from_chunk(ByteView chunk) {
  std::array<std::uint8_t, Fr::kBytes> buf{};
  std::copy(chunk.begin(), chunk.end(), buf.end() - static_cast<std::ptrdiff_t>(chunk.size()));
  return *Fr::from_bytes(buf);
}

}  // namespace

std::size_t Generation::capacity() const {
  const std::size_t total = n * m * kBytesPerElement;
  return total > kLengthPrefix ? total - kLengthPrefix : 0;
}

PrivateKey keygen(RandomSource& rng) { return sig::bls::keygen(rng); }

std::vector<Vector> pack(ByteView content, std::size_t n, std::size_t m) {
  if (n == 0 || m == 0) throw DimensionError("generation dimensions must be positive");
  if (content.empty()) throw DimensionError("content is empty");
  const std::size_t total = n * m * kBytesPerElement;
  if (content.size() + kLengthPrefix > total) {
    throw DimensionError("content does not fit " + std::to_string(m) + " vectors of " +
                         std::to_string(n) + " elements");
  }
  Bytes padded(total, 0);
  std::uint64_t len = content.size();
  for (std::size_t i = 0; i < kLengthPrefix; ++i) {
    padded[i] = static_cast<std::uint8_t>(len >> (8 * (kLengthPrefix - 1 - i)));
  }
  std::copy(content.begin(), content.end(), padded.begin() + kLengthPrefix);

  std::vector<Vector> rows(m, Vector(n));
  ByteView all(padded);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      rows[i][k] = element_from_chunk(all.subspan((i * n + k) * kBytesPerElement,
                                                  kBytesPerElement));
    }
  }
  return rows;
}

std::vector<Vector> augment(std::vector<Vector> rows) {
  const std::size_t m = rows.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) rows[i].push_back(i == j ? Fr::one() : Fr::zero());
  }
  return rows;
}

std::vector<Vector> split_and_augment(ByteView content, const Generation& gen) {
  return augment(pack(content, gen.n, gen.m));
}

CodedPacket nc_sign(const PrivateKey& key, const Generation& gen, Vector vector) {
  if (gen.n == 0 || gen.m == 0 || vector.size() != gen.n + gen.m) {
    throw DimensionError("vector length must be n + m");
  }
  CodedPacket p;
  p.generation_id = gen.id;
  p.n = gen.n;
  p.m = gen.m;
  p.signature = message_point(gen.id, gen.n, gen.m, vector).mul(key.x);
  p.vector = std::move(vector);
  return p;
}

std::vector<CodedPacket> sign_content(const PrivateKey& key, const Generation& gen,
                                      ByteView content) {
  std::vector<CodedPacket> out;
  for (auto& v : split_and_augment(content, gen)) out.push_back(nc_sign(key, gen, std::move(v)));
  return out;
}

CodedPacket combine(std::span<const CodedPacket> packets, std::span<const Fr> coeffs) {
  if (packets.empty() || packets.size() != coeffs.size()) {
    throw DimensionError("combine needs one coefficient per packet");
  }
  const CodedPacket& first = packets.front();
  for (const auto& p : packets) {
    if (p.generation_id != first.generation_id || p.n != first.n || p.m != first.m ||
        p.vector.size() != first.vector.size()) {
      throw GenerationMismatch("combined packets belong to different generations");
    }
  }
  CodedPacket out;
  out.generation_id = first.generation_id;
  out.n = first.n;
  out.m = first.m;
  out.vector.assign(first.vector.size(), Fr::zero());
  std::vector<G1> sigs;
  sigs.reserve(packets.size());
  for (std::size_t i = 0; i < packets.size(); ++i) {
    for (std::size_t k = 0; k < out.vector.size(); ++k) {
      out.vector[k] += coeffs[i] * packets[i].vector[k];
    }
    sigs.push_back(packets[i].signature);
  }
  out.signature = G1::multi_mul(sigs, coeffs);
  return out;
}

bool nc_verify(const PublicKey& pub, const CodedPacket& packet) {
  if (packet.n == 0 || packet.m == 0 || packet.vector.size() != packet.n + packet.m ||
      pub.point.is_infinity()) {
    return false;
  }
  std::array<G1, 2> ps = {packet.signature,
                          message_point(packet.generation_id, packet.n, packet.m,
                                        packet.vector)};
  std::array<const math::bn::G2Prepared*, 2> qs = {&sig::bls::neg_generator_prepared(),
                                                   pub.prepared.get()};
  return math::bn::multi_pairing(ps, qs).is_one();
}

Bytes decode(std::span<const CodedPacket> packets) {
  if (packets.empty()) throw DimensionError("no packets to decode");
  const CodedPacket& first = packets.front();
  const std::size_t n = first.n, m = first.m;
  if (n == 0 || m == 0) throw DimensionError("generation dimensions must be positive");
  for (const auto& p : packets) {
    if (p.generation_id != first.generation_id || p.n != n || p.m != m) {
      throw GenerationMismatch("decoded packets belong to different generations");
    }
    if (p.vector.size() != n + m) throw DimensionError("vector length must be n + m");
  }
  if (packets.size() < m) throw RankDeficient("fewer packets than coefficient directions");

  std::vector<Vector> rows;
  rows.reserve(packets.size());
  for (const auto& p : packets) rows.push_back(p.vector);
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    while (pivot < rows.size() && rows[pivot][n + col].is_zero()) ++pivot;
    if (pivot == rows.size()) throw RankDeficient("coefficient matrix is singular");
    std::swap(rows[col], rows[pivot]);
    const Fr inv = rows[col][n + col].inv();
    for (auto& x : rows[col]) x *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == col || rows[r][n + col].is_zero()) continue;
      const Fr f = rows[r][n + col];
      for (std::size_t k = 0; k < n + m; ++k) rows[r][k] -= f * rows[col][k];
    }
  }

  Bytes packed;
  packed.reserve(n * m * kBytesPerElement);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      Bytes b = rows[i][k].to_bytes();
      if (b[0] != 0) throw MalformedEncoding("decoded element exceeds the packing width");
      packed.insert(packed.end(), b.begin() + 1, b.end());
    }
  }
  std::uint64_t len = 0;
  for (std::size_t i = 0; i < kLengthPrefix; ++i) len = (len << 8) | packed[i];
  if (len > packed.size() - kLengthPrefix) {
    throw MalformedEncoding("decoded length prefix exceeds the generation");
  }
  auto begin = packed.begin() + kLengthPrefix;
  return Bytes(begin, begin + static_cast<std::ptrdiff_t>(len));
}

Bytes CodedPacket::encode() const {
  Bytes out;
  tlv::write_tlv(out, kHeaderType,
                 tlv::encode_fields({generation_id, u32_bytes(static_cast<std::uint32_t>(n)),
                                     u32_bytes(static_cast<std::uint32_t>(m))}));
  Bytes vec;
  vec.reserve(vector.size() * Fr::kBytes);
  for (const auto& x : vector) {
    Bytes b = x.to_bytes();
    vec.insert(vec.end(), b.begin(), b.end());
  }
  tlv::write_tlv(out, kVectorType, vec);
  tlv::write_tlv(out, kSignatureType, math::bn::compress(signature));
  return out;
}

CodedPacket CodedPacket::decode(ByteView data) {
  tlv::Reader r(data);
  CodedPacket p;
  try {
    auto header = tlv::decode_fields(r.expect(kHeaderType), 3);
    if (header[1].size() != 4 || header[2].size() != 4) {
      throw MalformedEncoding("coded packet dimensions must be 32-bit");
    }
    p.generation_id = std::move(header[0]);
    p.n = tlv::read_uint32(header[1]);
    p.m = tlv::read_uint32(header[2]);
    if (p.n == 0 || p.m == 0 || p.n + p.m > kMaxDimension) {
      throw MalformedEncoding("coded packet dimensions out of range");
    }
    ByteView vec = r.expect(kVectorType);
    if (vec.size() != (p.n + p.m) * Fr::kBytes) {
      throw MalformedEncoding("coded vector length does not match n + m");
    }
    p.vector.reserve(p.n + p.m);
    for (std::size_t i = 0; i < p.n + p.m; ++i) {
      auto x = Fr::from_bytes(vec.subspan(i * Fr::kBytes, Fr::kBytes));
      if (!x) throw MalformedEncoding("coded vector element out of range");
      p.vector.push_back(*x);
    }
    auto sig = math::bn::decompress_g1(r.expect(kSignatureType));
    if (!sig) throw MalformedEncoding("coded packet signature is not a G1 point");
    p.signature = *sig;
  } catch (const UnknownTlvType& e) {
    throw MalformedEncoding(e.what());
  }
  if (!r.empty()) throw MalformedEncoding("trailing bytes after coded packet");
  return p;
}

bool Relay::receive(const CodedPacket& packet) {
  if (!nc_verify(producer_, packet)) {
    ++rejected_;
    return false;
  }
  ++accepted_;
  buffer_[packet.generation_id].push_back(packet);
  return true;
}

std::vector<CodedPacket> Relay::emit(ByteView generation_id, std::size_t count,
                                     RandomSource& rng) const {
  auto it = buffer_.find(Bytes(generation_id.begin(), generation_id.end()));
  if (it == buffer_.end() || it->second.empty()) return {};
  std::vector<CodedPacket> out;
  out.reserve(count);
  std::vector<Fr> coeffs(it->second.size());
  for (std::size_t i = 0; i < count; ++i) {
    for (auto& c : coeffs) c = Fr::random(rng);
    out.push_back(combine(it->second, coeffs));
  }
  return out;
}

}  // namespace ndnsec::nc
