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

#include "ndnsec/accel/server_aided.hpp"

#include <array>
#include <exception>

#include "ndnsec/error.hpp"
#include "ndnsec/tlv.hpp"

namespace ndnsec::accel {

using math::bn::Fr;
using math::bn::G1;
using math::bn::G2;
using math::bn::G2Prepared;
using math::bn::Gt;

Gt LocalPairingServer::pair(const G1& p, const G2& q) {
  ++served_;
  if (p.is_infinity() || q.is_infinity()) return Gt::one();
  Bytes key = math::bn::compress(q);
  auto it = prepared_.find(key);
  if (it == prepared_.end()) {
    it = prepared_.emplace(std::move(key), std::make_shared<const G2Prepared>(q)).first;
  }
  std::array<G1, 1> ps{p};
  std::array<const G2Prepared*, 1> qs{it->second.get()};
  return math::bn::multi_pairing(ps, qs);
}

Bytes encode_pairing_request(const G1& p, const G2& q) {
  return tlv::encode_fields({math::bn::compress(p), math::bn::compress(q)});
}

Gt decode_pairing_response(ByteView response) {
  auto f = tlv::decode_fields(response, 1);
  auto x = math::bn::deserialize_gt(f[0]);
  if (!x) throw MalformedEncoding("pairing response is not a GT encoding");
  return *x;
}

Bytes PairingService::handle(ByteView request) {
  auto f = tlv::decode_fields(request, 2);
  auto p = math::bn::decompress_g1(f[0]);
  auto q = math::bn::decompress_g2(f[1]);
  if (!p || !q) throw MalformedEncoding("pairing request carries an invalid point");
  return tlv::encode_fields({math::bn::serialize(server_.pair(*p, *q))});
}

Gt RemotePairingServer::pair(const G1& p, const G2& q) {
  Bytes reply;
  try {
    reply = transport_.exchange(encode_pairing_request(p, q));
  } catch (const std::exception& e) {
    throw ServerUnavailable(std::string("pairing server unreachable: ") + e.what());
  }
  try {
    return decode_pairing_response(reply);
  } catch (const MalformedEncoding& e) {
    throw ServerUnavailable(std::string("pairing server reply unusable: ") + e.what());
  }
}

bool sav_verify(const sig::bls::PublicKey& pub, ByteView msg, ByteView sig,
                PairingServer& server, RandomSource& rng) {
  auto sigma = sig::bls::parse_signature(sig);
  if (!sigma || pub.point.is_infinity()) return false;
  const Fr rho = Fr::random_nonzero(rng);
  const Fr t = Fr::random_nonzero(rng);
  const G1 x = sigma->mul(rho) + math::bn::mul_g1_generator(t);
  const G1 y = sig::bls::hash_message(msg).mul(rho);
  const Gt a = server.pair(x, G2::generator());
  const Gt b = server.pair(y, pub.point);
  return a == b * math::bn::pow_gt_generator(t);
}

}  // namespace ndnsec::accel
