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

#include "ndnsec/sig/ring.hpp"

#include <algorithm>

#include "ndnsec/error.hpp"
#include "ndnsec/hash.hpp"
#include "ndnsec/tlv.hpp"

namespace ndnsec::sig::ring {

namespace {

const DlGroup& grp() { return DlGroup::standard(); }

// Hashes of the ring and the message, fixed for one signature.
class Chain {
 public:
  Chain(const PublicKey& ring, ByteView msg) {
    Sha256 h;
    h.update_framed(as_bytes("ndnsec-ring-keys"));
    for (const auto& y : ring.members) h.update_framed(grp().encode_element(y));
    ring_digest_ = h.finalize();
    msg_digest_ = sha256(msg);
  }

  mpz_class next(const mpz_class& commitment) const {
    Sha256 h;
    h.update_framed(as_bytes("ndnsec-ring"))
        .update(ring_digest_)
        .update(msg_digest_)
        .update_framed(grp().encode_element(commitment));
    return grp().reduce(h.finalize());
  }

 private:
  Digest ring_digest_{}, msg_digest_{};
};

mpz_class commitment(const mpz_class& s, const mpz_class& y, const mpz_class& c) {
  return grp().mul(grp().pow_g(s), grp().pow(y, c));
}

}  // namespace

Keys generate(std::size_t n, RandomSource& rng) {
  Keys k;
  while (k.secrets.size() < n) {
    mpz_class x = grp().random_nonzero_scalar(rng);
    mpz_class y = grp().pow_g(x);
    if (std::find(k.ring.members.begin(), k.ring.members.end(), y) !=
        k.ring.members.end()) {
      continue;
    }
    k.secrets.push_back(x);
    k.ring.members.push_back(y);
  }
  return k;
}

Bytes sign(const PublicKey& ring, const SignerKey& signer, ByteView msg,
           RandomSource& rng) {
  const auto& G = grp();
  const std::size_t n = ring.members.size();
  if (signer.index >= n) throw IndexOutOfRing("signer index outside the ring");
  if (n < 2) throw ParameterError("a ring needs at least two members");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (ring.members[i] == ring.members[j]) {
        throw ParameterError("ring members must be distinct");
      }
    }
  }
  if (G.pow_g(signer.x) != ring.members[signer.index]) {
    throw ParameterError("secret does not match the signer's ring slot");
  }

  Chain chain(ring, msg);
  std::vector<mpz_class> c(n), s(n);
  const std::size_t me = signer.index;
  mpz_class k = G.random_nonzero_scalar(rng);
  c[(me + 1) % n] = chain.next(G.pow_g(k));
  for (std::size_t step = 1; step < n; ++step) {
    std::size_t i = (me + step) % n;
    s[i] = G.random_scalar(rng);
    c[(i + 1) % n] = chain.next(commitment(s[i], ring.members[i], c[i]));
  }
  s[me] = (k - signer.x * c[me]) % G.q();
  if (s[me] < 0) s[me] += G.q();

  Bytes out = tlv::encode_fields({G.encode_scalar(c[0])});
  for (const auto& v : s) tlv::append_field(out, G.encode_scalar(v));
  return out;
}

std::optional<ParsedSignature> parse_signature(ByteView sig) {
  const auto& G = grp();
  try {
    auto f = tlv::decode_fields(sig);
    if (f.size() < 3) return std::nullopt;
    ParsedSignature p;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i].size() != G.q_bytes()) return std::nullopt;
      mpz_class v = math::from_bytes(f[i]);
      if (v >= G.q()) return std::nullopt;
      if (i == 0) {
        p.c0 = v;
      } else {
        p.s.push_back(v);
      }
    }
    return p;
  } catch (const MalformedEncoding&) {
    return std::nullopt;
  }
}

bool verify(const PublicKey& ring, ByteView msg, ByteView sig) {
  auto p = parse_signature(sig);
  if (!p || p->s.size() != ring.members.size()) return false;
  Chain chain(ring, msg);
  mpz_class c = p->c0;
  for (std::size_t i = 0; i < ring.members.size(); ++i) {
    c = chain.next(commitment(p->s[i], ring.members[i], c));
  }
  return c == p->c0;
}

Bytes serialize(const PublicKey& ring) {
  Bytes out;
  for (const auto& y : ring.members) tlv::append_field(out, grp().encode_element(y));
  return out;
}

Bytes serialize(const SignerKey& signer) {
  Bytes idx(4);
  for (int i = 0; i < 4; ++i) {
    idx[i] = static_cast<std::uint8_t>(signer.index >> (24 - 8 * i));
  }
  return tlv::encode_fields({idx, grp().encode_scalar(signer.x)});
}

PublicKey parse_public_key(ByteView data) {
  PublicKey ring;
  for (const auto& f : tlv::decode_fields(data)) {
    mpz_class y = math::from_bytes(f);
    if (!grp().in_subgroup(y)) throw MalformedEncoding("ring key not in subgroup");
    ring.members.push_back(y);
  }
  if (ring.members.size() < 2) throw MalformedEncoding("ring needs two members");
  return ring;
}

SignerKey parse_signer_key(ByteView data) {
  auto f = tlv::decode_fields(data, 2);
  SignerKey k{tlv::read_uint32(f[0]), math::from_bytes(f[1])};
  if (k.x <= 0 || k.x >= grp().q()) throw MalformedEncoding("ring secret out of range");
  return k;
}

}  // namespace ndnsec::sig::ring
