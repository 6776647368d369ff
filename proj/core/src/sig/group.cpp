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

#include "ndnsec/sig/group.hpp"

#include <algorithm>

#include "ndnsec/error.hpp"
#include "ndnsec/hash.hpp"
#include "ndnsec/tlv.hpp"

namespace ndnsec::sig::group {

namespace {

const DlGroup& grp() { return DlGroup::standard(); }

// Commitment r = g^k already computed by the caller.
Schnorr schnorr_sign(const mpz_class& secret, const mpz_class& r, const mpz_class& k,
                     const mpz_class& c) {
  return {r, (k + c * secret) % grp().q()};
}

bool schnorr_check(const mpz_class& y, const Schnorr& sig, const mpz_class& c) {
  return grp().pow_g(sig.s) == grp().mul(sig.r, grp().pow(y, c));
}

bool element_ok(const mpz_class& v) { return v > 1 && v < grp().p(); }
bool scalar_ok(const mpz_class& v) { return v >= 0 && v < grp().q(); }

MemberKey issue(const mpz_class& manager_secret, const mpz_class& manager_pub,
                RandomSource& rng) {
  const auto& G = grp();
  MemberKey m;
  mpz_class identity = G.random_nonzero_scalar(rng);
  mpz_class blind = G.random_nonzero_scalar(rng);
  m.x = identity * blind % G.q();
  m.b = G.pow_g(m.x);
  mpz_class k = G.random_nonzero_scalar(rng);
  mpz_class r = G.pow_g(k);
  m.cert = schnorr_sign(manager_secret, r, k, certificate_challenge(manager_pub, m.b, r));
  return m;
}

}  // namespace

bool PublicKey::contains(const mpz_class& b) const {
  return std::find(members.begin(), members.end(), b) != members.end();
}

mpz_class certificate_challenge(const mpz_class& manager, const mpz_class& b,
                                const mpz_class& r) {
  const auto& G = grp();
  Sha256 h;
  h.update_framed(as_bytes("ndnsec-group-cert"))
      .update_framed(G.encode_element(manager))
      .update_framed(G.encode_element(b))
      .update_framed(G.encode_element(r));
  return G.reduce(h.finalize());
}

mpz_class message_challenge(const mpz_class& b, const mpz_class& r, ByteView msg) {
  const auto& G = grp();
  Sha256 h;
  h.update_framed(as_bytes("ndnsec-group-msg"))
      .update_framed(G.encode_element(b))
      .update_framed(G.encode_element(r))
      .update_framed(msg);
  return G.reduce(h.finalize());
}

Setup setup(std::size_t n, RandomSource& rng) {
  if (n == 0) throw ParameterError("a group needs at least one member");
  Setup s;
  s.manager_secret = grp().random_nonzero_scalar(rng);
  s.pub.manager = grp().pow_g(s.manager_secret);
  for (std::size_t i = 0; i < n; ++i) add_member(s, rng);
  return s;
}

std::size_t add_member(Setup& s, RandomSource& rng) {
  for (;;) {
    MemberKey m = issue(s.manager_secret, s.pub.manager, rng);
    if (s.registry.count(m.b) != 0) continue;
    std::size_t id = s.members.size();
    s.registry.emplace(m.b, id);
    s.pub.members.push_back(m.b);
    s.members.push_back(std::move(m));
    return id;
  }
}

void revoke(Setup& s, std::size_t member) {
  if (member >= s.members.size()) throw ParameterError("no such group member");
  auto& list = s.pub.members;
  list.erase(std::remove(list.begin(), list.end(), s.members[member].b), list.end());
}

Bytes sign(const MemberKey& member, ByteView msg, RandomSource& rng) {
  const auto& G = grp();
  mpz_class k = G.random_nonzero_scalar(rng);
  mpz_class r = G.pow_g(k);
  Schnorr sig = schnorr_sign(member.x, r, k, message_challenge(member.b, r, msg));
  return tlv::encode_fields({G.encode_element(member.b), G.encode_element(member.cert.r),
                             G.encode_scalar(member.cert.s), G.encode_element(sig.r),
                             G.encode_scalar(sig.s)});
}

std::optional<ParsedSignature> parse_signature(ByteView sig) {
  const auto& G = grp();
  try {
    auto f = tlv::decode_fields(sig, 5);
    for (int i : {0, 1, 3}) {
      if (f[i].size() != G.p_bytes()) return std::nullopt;
    }
    for (int i : {2, 4}) {
      if (f[i].size() != G.q_bytes()) return std::nullopt;
    }
    ParsedSignature p{math::from_bytes(f[0]),
                      {math::from_bytes(f[1]), math::from_bytes(f[2])},
                      {math::from_bytes(f[3]), math::from_bytes(f[4])}};
    if (!element_ok(p.b) || !element_ok(p.cert.r) || !element_ok(p.sig.r) ||
        !scalar_ok(p.cert.s) || !scalar_ok(p.sig.s)) {
      return std::nullopt;
    }
    return p;
  } catch (const MalformedEncoding&) {
    return std::nullopt;
  }
}

bool verify(const PublicKey& pub, ByteView msg, ByteView sig) {
  auto p = parse_signature(sig);
  if (!p || !pub.contains(p->b)) return false;
  if (!schnorr_check(pub.manager, p->cert,
                     certificate_challenge(pub.manager, p->b, p->cert.r))) {
    return false;
  }
  return schnorr_check(p->b, p->sig, message_challenge(p->b, p->sig.r, msg));
}

std::size_t open(const Setup& s, ByteView sig) {
  auto p = parse_signature(sig);
  if (!p) throw OpenFailure("group signature is malformed");
  auto it = s.registry.find(p->b);
  if (it == s.registry.end()) throw OpenFailure("signing key was never issued");
  return it->second;
}

Bytes serialize(const PublicKey& pub) {
  Bytes out = tlv::encode_fields({grp().encode_element(pub.manager)});
  for (const auto& b : pub.members) tlv::append_field(out, grp().encode_element(b));
  return out;
}

Bytes serialize(const MemberKey& m) {
  const auto& G = grp();
  return tlv::encode_fields({G.encode_scalar(m.x), G.encode_element(m.b),
                             G.encode_element(m.cert.r), G.encode_scalar(m.cert.s)});
}

PublicKey parse_public_key(ByteView data) {
  auto f = tlv::decode_fields(data);
  if (f.size() < 2) throw MalformedEncoding("group key needs a manager and a member");
  PublicKey pub;
  pub.manager = math::from_bytes(f[0]);
  if (!grp().in_subgroup(pub.manager)) throw MalformedEncoding("bad manager key");
  for (std::size_t i = 1; i < f.size(); ++i) {
    mpz_class b = math::from_bytes(f[i]);
    if (!grp().in_subgroup(b)) throw MalformedEncoding("bad member key");
    pub.members.push_back(b);
  }
  return pub;
}

MemberKey parse_member_key(ByteView data) {
  auto f = tlv::decode_fields(data, 4);
  MemberKey m{math::from_bytes(f[0]), math::from_bytes(f[1]),
              {math::from_bytes(f[2]), math::from_bytes(f[3])}};
  if (!scalar_ok(m.x) || grp().pow_g(m.x) != m.b) {
    throw MalformedEncoding("group member key is inconsistent");
  }
  return m;
}

}  // namespace ndnsec::sig::group
