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

#include "ndnsec/sig/scheme.hpp"

#include "ndnsec/error.hpp"
#include "ndnsec/tlv.hpp"

namespace ndnsec::sig {

namespace {

template <class... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overload(Fs...) -> Overload<Fs...>;

void require_scheme(SchemeId got, SchemeId want) {
  if (got != want) {
    throw SchemeMismatch("expected " + std::string(scheme_name(want)) + ", got " +
                         std::string(scheme_name(got)));
  }
}

}  // namespace

Bytes PublicKey::serialize() const {
  return std::visit(
      Overload{
          [](const rsa::PublicKey& k) { return rsa::serialize(k); },
          [](const dsa::PublicKey& k) { return dsa::serialize(k); },
          [](const ecdsa::PublicKey& k) { return ecdsa::serialize(k); },
          [](const bls::PublicKey& k) { return bls::serialize(k); },
          [](const group::PublicKey& k) { return group::serialize(k); },
          [](const ring::PublicKey& k) { return ring::serialize(k); },
      },
      data_);
}

PublicKey PublicKey::parse(SchemeId scheme, ByteView data) {
  switch (scheme) {
    case SchemeId::kRsa:
      return PublicKey(rsa::parse_public_key(data));
    case SchemeId::kDsa:
      return PublicKey(dsa::parse_public_key(data));
    case SchemeId::kEcdsa:
      return PublicKey(ecdsa::parse_public_key(data));
    case SchemeId::kBls:
      return PublicKey(bls::parse_public_key(data));
    case SchemeId::kGroup:
      return PublicKey(group::parse_public_key(data));
    case SchemeId::kRing:
      return PublicKey(ring::parse_public_key(data));
    default:
      throw UnknownScheme("no signature key format for scheme " +
                          std::string(scheme_name(scheme)));
  }
}

KeyPair::KeyPair(PublicKey pub, Secret secret)
    : pub_(std::move(pub)), secret_(std::move(secret)) {
  if (pub_.data().index() != secret_.index()) {
    throw SchemeMismatch("public and private key belong to different schemes");
  }
}

Bytes KeyPair::serialize_private() const {
  Bytes secret = std::visit(
      Overload{
          [](const rsa::PrivateKey& k) { return rsa::serialize(k); },
          [](const dsa::PrivateKey& k) { return dsa::serialize(k); },
          [](const ecdsa::PrivateKey& k) { return ecdsa::serialize(k); },
          [](const bls::PrivateKey& k) { return bls::serialize(k); },
          [](const group::MemberKey& k) { return group::serialize(k); },
          [](const ring::SignerKey& k) { return ring::serialize(k); },
      },
      secret_);
  return tlv::encode_fields({pub_.serialize(), secret});
}

KeyPair KeyPair::parse(SchemeId scheme, ByteView data) {
  auto f = tlv::decode_fields(data, 2);
  PublicKey pub = PublicKey::parse(scheme, f[0]);
  switch (scheme) {
    case SchemeId::kRsa: {
      auto k = rsa::parse_private_key(f[1]);
      if (!(k.pub == pub.as<rsa::PublicKey>())) {
        throw MalformedEncoding("RSA key halves disagree");
      }
      return {pub, k};
    }
    case SchemeId::kDsa: {
      auto k = dsa::parse_private_key(f[1]);
      if (!(k.pub == pub.as<dsa::PublicKey>())) {
        throw MalformedEncoding("DSA key halves disagree");
      }
      return {pub, k};
    }
    case SchemeId::kEcdsa: {
      auto k = ecdsa::parse_private_key(f[1]);
      if (!(k.pub == pub.as<ecdsa::PublicKey>())) {
        throw MalformedEncoding("ECDSA key halves disagree");
      }
      return {pub, k};
    }
    case SchemeId::kBls: {
      auto k = bls::parse_private_key(f[1]);
      if (!(k.pub == pub.as<bls::PublicKey>())) {
        throw MalformedEncoding("BLS key halves disagree");
      }
      return {pub, k};
    }
    case SchemeId::kGroup: {
      auto k = group::parse_member_key(f[1]);
      if (!pub.as<group::PublicKey>().contains(k.b)) {
        throw MalformedEncoding("member key is not in the group");
      }
      return {pub, k};
    }
    case SchemeId::kRing: {
      auto k = ring::parse_signer_key(f[1]);
      const auto& members = pub.as<ring::PublicKey>().members;
      if (k.index >= members.size() ||
          DlGroup::standard().pow_g(k.x) != members[k.index]) {
        throw MalformedEncoding("ring secret does not match its slot");
      }
      return {pub, k};
    }
    default:
      throw UnknownScheme("no signature key format for scheme " +
                          std::string(scheme_name(scheme)));
  }
}

KeyPair keygen(const SchemeParams& params, RandomSource& rng) {
  switch (params.scheme) {
    case SchemeId::kRsa: {
      auto k = rsa::keygen(rng, params.rsa_bits);
      return KeyPair(PublicKey(k.pub), k);
    }
    case SchemeId::kDsa: {
      auto k = dsa::keygen(rng);
      return KeyPair(PublicKey(k.pub), k);
    }
    case SchemeId::kEcdsa: {
      auto k = ecdsa::keygen(rng);
      return KeyPair(PublicKey(k.pub), k);
    }
    case SchemeId::kBls: {
      auto k = bls::keygen(rng);
      return KeyPair(PublicKey(k.pub), k);
    }
    case SchemeId::kGroup: {
      auto s = group::setup(params.group_size, rng);
      std::size_t who = rng.uniform(s.members.size());
      return KeyPair(PublicKey(s.pub), s.members[who]);
    }
    case SchemeId::kRing: {
      if (params.ring_size < 2) throw ParameterError("a ring needs at least two members");
      auto keys = ring::generate(params.ring_size, rng);
      std::size_t who = rng.uniform(params.ring_size);
      return KeyPair(PublicKey(keys.ring), ring::SignerKey{who, keys.secrets[who]});
    }
    default:
      throw UnknownScheme("keygen does not cover scheme " +
                          std::string(scheme_name(params.scheme)));
  }
}

Signature sign(const KeyPair& key, ByteView msg, RandomSource& rng) {
  Bytes bytes = std::visit(
      Overload{
          [&](const rsa::PrivateKey& k) { return rsa::sign(k, msg); },
          [&](const dsa::PrivateKey& k) { return dsa::sign(k, msg, rng); },
          [&](const ecdsa::PrivateKey& k) { return ecdsa::sign(k, msg, rng); },
          [&](const bls::PrivateKey& k) { return bls::sign(k, msg); },
          [&](const group::MemberKey& k) { return group::sign(k, msg, rng); },
          [&](const ring::SignerKey& k) {
            return ring::sign(key.public_key().as<ring::PublicKey>(), k, msg, rng);
          },
      },
      key.secret());
  return {key.scheme(), std::move(bytes)};
}

bool verify(const PublicKey& pub, ByteView msg, const Signature& sig) {
  require_scheme(sig.scheme, pub.scheme());
  return std::visit(
      Overload{
          [&](const rsa::PublicKey& k) { return rsa::verify(k, msg, sig.bytes); },
          [&](const dsa::PublicKey& k) { return dsa::verify(k, msg, sig.bytes); },
          [&](const ecdsa::PublicKey& k) { return ecdsa::verify(k, msg, sig.bytes); },
          [&](const bls::PublicKey& k) { return bls::verify(k, msg, sig.bytes); },
          [&](const group::PublicKey& k) { return group::verify(k, msg, sig.bytes); },
          [&](const ring::PublicKey& k) { return ring::verify(k, msg, sig.bytes); },
      },
      pub.data());
}

}  // namespace ndnsec::sig
