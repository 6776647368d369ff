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

#include "ndnsec/accel/batch.hpp"

#include <map>
#include <optional>
#include <string>

#include "ndnsec/error.hpp"
#include "ndnsec/math/bigint.hpp"
#include "ndnsec/math/bn.hpp"
#include "ndnsec/sig/dl.hpp"

namespace ndnsec::accel {

namespace {

using math::bn::Fr;
using math::bn::G1;
using math::bn::G2Prepared;

bool verify_each(const BatchInstance& b) {
  for (const auto& e : b.entries) {
    if (!sig::verify(e.pub, e.msg, e.sig)) return false;
  }
  return true;
}

mpz_class small_exponent(unsigned bits, RandomSource& rng) {
  for (;;) {
    mpz_class d = math::random_below(mpz_class(1) << bits, rng);
    if (d != 0) return d;
  }
}

bool batch_bls(const BatchInstance& b, RandomSource& rng) {
  const std::size_t n = b.entries.size();
  std::vector<G1> sigmas;
  std::vector<Fr> deltas;
  sigmas.reserve(n);
  deltas.reserve(n);

  struct KeyGroup {
    const G2Prepared* prepared;
    std::vector<G1> hashes;
    std::vector<Fr> deltas;
  };
  std::vector<KeyGroup> groups;
  std::map<const G2Prepared*, std::size_t> by_pointer;
  std::map<Bytes, std::size_t> by_encoding;

  for (const auto& e : b.entries) {
    const auto& pk = e.pub.as<sig::bls::PublicKey>();
    if (pk.point.is_infinity()) return false;
    auto sigma = sig::bls::parse_signature(e.sig.bytes);
    if (!sigma) return false;
    Fr d = Fr::from_mpz(small_exponent(b.security_bits, rng));
    sigmas.push_back(*sigma);
    deltas.push_back(d);

    std::size_t g;
    if (auto it = by_pointer.find(pk.prepared.get()); it != by_pointer.end()) {
      g = it->second;
    } else {
      Bytes enc = math::bn::compress(pk.point);
      if (auto jt = by_encoding.find(enc); jt != by_encoding.end()) {
        g = jt->second;
      } else {
        g = groups.size();
        groups.push_back({pk.prepared.get(), {}, {}});
        by_encoding.emplace(std::move(enc), g);
      }
      by_pointer.emplace(pk.prepared.get(), g);
    }
    groups[g].hashes.push_back(sig::bls::hash_message(e.msg));
    groups[g].deltas.push_back(d);
  }

  std::vector<G1> ps;
  std::vector<const G2Prepared*> qs;
  ps.push_back(G1::multi_mul(sigmas, deltas));
  qs.push_back(&sig::bls::neg_generator_prepared());
  for (const auto& g : groups) {
    ps.push_back(G1::multi_mul(g.hashes, g.deltas));
    qs.push_back(g.prepared);
  }
  return math::bn::multi_pairing(ps, qs).is_one();
}

// prod_i bases[i]^exps[i] mod m with one shared squaring chain.
mpz_class multi_pow(const std::vector<mpz_class>& bases,
                    const std::vector<mpz_class>& exps, const mpz_class& m) {
  std::size_t bits = 0;
  for (const auto& e : exps) bits = std::max(bits, mpz_sizeinbase(e.get_mpz_t(), 2));
  mpz_class acc = 1;
  for (std::size_t i = bits; i-- > 0;) {
    acc = acc * acc % m;
    for (std::size_t j = 0; j < bases.size(); ++j) {
      if (mpz_tstbit(exps[j].get_mpz_t(), i)) acc = acc * bases[j] % m;
    }
  }
  return acc;
}

std::optional<bool> batch_rsa(const BatchInstance& b, RandomSource& rng) {
  const auto& pk = b.entries.front().pub.as<sig::rsa::PublicKey>();
  if (mpz_tstbit(pk.n.get_mpz_t(), 0) == 0 || mpz_tstbit(pk.n.get_mpz_t(), 1) == 0) {
    return std::nullopt;
  }
  for (const auto& e : b.entries) {
    if (!(e.pub.as<sig::rsa::PublicKey>() == pk)) return std::nullopt;
  }
  std::vector<mpz_class> sigmas, hashes, deltas;
  for (const auto& e : b.entries) {
    auto s = sig::rsa::parse_signature(pk, e.sig.bytes);
    if (!s) return false;
    mpz_class h = sig::rsa::encode(pk, e.msg);
    // e is odd, so a valid s has the Jacobi symbol of h. With N = 3 (mod 4)
    // this catches s replaced by -s.
    if (mpz_jacobi(s->get_mpz_t(), pk.n.get_mpz_t()) !=
        mpz_jacobi(h.get_mpz_t(), pk.n.get_mpz_t())) {
      return false;
    }
    sigmas.push_back(std::move(*s));
    hashes.push_back(std::move(h));
    deltas.push_back(small_exponent(b.security_bits, rng));
  }
  mpz_class lhs = math::powm(multi_pow(sigmas, deltas, pk.n), pk.e, pk.n);
  return lhs == multi_pow(hashes, deltas, pk.n);
}

std::optional<bool> batch_group(const BatchInstance& b, RandomSource& rng) {
  const auto& pk = b.entries.front().pub.as<sig::group::PublicKey>();
  for (const auto& e : b.entries) {
    if (!(e.pub.as<sig::group::PublicKey>() == pk)) return std::nullopt;
  }
  const auto& G = sig::DlGroup::standard();
  const mpz_class& q = G.q();

  // g^(sum d s) == prod R^d * M^(sum d c) * prod_B B^(sum d' c')
  mpz_class g_exp = 0;
  mpz_class manager_exp = 0;
  std::map<mpz_class, mpz_class> member_exp;
  std::vector<mpz_class> bases, exps;
  for (const auto& e : b.entries) {
    auto p = sig::group::parse_signature(e.sig.bytes);
    if (!p || !pk.contains(p->b)) return false;
    // The commitments must lie in the quadratic residues, where every
    // element other than 1 has large prime order.
    if (!G.is_residue(p->cert.r) || !G.is_residue(p->sig.r)) return false;
    mpz_class cc = sig::group::certificate_challenge(pk.manager, p->b, p->cert.r);
    mpz_class cm = sig::group::message_challenge(p->b, p->sig.r, e.msg);
    mpz_class d1 = small_exponent(b.security_bits, rng);
    mpz_class d2 = small_exponent(b.security_bits, rng);
    g_exp += d1 * p->cert.s + d2 * p->sig.s;
    manager_exp += d1 * cc;
    member_exp[p->b] += d2 * cm;
    bases.push_back(p->cert.r);
    exps.push_back(d1);
    bases.push_back(p->sig.r);
    exps.push_back(d2);
  }
  mpz_class rhs = multi_pow(bases, exps, G.p());
  rhs = G.mul(rhs, G.pow(pk.manager, manager_exp % q));
  for (const auto& [member, exp] : member_exp) {
    rhs = G.mul(rhs, G.pow(member, exp % q));
  }
  mpz_class r = g_exp % q;
  return G.pow_g(r) == rhs;
}

}  // namespace

bool batch_verify(const BatchInstance& batch, RandomSource& rng) {
  if (batch.entries.empty()) throw ParameterError("batch has no entries");
  if (batch.security_bits == 0 || batch.security_bits > 128) {
    throw ParameterError("security parameter must be in [1, 128] bits");
  }
  const sig::SchemeId scheme = batch.entries.front().pub.scheme();
  for (const auto& e : batch.entries) {
    if (e.pub.scheme() != scheme) {
      throw MixedScheme("batch mixes " + std::string(sig::scheme_name(scheme)) +
                        " and " + std::string(sig::scheme_name(e.pub.scheme())));
    }
    if (e.sig.scheme != scheme) {
      throw SchemeMismatch("signature scheme differs from its key");
    }
  }
  switch (scheme) {
    case sig::SchemeId::kBls:
      return batch_bls(batch, rng);
    case sig::SchemeId::kRsa:
      if (auto r = batch_rsa(batch, rng)) return *r;
      break;
    case sig::SchemeId::kGroup:
      if (auto r = batch_group(batch, rng)) return *r;
      break;
    default:
      break;
  }
  return verify_each(batch);
}

}  // namespace ndnsec::accel
