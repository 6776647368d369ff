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

#include "ndnsec/accel/aggregate.hpp"

#include <map>
#include <set>

#include "ndnsec/error.hpp"

namespace ndnsec::accel {

using math::bn::G1;
using math::bn::G2Prepared;

Bytes AggregateSignature::encode() const { return sig::bls::encode_signature(sigma); }

AggregateSignature aggregate(std::span<const SignedMessage> sigs) {
  AggregateSignature agg;
  for (const auto& s : sigs) {
    if (s.pub.scheme() != sig::SchemeId::kBls || s.sig.scheme != sig::SchemeId::kBls) {
      throw MixedScheme("only BLS signatures can be aggregated");
    }
    auto sigma = sig::bls::parse_signature(s.sig.bytes);
    if (!sigma) throw MalformedEncoding("constituent BLS signature does not parse");
    agg.sigma += *sigma;
    agg.covered.emplace_back(s.pub.as<sig::bls::PublicKey>(), s.msg);
  }
  return agg;
}

bool verify_aggregate(const AggregateSignature& agg) {
  if (agg.covered.empty() || agg.sigma.is_infinity()) return false;
  std::set<Bytes> seen;
  for (const auto& [pk, msg] : agg.covered) {
    if (pk.point.is_infinity() || !seen.insert(msg).second) return false;
  }

  // One Miller loop per distinct key: prod_pk e(sum H(m), pk).
  std::map<Bytes, std::size_t> index;
  std::vector<G1> ps{agg.sigma};
  std::vector<const G2Prepared*> qs{&sig::bls::neg_generator_prepared()};
  for (const auto& [pk, msg] : agg.covered) {
    auto [it, fresh] = index.emplace(math::bn::compress(pk.point), ps.size());
    if (fresh) {
      ps.push_back(G1::infinity());
      qs.push_back(pk.prepared.get());
    }
    ps[it->second] += sig::bls::hash_message(msg);
  }
  return math::bn::multi_pairing(ps, qs).is_one();
}

}  // namespace ndnsec::accel
