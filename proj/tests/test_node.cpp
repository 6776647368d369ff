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

#include <gtest/gtest.h>

#include "ndnsec/error.hpp"
#include "ndnsec/nc/netcoding.hpp"
#include "ndnsec/node/node.hpp"
#include "ndnsec/random.hpp"

namespace ndnsec::node {
namespace {

using wire::Data;
using wire::Interest;

const Name kName = Name::parse("/snnu/images/a.jpg/v1/s1");

Data make_data(const Name& name, const Bytes& content = to_bytes("payload")) {
  Data d;
  d.name = name;
  d.content = content;
  d.key_locator = Name::parse("/snnu/KEY");
  d.scheme_id = static_cast<std::uint8_t>(sig::SchemeId::kBls);
  d.signature = Bytes(21, 0);
  return d;
}

Data signed_data(const sig::KeyPair& key, const Name& name, RandomSource& rng) {
  Data d = make_data(name);
  d.scheme_id = static_cast<std::uint8_t>(key.scheme());
  d.signature = sig::sign(key, wire::signed_portion(d), rng).bytes;
  return d;
}

sig::KeyPair bls_key(RandomSource& rng) {
  sig::SchemeParams p;
  p.scheme = sig::SchemeId::kBls;
  return sig::keygen(p, rng);
}

TEST(Pipeline, InterestAnsweredFromContentStore) {
  Node node;
  node.cs().insert(make_data(kName), 0, 1000);
  auto out = node.process_interest(2, Interest{kName, 1, 4000}, 10);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].face, 2u);
  EXPECT_EQ(std::get<Data>(out[0].packet), make_data(kName));
  EXPECT_EQ(node.pit().size(), 0u);
  EXPECT_EQ(node.counters().cs_hits, 1u);
}

TEST(Pipeline, InterestAggregatedInPit) {
  Node node;
  node.fib_add_route(Name::parse("/snnu"), 7);
  ASSERT_EQ(node.process_interest(1, Interest{kName, 1, 4000}, 0).size(), 1u);
  auto out = node.process_interest(3, Interest{kName, 2, 4000}, 1);
  EXPECT_TRUE(out.empty());
  ASSERT_EQ(node.pit().size(), 1u);
  EXPECT_EQ(node.pit().entries().at(kName).faces, (std::set<FaceId>{1, 3}));
}

TEST(Pipeline, InterestForwardedByLongestPrefix) {
  Node node;
  node.fib_add_route(Name::parse("/snnu"), 7);
  node.fib_add_route(Name::parse("/edu"), 9);
  Interest i{kName, 5, 4000};
  auto out = node.process_interest(1, i, 0);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0], (Emission{7, i}));
  ASSERT_EQ(node.pit().size(), 1u);
  EXPECT_EQ(node.pit().entries().at(kName).faces, (std::set<FaceId>{1}));
  EXPECT_EQ(node.counters().forwarded, 1u);
}

TEST(Pipeline, LongerFibPrefixWins) {
  Node node;
  node.fib_add_route(Name::parse("/snnu"), 7);
  node.fib_add_route(Name::parse("/snnu/images"), 8);
  auto out = node.process_interest(1, Interest{kName, 5, 4000}, 0);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].face, 8u);
}

TEST(Pipeline, NoRouteDropsWithoutPitEntry) {
  Node node;
  EXPECT_TRUE(node.process_interest(1, Interest{kName, 1, 4000}, 0).empty());
  EXPECT_EQ(node.pit().size(), 0u);
  EXPECT_EQ(node.counters().no_route, 1u);
  node.fib_add_route(Name::parse("/snnu"), 1);
  EXPECT_TRUE(node.process_interest(1, Interest{kName, 2, 4000}, 0).empty());
  EXPECT_EQ(node.counters().no_route, 2u);
}

TEST(Pipeline, RepeatedNonceIsALoop) {
  Node node;
  node.fib_add_route(Name::parse("/snnu"), 7);
  EXPECT_EQ(node.process_interest(1, Interest{kName, 9, 4000}, 0).size(), 1u);
  EXPECT_TRUE(node.process_interest(2, Interest{kName, 9, 4000}, 1).empty());
  EXPECT_EQ(node.counters().dropped_loop, 1u);
  EXPECT_EQ(node.pit().entries().at(kName).faces, (std::set<FaceId>{1}));
}

TEST(Pipeline, UnsolicitedDataIsDropped) {
  Node node;
  EXPECT_TRUE(node.process_data(4, make_data(kName), 0).empty());
  EXPECT_EQ(node.counters().dropped_unsolicited, 1u);
  EXPECT_EQ(node.cs().size(), 0u);
}

TEST(Pipeline, DataSatisfiesEveryPitFace) {
  Node node;
  node.fib_add_route(Name::parse("/snnu"), 7);
  node.process_interest(2, Interest{kName, 1, 4000}, 0);
  node.process_interest(5, Interest{kName, 2, 4000}, 0);
  auto out = node.process_data(7, make_data(kName), 10);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].face, 2u);
  EXPECT_EQ(out[1].face, 5u);
  EXPECT_EQ(node.pit().size(), 0u);
  EXPECT_TRUE(node.cs().contains(kName));
  EXPECT_EQ(node.counters().data_sent, 2u);
}

TEST(Pipeline, ExpiredPitEntryDoesNotAttractData) {
  Node node;
  node.fib_add_route(Name::parse("/snnu"), 7);
  node.process_interest(2, Interest{kName, 1, 100}, 0);
  EXPECT_TRUE(node.process_data(7, make_data(kName), 100).empty());
  EXPECT_EQ(node.counters().dropped_unsolicited, 1u);
}

TEST(Pipeline, VerificationDropsForgedData) {
  SystemRandom rng;
  auto real = bls_key(rng);
  auto forged = bls_key(rng);
  TrustStore trust;
  trust.add(Name::parse("/snnu"), sig::SchemeId::kBls, real.public_key());
  NodeConfig cfg;
  cfg.verify = true;
  Node node(cfg, trust);
  node.fib_add_route(Name::parse("/snnu"), 7);
  node.process_interest(2, Interest{kName, 1, 4000}, 0);

  EXPECT_TRUE(node.process_data(7, signed_data(forged, kName, rng), 1).empty());
  EXPECT_EQ(node.counters().dropped_bogus, 1u);
  EXPECT_EQ(node.pit().size(), 1u);
  EXPECT_FALSE(node.cs().contains(kName));

  auto out = node.process_data(7, signed_data(real, kName, rng), 2);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_TRUE(node.cs().contains(kName));
}

TEST(ContentStore, LruEvictsLeastRecentlyUsed) {
  ContentStore cs(2);
  Name a = Name::parse("/a"), b = Name::parse("/b"), c = Name::parse("/c");
  cs.insert(make_data(a), 0, 100);
  cs.insert(make_data(b), 1, 100);
  cs.insert(make_data(c), 2, 100);
  EXPECT_FALSE(cs.contains(a));
  EXPECT_TRUE(cs.contains(b) && cs.contains(c));

  EXPECT_TRUE(cs.lookup(b, 3));
  cs.insert(make_data(a), 4, 100);
  EXPECT_TRUE(cs.contains(b));
  EXPECT_FALSE(cs.contains(c));
}

TEST(ContentStore, FifoIgnoresAccesses) {
  ContentStore cs(2, std::make_shared<FifoPolicy>());
  Name a = Name::parse("/a"), b = Name::parse("/b"), c = Name::parse("/c");
  cs.insert(make_data(a), 0, 100);
  cs.insert(make_data(b), 1, 100);
  EXPECT_TRUE(cs.lookup(a, 2));
  cs.insert(make_data(c), 3, 100);
  EXPECT_FALSE(cs.contains(a));
  EXPECT_TRUE(cs.contains(b));
}

TEST(ContentStore, ExpiredEntriesGoFirst) {
  ContentStore cs(2);
  Name a = Name::parse("/a"), b = Name::parse("/b"), c = Name::parse("/c");
  cs.insert(make_data(a), 0, 100);
  cs.insert(make_data(b), 1, 5);
  EXPECT_TRUE(cs.lookup(a, 2));
  cs.insert(make_data(c), 10, 100);
  EXPECT_FALSE(cs.contains(b));
  EXPECT_TRUE(cs.contains(a));
  EXPECT_FALSE(cs.lookup(b, 10));
  EXPECT_EQ(cs.evict(1000), (std::vector<Name>{a, c}));
}

TEST(ContentStore, ZeroCapacityStoresNothing) {
  NodeConfig cfg;
  cfg.cs_capacity = 0;
  Node node(cfg);
  node.fib_add_route(Name::parse("/snnu"), 7);
  for (std::uint32_t i = 0; i < 3; ++i) {
    auto out = node.process_interest(1, Interest{kName, i, 4000}, 10 * i);
    ASSERT_EQ(out.size(), 1u);
    EXPECT_EQ(out[0].face, 7u);
    node.process_data(7, make_data(kName), 10 * i + 1);
    EXPECT_EQ(node.cs().size(), 0u);
  }
  EXPECT_EQ(node.counters().cs_hits, 0u);
}

TEST(ContentStore, DuplicateInsertOverwrites) {
  ContentStore cs(4);
  cs.insert(make_data(kName, to_bytes("old")), 0, 100);
  cs.insert(make_data(kName, to_bytes("new")), 1, 100);
  EXPECT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs.lookup(kName, 2)->content, to_bytes("new"));
}

TEST(TrustStore, JsonRoundTripAndLongestPrefix) {
  SystemRandom rng;
  auto a = bls_key(rng);
  sig::SchemeParams p;
  p.scheme = sig::SchemeId::kEcdsa;
  auto b = sig::keygen(p, rng);
  TrustStore t;
  t.add(Name::parse("/snnu"), sig::SchemeId::kBls, a.public_key());
  t.add(Name::parse("/snnu/images"), sig::SchemeId::kEcdsa, b.public_key());
  auto back = TrustStore::from_json(t.to_json());
  ASSERT_EQ(back.size(), 2u);
  const auto* hit = back.lookup(Name::parse("/snnu/images/KEY"));
  ASSERT_TRUE(hit);
  EXPECT_EQ(hit->scheme, sig::SchemeId::kEcdsa);
  EXPECT_EQ(hit->key, b.public_key());
  EXPECT_EQ(back.lookup(Name::parse("/snnu/KEY"))->key, a.public_key());
  EXPECT_FALSE(back.lookup(Name::parse("/edu/KEY")));
}

TEST(TrustStore, BadConfigThrows) {
  EXPECT_THROW(TrustStore::from_json("not json"), ConfigError);
  EXPECT_THROW(TrustStore::from_json(R"([{"prefix":"/a","scheme":"bogus","public_key":""}])"),
               ConfigError);
  EXPECT_THROW(TrustStore::from_json(R"([{"prefix":"/a","scheme":"bls","public_key":"zz"}])"),
               ConfigError);
  EXPECT_THROW(TrustStore::from_json(R"({"prefix":"/a"})"), ConfigError);
}

TEST(TrustStore, SchemeFieldMustMatch) {
  SystemRandom rng;
  auto key = bls_key(rng);
  TrustStore t;
  t.add(Name::parse("/snnu"), sig::SchemeId::kBls, key.public_key());
  Data d = signed_data(key, kName, rng);
  EXPECT_TRUE(t.verify(d));
  d.scheme_id = static_cast<std::uint8_t>(sig::SchemeId::kDsa);
  EXPECT_FALSE(t.verify(d));
}

TEST(TrustStore, NetworkCodedContent) {
  SystemRandom rng;
  auto key = nc::keygen(rng);
  TrustStore t;
  t.add(Name::parse("/snnu"), sig::SchemeId::kNetworkCoding, sig::PublicKey(key.pub));
  nc::Generation gen{to_bytes("g"), 4, 2};
  auto packets = nc::sign_content(key, gen, to_bytes("coded content"));
  Data d = make_data(kName, packets[0].encode());
  d.scheme_id = static_cast<std::uint8_t>(sig::SchemeId::kNetworkCoding);
  d.signature.clear();
  EXPECT_TRUE(t.verify(d));
  packets[0].vector[0] += nc::Fr::one();
  d.content = packets[0].encode();
  EXPECT_FALSE(t.verify(d));
}

// Random Interest/Data/clock operations against one node, checking the
// table invariants after every step.
TEST(Property, RandomOperationsKeepInvariants) {
  SeededRandom rng(2024);
  NodeConfig cfg;
  cfg.cs_capacity = 8;
  cfg.cs_freshness = 50;
  Node node(cfg);
  Node twin(cfg);
  for (Node* n : {&node, &twin}) {
    n->fib_add_route(Name::parse("/p"), 9);
    n->fib_add_route(Name::parse("/p/x"), 8);
  }
  std::vector<Name> names;
  for (int i = 0; i < 20; ++i) {
    names.push_back(Name::parse((i % 3 == 0 ? "/q/" : "/p/") + std::to_string(i)));
  }
  names.push_back(Name::parse("/p/x/1"));

  Time now = 0;
  for (int op = 0; op < 20000; ++op) {
    now += rng.uniform(4);
    const Name& name = names[rng.uniform(names.size())];
    FaceId face = static_cast<FaceId>(1 + rng.uniform(9));
    std::vector<Emission> out, twin_out;
    if (rng.uniform(2) == 0) {
      Interest i{name, static_cast<std::uint32_t>(rng.uniform(50)),
                 static_cast<std::uint32_t>(1 + rng.uniform(40))};
      bool cached = node.cs().find(name) && node.cs().find(name)->fresh(now);
      out = node.process_interest(face, i, now);
      twin_out = twin.process_interest(face, i, now);
      for (const auto& e : out) {
        if (std::holds_alternative<Interest>(e.packet)) {
          ASSERT_NE(e.face, face);
          ASSERT_TRUE(node.pit().entries().count(name));
        } else {
          ASSERT_TRUE(cached);
          ASSERT_EQ(e.face, face);
        }
      }
    } else {
      std::set<FaceId> expected;
      if (auto it = node.pit().entries().find(name);
          it != node.pit().entries().end() && it->second.expiry > now) {
        expected = it->second.faces;
      }
      out = node.process_data(face, make_data(name), now);
      twin_out = twin.process_data(face, make_data(name), now);
      std::set<FaceId> got;
      for (const auto& e : out) {
        ASSERT_TRUE(std::holds_alternative<Data>(e.packet));
        got.insert(e.face);
      }
      ASSERT_EQ(got, expected);
      if (!expected.empty()) {
        ASSERT_FALSE(node.pit().entries().count(name));
      }
    }
    ASSERT_LE(node.cs().size(), cfg.cs_capacity);
    ASSERT_EQ(out, twin_out);
    if (op % 100 == 0) {
      node.sweep(now);
      twin.sweep(now);
    }
  }
  EXPECT_EQ(node.counters(), twin.counters());
}

}  // namespace
}  // namespace ndnsec::node
