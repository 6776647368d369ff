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

#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "ndnsec/error.hpp"
#include "ndnsec/name.hpp"
#include "ndnsec/random.hpp"

namespace ndnsec {
namespace {

std::vector<std::string> texts(const Name& n) {
  std::vector<std::string> out;
  for (const auto& c : n.components()) out.emplace_back(c.begin(), c.end());
  return out;
}

TEST(Name, ParsesCanonicalForm) {
  auto n = Name::parse("/snnu/images/a.jpg/v1/s1");
  EXPECT_EQ(texts(n), (std::vector<std::string>{"snnu", "images", "a.jpg", "v1", "s1"}));
  EXPECT_EQ(texts(Name::parse("/a")), (std::vector<std::string>{"a"}));
}

TEST(Name, RejectsMissingLeadingSlash) {
  EXPECT_THROW(Name::parse("snnu/images"), MalformedName);
  EXPECT_THROW(Name::parse(""), MalformedName);
}

TEST(Name, RejectsEmptyComponents) {
  EXPECT_THROW(Name::parse("/a//b"), MalformedName);
  EXPECT_THROW(Name(std::vector<Bytes>{Bytes{}}), MalformedName);
}

TEST(Name, RootIsEmpty) {
  auto root = Name::parse("/");
  EXPECT_TRUE(root.empty());
  EXPECT_EQ(root.to_text(), "/");
  EXPECT_EQ(Name().to_text(), "/");
}

TEST(Name, EscapesNonPrintableBytes) {
  Name n(std::vector<Bytes>{Bytes{'a', '/', 0x00, '%', 0xFF}});
  EXPECT_EQ(n.to_text(), "/a%2F%00%25%FF");
  EXPECT_EQ(Name::parse(n.to_text()), n);
  EXPECT_EQ(Name::parse("/a%2f"), Name(std::vector<Bytes>{Bytes{'a', '/'}}));
  EXPECT_THROW(Name::parse("/a%2"), MalformedName);
  EXPECT_THROW(Name::parse("/a%zz"), MalformedName);
  EXPECT_THROW(Name::parse("/a\nb"), MalformedName);
}

TEST(Name, TextRoundTripsRandomNames) {
  SeededRandom rng(7);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Bytes> comps(1 + rng.uniform(6));
    for (auto& c : comps) c = rng.bytes(1 + rng.uniform(12));
    Name n(comps);
    EXPECT_EQ(Name::parse(n.to_text()), n);
    EXPECT_EQ(Name::parse(n.to_text()).to_text(), n.to_text());
  }
}

TEST(Name, PrefixRelation) {
  EXPECT_TRUE(is_prefix(Name::parse("/snnu/images"), Name::parse("/snnu/images/a.jpg/v1/s1")));
  EXPECT_FALSE(is_prefix(Name::parse("/snnu/video"), Name::parse("/snnu/images/a.jpg")));
  EXPECT_FALSE(is_prefix(Name::parse("/snnu/images/a.jpg"), Name::parse("/snnu/images")));
  EXPECT_TRUE(is_prefix(Name(), Name::parse("/x")));
  EXPECT_TRUE(is_prefix(Name::parse("/x"), Name::parse("/x")));
}

TEST(Name, LongestPrefixMatch) {
  std::set<Name> entries{Name::parse("/snnu"), Name::parse("/snnu/images")};
  auto n = Name::parse("/snnu/images/a.jpg/v1/s1");
  auto hit = longest_prefix_match(entries, n);
  ASSERT_TRUE(hit);
  EXPECT_EQ(*hit, Name::parse("/snnu/images"));

  EXPECT_FALSE(longest_prefix_match(std::set<Name>{Name::parse("/edu")},
                                    Name::parse("/snnu/images/a.jpg")));

  std::set<Name> exact{n};
  ASSERT_TRUE(longest_prefix_match(exact, n));
  EXPECT_EQ(*longest_prefix_match(exact, n), n);
}

TEST(Name, LongestPrefixMatchAgreesWithEnumeration) {
  SeededRandom rng(11);
  auto comp = [&] { return Bytes{static_cast<std::uint8_t>('a' + rng.uniform(3))}; };
  for (int trial = 0; trial < 300; ++trial) {
    std::set<Name> entries;
    for (int i = 0; i < 8; ++i) {
      std::vector<Bytes> c(1 + rng.uniform(4));
      for (auto& x : c) x = comp();
      entries.insert(Name(c));
    }
    std::vector<Bytes> c(1 + rng.uniform(5));
    for (auto& x : c) x = comp();
    Name n(c);
    std::optional<Name> best;
    for (const auto& e : entries) {
      if (is_prefix(e, n) && (!best || e.size() > best->size())) best = e;
    }
    auto got = longest_prefix_match(entries, n);
    ASSERT_EQ(got.has_value(), best.has_value());
    if (best) {
      EXPECT_EQ(*got, *best);
    }
  }
}

TEST(Name, OrderingAndHashing) {
  auto a = Name::parse("/a");
  auto ab = Name::parse("/a/b");
  EXPECT_LT(a, ab);
  EXPECT_EQ(std::hash<Name>{}(ab), std::hash<Name>{}(Name::parse("/a/b")));
  EXPECT_EQ(ab.prefix(1), a);
}

}  // namespace
}  // namespace ndnsec
