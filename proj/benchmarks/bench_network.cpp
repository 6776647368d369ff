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

#include <benchmark/benchmark.h>

#include "ndnsec/nc/netcoding.hpp"
#include "ndnsec/node/node.hpp"
#include "ndnsec/random.hpp"
#include "ndnsec/wire.hpp"

namespace ndnsec {
namespace {

void BM_WireRoundTrip(benchmark::State& state) {
  wire::Data d;
  d.name = Name::parse("/snnu/images/a.jpg/v1/s1");
  d.content = Bytes(1024, 0x5A);
  d.key_locator = Name::parse("/snnu/KEY");
  d.scheme_id = 4;
  d.signature = Bytes(21, 1);
  for (auto _ : state) benchmark::DoNotOptimize(wire::decode_packet(wire::encode(d)));
}

void BM_NodeInterestData(benchmark::State& state) {
  node::Node n;
  n.fib_add_route(Name::parse("/snnu"), 7);
  std::vector<Name> names;
  for (int i = 0; i < 256; ++i) names.push_back(Name::parse("/snnu/v/" + std::to_string(i)));
  wire::Data d;
  d.key_locator = Name::parse("/snnu/KEY");
  node::Time now = 0;
  std::uint32_t nonce = 0;
  for (auto _ : state) {
    const Name& nm = names[nonce % names.size()];
    benchmark::DoNotOptimize(n.process_interest(1, wire::Interest{nm, ++nonce, 4000}, ++now));
    d.name = nm;
    benchmark::DoNotOptimize(n.process_data(7, d, now));
  }
}

void BM_NcSignGeneration(benchmark::State& state) {
  SystemRandom rng;
  auto key = nc::keygen(rng);
  nc::Generation gen{to_bytes("g"), nc::kDefaultDataDim, nc::kDefaultVectorCount};
  Bytes content = rng.bytes(gen.capacity());
  for (auto _ : state) benchmark::DoNotOptimize(nc::sign_content(key, gen, content));
}

void BM_NcVerify(benchmark::State& state) {
  SystemRandom rng;
  auto key = nc::keygen(rng);
  nc::Generation gen{to_bytes("g"), nc::kDefaultDataDim, nc::kDefaultVectorCount};
  auto packets = nc::sign_content(key, gen, rng.bytes(gen.capacity()));
  for (auto _ : state) benchmark::DoNotOptimize(nc::nc_verify(key.pub, packets[0]));
}

void BM_NcDecode(benchmark::State& state) {
  SystemRandom rng;
  auto key = nc::keygen(rng);
  nc::Generation gen{to_bytes("g"), nc::kDefaultDataDim, nc::kDefaultVectorCount};
  auto packets = nc::sign_content(key, gen, rng.bytes(gen.capacity()));
  nc::Relay relay(key.pub);
  for (const auto& p : packets) relay.receive(p);
  auto mixed = relay.emit(gen.id, gen.m, rng);
  for (auto _ : state) benchmark::DoNotOptimize(nc::decode(mixed));
}

BENCHMARK(BM_WireRoundTrip);
BENCHMARK(BM_NodeInterestData);
BENCHMARK(BM_NcSignGeneration)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_NcVerify)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_NcDecode)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace ndnsec

BENCHMARK_MAIN();
