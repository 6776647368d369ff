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

#include "ndnsec/accel/aggregate.hpp"
#include "ndnsec/accel/batch.hpp"
#include "ndnsec/accel/online_offline.hpp"
#include "ndnsec/accel/server_aided.hpp"
#include "ndnsec/random.hpp"

namespace ndnsec::accel {
namespace {

using sig::SchemeId;

sig::KeyPair make(SchemeId s, RandomSource& rng) {
  sig::SchemeParams p;
  p.scheme = s;
  return sig::keygen(p, rng);
}

BatchInstance bls_batch(std::size_t n, RandomSource& rng) {
  auto key = make(SchemeId::kBls, rng);
  BatchInstance b;
  for (std::size_t i = 0; i < n; ++i) {
    Bytes m = rng.bytes(64);
    b.entries.push_back({key.public_key(), m, sig::sign(key, m, rng)});
  }
  return b;
}

void BM_BlsBatchVerify(benchmark::State& state) {
  SystemRandom rng;
  auto b = bls_batch(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(batch_verify(b, rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BlsSequentialVerify(benchmark::State& state) {
  SystemRandom rng;
  auto b = bls_batch(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) {
    bool ok = true;
    for (const auto& e : b.entries) ok &= sig::verify(e.pub, e.msg, e.sig);
    benchmark::DoNotOptimize(ok);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AggregateVerify(benchmark::State& state) {
  SystemRandom rng;
  std::vector<SignedMessage> msgs;
  for (int i = 0; i < state.range(0); ++i) {
    auto k = make(SchemeId::kBls, rng);
    Bytes m = rng.bytes(64);
    msgs.push_back({k.public_key(), m, sig::sign(k, m, rng)});
  }
  auto agg = aggregate(msgs);
  for (auto _ : state) benchmark::DoNotOptimize(verify_aggregate(agg));
}

void BM_OnlineSign(benchmark::State& state) {
  SystemRandom rng;
  auto key = make(SchemeId::kRsa, rng);
  auto ck = ChameleonKey::generate(rng);
  Bytes msg = rng.bytes(1024);
  for (auto _ : state) {
    state.PauseTiming();
    auto token = offline_prepare(key, ck, rng);
    state.ResumeTiming();
    benchmark::DoNotOptimize(online_sign(token, msg));
  }
}

void BM_ServerAidedVerify(benchmark::State& state) {
  SystemRandom rng;
  auto key = sig::bls::keygen(rng);
  Bytes msg = rng.bytes(1024);
  Bytes s = sig::bls::sign(key, msg);
  LocalPairingServer server;
  for (auto _ : state) benchmark::DoNotOptimize(sav_verify(key.pub, msg, s, server, rng));
}

BENCHMARK(BM_BlsBatchVerify)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlsSequentialVerify)->Arg(10)->Arg(100)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AggregateVerify)->Arg(1)->Arg(16)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_OnlineSign)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_ServerAidedVerify)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace ndnsec::accel

BENCHMARK_MAIN();
