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

#include "ndnsec/random.hpp"
#include "ndnsec/sig/scheme.hpp"

namespace ndnsec {
namespace {

using sig::SchemeId;

constexpr std::size_t kMsgSize = 1024;

sig::KeyPair make(SchemeId s, RandomSource& rng) {
  sig::SchemeParams p;
  p.scheme = s;
  return sig::keygen(p, rng);
}

void BM_Keygen(benchmark::State& state) {
  auto scheme = static_cast<SchemeId>(state.range(0));
  SystemRandom rng;
  for (auto _ : state) benchmark::DoNotOptimize(make(scheme, rng));
  state.SetLabel(std::string(sig::scheme_name(scheme)));
}

void BM_Sign(benchmark::State& state) {
  auto scheme = static_cast<SchemeId>(state.range(0));
  SystemRandom rng;
  auto key = make(scheme, rng);
  Bytes msg = rng.bytes(kMsgSize);
  for (auto _ : state) benchmark::DoNotOptimize(sig::sign(key, msg, rng));
  state.SetLabel(std::string(sig::scheme_name(scheme)));
}

void BM_Verify(benchmark::State& state) {
  auto scheme = static_cast<SchemeId>(state.range(0));
  SystemRandom rng;
  auto key = make(scheme, rng);
  Bytes msg = rng.bytes(kMsgSize);
  auto s = sig::sign(key, msg, rng);
  for (auto _ : state) {
    bool ok = sig::verify(key.public_key(), msg, s);
    benchmark::DoNotOptimize(ok);
  }
  state.SetLabel(std::string(sig::scheme_name(scheme)));
}

void AllSchemes(benchmark::internal::Benchmark* b) {
  for (int s = 1; s <= 6; ++s) b->Arg(s);
}

BENCHMARK(BM_Keygen)->Apply(AllSchemes)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Sign)->Apply(AllSchemes)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Verify)->Apply(AllSchemes)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace ndnsec

BENCHMARK_MAIN();
