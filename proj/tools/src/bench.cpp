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

#include "ndnsec/cli/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <optional>
#include <sstream>

#if defined(__linux__)
#include <sched.h>
#endif

#include "ndnsec/error.hpp"

namespace ndnsec::cli {

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_us(F&& f) {
  auto start = Clock::now();
  f();
  return std::chrono::duration<double, std::micro>(Clock::now() - start).count();
}

BenchRow summarize(sig::SchemeId scheme, const std::string& op,
                   const std::vector<double>& samples, std::size_t msg_size) {
  BenchRow row{scheme, op, samples.size(), 0, 0, msg_size, 0};
  row.mean_us = std::accumulate(samples.begin(), samples.end(), 0.0) /
                static_cast<double>(samples.size());
  if (samples.size() > 1) {
    double ss = 0;
    for (double s : samples) ss += (s - row.mean_us) * (s - row.mean_us);
    row.stddev_us = std::sqrt(ss / static_cast<double>(samples.size() - 1));
  }
  return row;
}

sig::KeyPair make_key(sig::SchemeId scheme, RandomSource& rng) {
  sig::SchemeParams params;
  params.scheme = scheme;
  return sig::keygen(params, rng);
}

std::vector<double> bench_keygen(sig::SchemeId scheme, const BenchOptions& o,
                                 RandomSource& rng) {
  for (std::size_t i = 0; i < o.warmup; ++i) make_key(scheme, rng);
  std::vector<double> samples;
  samples.reserve(o.iterations);
  for (std::size_t i = 0; i < o.iterations; ++i) {
    std::optional<sig::KeyPair> key;
    samples.push_back(time_us([&] { key.emplace(make_key(scheme, rng)); }));
  }
  return samples;
}

std::vector<double> bench_sign(const sig::KeyPair& key, const BenchOptions& o,
                               RandomSource& rng) {
  for (std::size_t i = 0; i < o.warmup; ++i) sig::sign(key, rng.bytes(o.msg_size), rng);
  std::vector<double> samples;
  samples.reserve(o.iterations);
  for (std::size_t i = 0; i < o.iterations; ++i) {
    Bytes msg = rng.bytes(o.msg_size);
    std::optional<sig::Signature> s;
    samples.push_back(time_us([&] { s.emplace(sig::sign(key, msg, rng)); }));
  }
  return samples;
}

std::vector<double> bench_verify(const sig::KeyPair& key, const BenchOptions& o,
                                 RandomSource& rng) {
  const std::size_t total = o.warmup + o.iterations;
  std::vector<Bytes> msgs;
  std::vector<sig::Signature> sigs;
  msgs.reserve(total);
  sigs.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    msgs.push_back(rng.bytes(o.msg_size));
    sigs.push_back(sig::sign(key, msgs.back(), rng));
  }
  const auto& pub = key.public_key();
  std::vector<double> samples;
  samples.reserve(o.iterations);
  for (std::size_t i = 0; i < total; ++i) {
    bool ok = false;
    double t = time_us([&] { ok = sig::verify(pub, msgs[i], sigs[i]); });
    if (!ok) throw Error("benchmark signature failed to verify");
    if (i >= o.warmup) samples.push_back(t);
  }
  return samples;
}

}  // namespace

std::vector<sig::SchemeId> all_schemes() {
  return {sig::SchemeId::kRsa, sig::SchemeId::kDsa,   sig::SchemeId::kEcdsa,
          sig::SchemeId::kBls, sig::SchemeId::kGroup, sig::SchemeId::kRing};
}

std::vector<BenchRow> run_bench(const BenchOptions& options, RandomSource& rng) {
  if (options.iterations == 0) throw ParameterError("iterations must be at least 1");
  for (const auto& op : options.operations) {
    if (op != "keygen" && op != "sign" && op != "verify") {
      throw ParameterError("unknown operation: " + op);
    }
  }
  auto schemes = options.schemes.empty() ? all_schemes() : options.schemes;
  for (auto s : schemes) {
    if (s == sig::SchemeId::kNetworkCoding) {
      throw UnknownScheme("nc has no plain sign/verify benchmark");
    }
  }
  std::vector<BenchRow> rows;
  for (auto scheme : schemes) {
    std::optional<sig::KeyPair> key;
    for (const auto& op : options.operations) {
      std::vector<double> samples;
      if (op == "keygen") {
        samples = bench_keygen(scheme, options, rng);
      } else {
        if (!key) key.emplace(make_key(scheme, rng));
        samples = op == "sign" ? bench_sign(*key, options, rng)
                               : bench_verify(*key, options, rng);
      }
      rows.push_back(summarize(scheme, op, samples, options.msg_size));
    }
  }
  assign_ranks(rows);
  return rows;
}

void assign_ranks(std::vector<BenchRow>& rows) {
  for (auto& row : rows) {
    row.rank = 1;
    for (const auto& other : rows) {
      if (other.operation == row.operation && other.mean_us < row.mean_us) ++row.rank;
    }
  }
}

std::vector<sig::SchemeId> ranking(const std::vector<BenchRow>& rows,
                                   const std::string& operation) {
  std::vector<const BenchRow*> sel;
  for (const auto& r : rows) {
    if (r.operation == operation) sel.push_back(&r);
  }
  std::stable_sort(sel.begin(), sel.end(),
                   [](const BenchRow* a, const BenchRow* b) { return a->mean_us > b->mean_us; });
  std::vector<sig::SchemeId> out;
  for (const auto* r : sel) out.push_back(r->scheme);
  return out;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << kBenchHeader << '\n';
  out.setf(std::ios::fixed);
  out.precision(3);
  for (const auto& r : rows) {
    out << sig::scheme_name(r.scheme) << ',' << r.operation << ',' << r.iterations << ','
        << r.mean_us << ',' << r.stddev_us << ',' << r.msg_size << ',' << r.rank << '\n';
  }
  return out.str();
}

void pin_to_current_cpu() {
#if defined(__linux__)
  int cpu = sched_getcpu();
  if (cpu < 0) return;
  cpu_set_t set;
  CPU_ZERO(&set);
  CPU_SET(cpu, &set);
  sched_setaffinity(0, sizeof(set), &set);
#endif
}

}  // namespace ndnsec::cli
