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

#pragma once

// Timing harness behind `ndnsec bench`: keygen, sign and verify over the
// six signature schemes, with a per-operation ranking.

#include <cstddef>
#include <string>
#include <vector>

#include "ndnsec/random.hpp"
#include "ndnsec/sig/scheme.hpp"

namespace ndnsec::cli {

inline constexpr std::size_t kDefaultIterations = 1000;
inline constexpr std::size_t kDefaultMsgSize = 1024;
inline constexpr std::size_t kWarmupIterations = 10;

struct BenchRow {
  sig::SchemeId scheme;
  std::string operation;  // keygen, sign or verify
  std::size_t iterations = 0;
  double mean_us = 0;
  double stddev_us = 0;
  std::size_t msg_size = 0;
  unsigned rank = 0;  // 1 is the fastest scheme for the operation
};

struct BenchOptions {
  std::vector<sig::SchemeId> schemes;
  std::size_t iterations = kDefaultIterations;
  std::size_t msg_size = kDefaultMsgSize;
  std::vector<std::string> operations = {"keygen", "sign", "verify"};
  std::size_t warmup = kWarmupIterations;
};

// The six schemes with plain key pairs.
std::vector<sig::SchemeId> all_schemes();

// Throws UnknownScheme for names outside the six schemes and ParameterError
// for zero iterations or an unknown operation.
std::vector<BenchRow> run_bench(const BenchOptions& options, RandomSource& rng);

// Fills `rank` from the rows' own means.
void assign_ranks(std::vector<BenchRow>& rows);

// Schemes for one operation, slowest first.
std::vector<sig::SchemeId> ranking(const std::vector<BenchRow>& rows,
                                   const std::string& operation);

inline constexpr const char* kBenchHeader =
    "scheme,operation,iterations,mean_us,stddev_us,msg_size,rank";

std::string bench_csv(const std::vector<BenchRow>& rows);

// Pins the calling thread to the CPU it is running on. Best effort.
void pin_to_current_cpu();

}  // namespace ndnsec::cli
