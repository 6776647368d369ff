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

// Subcommands of the `ndnsec` tool. Each returns the process exit code and
// writes diagnostics to `err`.

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace ndnsec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitTickLimit = 3;

// Empty `schemes` means all six. Writes the CSV to `out` (or `log` when
// `out` is empty) and the per-operation rankings to `log`.
int cmd_bench(const std::vector<std::string>& schemes, std::size_t iterations,
              std::size_t msg_size, const std::filesystem::path& out, std::ostream& log,
              std::ostream& err);

// Writes trace.jsonl, counters.csv and deliveries.csv into `out_dir`.
int cmd_sim(const std::filesystem::path& topology, const std::filesystem::path& scenario,
            const std::filesystem::path& out_dir, std::ostream& err);

// Writes {"prefix", "scheme", "public_key", "private_key"}; the object is a
// valid trust store entry.
int cmd_keygen(const std::string& scheme, const std::filesystem::path& out,
               const std::string& prefix, std::ostream& err);

}  // namespace ndnsec::cli
