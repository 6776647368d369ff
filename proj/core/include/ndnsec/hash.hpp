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

#include <array>
#include <cstdint>
#include <memory>

#include "ndnsec/bytes.hpp"

namespace ndnsec {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(ByteView data);

// Incremental SHA-256.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;
  Sha256(Sha256&&) noexcept;
  Sha256& operator=(Sha256&&) noexcept;

  Sha256& update(ByteView data);
  Sha256& update_u64(std::uint64_t v);  // big-endian
  // Length-prefixed update, so that adjacent variable-length fields cannot
  // be re-split into a colliding input.
  Sha256& update_framed(ByteView data);
  Digest finalize();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// MGF1 with SHA-256 (RFC 8017, B.2.1).
Bytes mgf1_sha256(ByteView seed, std::size_t length);

}  // namespace ndnsec
