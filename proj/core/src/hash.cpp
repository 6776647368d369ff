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

#include "ndnsec/hash.hpp"

#include <openssl/evp.h>

#include <stdexcept>

namespace ndnsec {

Digest sha256(ByteView data) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("EVP_Digest failed");
  }
  return out;
}

struct Sha256::Impl {
  EVP_MD_CTX* ctx = nullptr;
  ~Impl() { EVP_MD_CTX_free(ctx); }
};

Sha256::Sha256() : impl_(std::make_unique<Impl>()) {
  impl_->ctx = EVP_MD_CTX_new();
  if (impl_->ctx == nullptr ||
      EVP_DigestInit_ex(impl_->ctx, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("EVP_DigestInit_ex failed");
  }
}

Sha256::~Sha256() = default;
Sha256::Sha256(Sha256&&) noexcept = default;
Sha256& Sha256::operator=(Sha256&&) noexcept = default;

Sha256& Sha256::update(ByteView data) {
  EVP_DigestUpdate(impl_->ctx, data.data(), data.size());
  return *this;
}

Sha256& Sha256::update_u64(std::uint64_t v) {
  std::uint8_t buf[8];
  for (int i = 7; i >= 0; --i) {
    buf[i] = static_cast<std::uint8_t>(v);
    v >>= 8;
  }
  return update(buf);
}

Sha256& Sha256::update_framed(ByteView data) {
  update_u64(data.size());
  return update(data);
}

Digest Sha256::finalize() {
  Digest out{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(impl_->ctx, out.data(), &len);
  return out;
}

Bytes mgf1_sha256(ByteView seed, std::size_t length) {
  Bytes out;
  out.reserve(length + 32);
  for (std::uint32_t counter = 0; out.size() < length; ++counter) {
    std::uint8_t c[4] = {static_cast<std::uint8_t>(counter >> 24),
                         static_cast<std::uint8_t>(counter >> 16),
                         static_cast<std::uint8_t>(counter >> 8),
                         static_cast<std::uint8_t>(counter)};
    Sha256 h;
    h.update(seed).update(c);
    Digest d = h.finalize();
    out.insert(out.end(), d.begin(), d.end());
  }
  out.resize(length);
  return out;
}

}  // namespace ndnsec
