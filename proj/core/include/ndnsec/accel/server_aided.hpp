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

// Server-aided BLS verification. The verifier hands both pairings of the
// BLS equation to an untrusted server after blinding them:
//
//   X = rho * sigma + t * P,  A = e(X, Q)    (P, Q the generators)
//   Y = rho * H(m),           B = e(Y, pk)
//
// and accepts iff A == B * Z^t with Z = e(P, Q). rho and t are fresh,
// uniform and non-zero, so the server sees uniformly random G1 points and
// cannot fit answers to an invalid signature. The verifier evaluates no
// pairing itself.

#include <cstdint>
#include <map>
#include <memory>

#include "ndnsec/bytes.hpp"
#include "ndnsec/math/bn.hpp"
#include "ndnsec/random.hpp"
#include "ndnsec/sig/bls.hpp"

namespace ndnsec::accel {

class PairingServer {
 public:
  virtual ~PairingServer() = default;
  // Throws ServerUnavailable when no answer can be obtained.
  virtual math::bn::Gt pair(const math::bn::G1& p, const math::bn::G2& q) = 0;
};

// Honest in-process server. Caches prepared G2 arguments.
class LocalPairingServer final : public PairingServer {
 public:
  math::bn::Gt pair(const math::bn::G1& p, const math::bn::G2& q) override;
  // Pairings evaluated so far.
  std::uint64_t served() const { return served_; }

 private:
  std::map<Bytes, std::shared_ptr<const math::bn::G2Prepared>> prepared_;
  std::uint64_t served_ = 0;
};

// Request: compressed G1 || compressed G2 as two fields. Response: the
// serialized GT element as one field.
Bytes encode_pairing_request(const math::bn::G1& p, const math::bn::G2& q);
math::bn::Gt decode_pairing_response(ByteView response);

// Server side of the message-passing form. Throws MalformedEncoding for a
// bad request.
class PairingService {
 public:
  explicit PairingService(LocalPairingServer& server) : server_(server) {}
  Bytes handle(ByteView request);

 private:
  LocalPairingServer& server_;
};

class Transport {
 public:
  virtual ~Transport() = default;
  // Delivers a request and returns the reply. May throw on failure.
  virtual Bytes exchange(ByteView request) = 0;
};

// Direct call into a PairingService.
class LoopbackTransport final : public Transport {
 public:
  explicit LoopbackTransport(PairingService& service) : service_(service) {}
  Bytes exchange(ByteView request) override { return service_.handle(request); }

 private:
  PairingService& service_;
};

// Client of the message-passing form. Transport failures and undecodable
// replies surface as ServerUnavailable.
class RemotePairingServer final : public PairingServer {
 public:
  explicit RemotePairingServer(Transport& transport) : transport_(transport) {}
  math::bn::Gt pair(const math::bn::G1& p, const math::bn::G2& q) override;

 private:
  Transport& transport_;
};

// Throws ServerUnavailable when the server fails.
bool sav_verify(const sig::bls::PublicKey& pub, ByteView msg, ByteView sig,
                PairingServer& server, RandomSource& rng);

}  // namespace ndnsec::accel
