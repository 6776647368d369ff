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

#include <stdexcept>
#include <string>

namespace ndnsec {

// Root of every error thrown by the library. Each failure mode named in the
// public contracts has its own subclass so callers can catch precisely.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define NDNSEC_DEFINE_ERROR(Name)          \
  class Name : public Error {              \
   public:                                 \
    using Error::Error;                    \
  }

// naming
NDNSEC_DEFINE_ERROR(MalformedName);

// wire
NDNSEC_DEFINE_ERROR(OversizeField);
NDNSEC_DEFINE_ERROR(TruncatedPacket);
NDNSEC_DEFINE_ERROR(UnknownTlvType);
NDNSEC_DEFINE_ERROR(DuplicateField);
NDNSEC_DEFINE_ERROR(MalformedEncoding);

// signatures
NDNSEC_DEFINE_ERROR(ParameterError);
NDNSEC_DEFINE_ERROR(SchemeMismatch);
NDNSEC_DEFINE_ERROR(OpenFailure);
NDNSEC_DEFINE_ERROR(IndexOutOfRing);
NDNSEC_DEFINE_ERROR(UnknownScheme);

// acceleration
NDNSEC_DEFINE_ERROR(MixedScheme);
NDNSEC_DEFINE_ERROR(TokenReused);
NDNSEC_DEFINE_ERROR(ServerUnavailable);

// network coding
NDNSEC_DEFINE_ERROR(DimensionError);
NDNSEC_DEFINE_ERROR(GenerationMismatch);
NDNSEC_DEFINE_ERROR(RankDeficient);

// simulation
NDNSEC_DEFINE_ERROR(ConfigError);
NDNSEC_DEFINE_ERROR(TickLimitExceeded);
NDNSEC_DEFINE_ERROR(UnknownNode);

#undef NDNSEC_DEFINE_ERROR

}  // namespace ndnsec
