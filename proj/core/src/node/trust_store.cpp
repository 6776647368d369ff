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

#include "ndnsec/node/trust_store.hpp"

#include <nlohmann/json.hpp>

#include "ndnsec/error.hpp"
#include "ndnsec/nc/netcoding.hpp"

namespace ndnsec::node {

namespace {

sig::SchemeId key_scheme(sig::SchemeId scheme) {
  return scheme == sig::SchemeId::kNetworkCoding ? sig::SchemeId::kBls : scheme;
}

}  // namespace

void TrustStore::add(Name prefix, sig::SchemeId scheme, sig::PublicKey key) {
  if (key.scheme() != key_scheme(scheme)) {
    throw SchemeMismatch("trust anchor key does not suit scheme " +
                         std::string(sig::scheme_name(scheme)));
  }
  for (auto& e : entries_) {
    if (e.prefix == prefix) {
      e = {std::move(prefix), scheme, std::move(key)};
      return;
    }
  }
  entries_.push_back({std::move(prefix), scheme, std::move(key)});
}

const TrustEntry* TrustStore::lookup(const Name& key_locator) const {
  const TrustEntry* best = nullptr;
  for (const auto& e : entries_) {
    if (e.prefix.is_prefix_of(key_locator) &&
        (best == nullptr || e.prefix.size() > best->prefix.size())) {
      best = &e;
    }
  }
  return best;
}

bool TrustStore::verify(const wire::Data& data) const {
  const TrustEntry* e = lookup(data.key_locator);
  if (e == nullptr || static_cast<std::uint8_t>(e->scheme) != data.scheme_id) return false;
  try {
    if (e->scheme == sig::SchemeId::kNetworkCoding) {
      auto packet = nc::CodedPacket::decode(data.content);
      return nc::nc_verify(e->key.as<sig::bls::PublicKey>(), packet);
    }
    return sig::verify(e->key, wire::signed_portion(data), {e->scheme, data.signature});
  } catch (const Error&) {
    return false;
  }
}

TrustStore TrustStore::from_json(std::string_view text) {
  TrustStore store;
  try {
    auto j = nlohmann::json::parse(text);
    if (!j.is_array()) throw ConfigError("trust store must be a JSON array");
    for (const auto& item : j) {
      auto scheme = sig::parse_scheme(item.at("scheme").get<std::string>());
      Bytes key = from_hex(item.at("public_key").get<std::string>());
      store.add(Name::parse(item.at("prefix").get<std::string>()), scheme,
                sig::PublicKey::parse(key_scheme(scheme), key));
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("trust store: ") + e.what());
  } catch (const Error& e) {
    throw ConfigError(std::string("trust store: ") + e.what());
  }
  return store;
}

std::string TrustStore::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& e : entries_) {
    j.push_back({{"prefix", e.prefix.to_text()},
                 {"scheme", std::string(sig::scheme_name(e.scheme))},
                 {"public_key", to_hex(e.key.serialize())}});
  }
  return j.dump(2);
}

}  // namespace ndnsec::node
