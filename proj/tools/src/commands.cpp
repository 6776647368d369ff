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

#include "ndnsec/cli/commands.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ndnsec/cli/bench.hpp"
#include "ndnsec/error.hpp"
#include "ndnsec/random.hpp"
#include "ndnsec/sig/scheme.hpp"
#include "ndnsec/sim/simulator.hpp"

namespace ndnsec::cli {

namespace fs = std::filesystem;

namespace {

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ConfigError("cannot write " + path.string());
  out << text;
  if (!out) throw ConfigError("write failed: " + path.string());
}

std::string deliveries_csv(const sim::Trace& trace) {
  std::ostringstream out;
  out << "consumer,name,tick,hops,attempt,authentic\n";
  for (const auto& d : trace.deliveries) {
    out << d.consumer << ',' << d.name.to_text() << ',' << d.tick << ',' << d.hops << ','
        << d.attempt << ',' << (d.authentic ? 1 : 0) << '\n';
  }
  return out.str();
}

}  // namespace

int cmd_bench(const std::vector<std::string>& schemes, std::size_t iterations,
              std::size_t msg_size, const fs::path& out, std::ostream& log,
              std::ostream& err) {
  BenchOptions options;
  options.iterations = iterations;
  options.msg_size = msg_size;
  try {
    for (const auto& name : schemes) options.schemes.push_back(sig::parse_scheme(name));
    pin_to_current_cpu();
    SystemRandom rng;
    auto rows = run_bench(options, rng);
    std::string csv = bench_csv(rows);
    if (out.empty()) {
      log << csv;
    } else {
      write_file(out, csv);
    }
    for (const auto& op : options.operations) {
      log << op << " ranking (slowest first):";
      for (auto s : ranking(rows, op)) log << ' ' << sig::scheme_name(s);
      log << '\n';
    }
  } catch (const UnknownScheme& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_sim(const fs::path& topology, const fs::path& scenario, const fs::path& out_dir,
            std::ostream& err) {
  try {
    auto topo = sim::build_topology(read_file(topology));
    auto scen = sim::parse_scenario(read_file(scenario));
    auto trace = sim::run(topo, scen);
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw ConfigError("cannot create " + out_dir.string() + ": " + ec.message());
    write_file(out_dir / "trace.jsonl", trace.to_jsonl());
    write_file(out_dir / "counters.csv", trace.counters_csv());
    write_file(out_dir / "deliveries.csv", deliveries_csv(trace));
  } catch (const TickLimitExceeded& e) {
    err << "error: tick limit exceeded: " << e.what() << '\n';
    return kExitTickLimit;
  } catch (const ConfigError& e) {
    err << "error: config: " << e.what() << '\n';
    return kExitConfig;
  } catch (const UnknownNode& e) {
    err << "error: unknown node: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_keygen(const std::string& scheme, const fs::path& out, const std::string& prefix,
               std::ostream& err) {
  try {
    sig::SchemeParams params;
    params.scheme = sig::parse_scheme(scheme);
    (void)Name::parse(prefix);
    SystemRandom rng;
    auto key = sig::keygen(params, rng);
    nlohmann::json doc = {
        {"prefix", prefix},
        {"scheme", std::string(sig::scheme_name(key.scheme()))},
        {"public_key", to_hex(key.public_key().serialize())},
        {"private_key", to_hex(key.serialize_private())},
    };
    write_file(out, doc.dump(2) + "\n");
  } catch (const UnknownScheme& e) {
    err << "error: unknown scheme: " << e.what() << '\n';
    return kExitConfig;
  } catch (const MalformedName& e) {
    err << "error: bad prefix: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace ndnsec::cli
