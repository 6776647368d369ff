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

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ndnsec/cli/bench.hpp"
#include "ndnsec/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace ndnsec::cli;
  CLI::App app{"ndnsec: NDN forwarding simulator and signature toolbox"};
  app.require_subcommand(1);

  std::vector<std::string> schemes;
  std::size_t iterations = kDefaultIterations;
  std::size_t msg_size = kDefaultMsgSize;
  std::string bench_out;
  auto* bench = app.add_subcommand("bench", "Time keygen, sign and verify per scheme");
  bench->add_option("--schemes", schemes, "Schemes to run (default: all six)");
  bench->add_option("--iterations", iterations, "Timed iterations per operation")
      ->check(CLI::PositiveNumber);
  bench->add_option("--msg-size", msg_size, "Message size in bytes");
  bench->add_option("--out", bench_out, "CSV output file (default: stdout)");

  std::string topology, scenario, sim_out;
  auto* sim = app.add_subcommand("sim", "Run a simulation scenario");
  sim->add_option("--topology", topology, "Topology JSON file")->required();
  sim->add_option("--scenario", scenario, "Scenario JSON file")->required();
  sim->add_option("--out", sim_out, "Output directory")->required();

  std::string scheme, key_out, prefix = "/";
  auto* keygen = app.add_subcommand("keygen", "Generate a key pair");
  keygen->add_option("--scheme", scheme, "Signature scheme")->required();
  keygen->add_option("--out", key_out, "Key file")->required();
  keygen->add_option("--prefix", prefix, "Trust prefix recorded with the key");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (*bench) return cmd_bench(schemes, iterations, msg_size, bench_out, std::cout, std::cerr);
  if (*sim) return cmd_sim(topology, scenario, sim_out, std::cerr);
  return cmd_keygen(scheme, key_out, prefix, std::cerr);
}
