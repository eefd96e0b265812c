/*
 * Copyright 2026 The hpek Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// hpek: batch driver for the hash evaluation experiments.
//
//   hpek heterogeneity  adjacent-pair entropy over iterated hash chains
//   hpek min-entropy    minimum pairwise entropy (O(m^2) scan)
//   hpek pow            proof-of-work nonce distribution
//   hpek bench          per-digest computation time
//   hpek chain-demo     mine, export, re-import and verify a small chain
//   hpek all            everything above; timing runs last
//
// Exit codes: 0 success, 1 usage error, 2 I/O error, 3 PoW exhaustion.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "hpek/error.hpp"
#include "hpek/report.hpp"

namespace {

enum ExitCode : int { ok = 0, usage = 1, io = 2, exhausted = 3 };

struct SharedFlags {
  std::string algorithms{"all"};
  std::size_t samples{32768};
  unsigned k{8};
  std::uint64_t trials{32768};
  std::uint64_t max_iterations{0};
  std::size_t reps{10000};
  std::size_t warmup{1000};
  std::size_t message_bytes{32};
  std::size_t blocks{3};
  std::string seed{"block-0"};
  std::string out{"hpek-out"};
  std::vector<std::string> formats{"csv", "json", "svg"};
};

void add_shared_flags(CLI::App* cmd, SharedFlags& f) {
  cmd->add_option("--alg", f.algorithms, "Algorithms: all, mainstream, or a comma list (SHA-256,SHA3-256,...)")
      ->capture_default_str();
  cmd->add_option("-m,--samples", f.samples, "Digests per hash chain")->capture_default_str();
  cmd->add_option("--k", f.k, "Leading zero bits required by proof-of-work")->capture_default_str();
  cmd->add_option("--trials", f.trials, "Proof-of-work trials per algorithm")->capture_default_str();
  cmd->add_option("--max-iterations", f.max_iterations, "PoW iteration bound per trial (0 = 2^(k+8))")
      ->capture_default_str();
  cmd->add_option("--reps", f.reps, "Timed digests per algorithm")->capture_default_str();
  cmd->add_option("--warmup", f.warmup, "Untimed warmup digests")->capture_default_str();
  cmd->add_option("--message-bytes", f.message_bytes, "Timing message size")->capture_default_str();
  cmd->add_option("--blocks", f.blocks, "Blocks mined by chain-demo")->capture_default_str();
  cmd->add_option("--seed", f.seed, "Chain seed / PoW content prefix (UTF-8)")->capture_default_str();
  cmd->add_option("--out", f.out, "Output directory")->capture_default_str();
  cmd->add_option("--format", f.formats, "Output formats: csv,json,svg")->delimiter(',')->capture_default_str();
}

hpek::RunConfig to_config(const SharedFlags& f, std::set<hpek::Experiment> experiments) {
  hpek::RunConfig c;
  c.experiments = std::move(experiments);
  c.algorithms = hpek::parse_algorithm_list(f.algorithms);
  c.m = f.samples;
  c.k = f.k;
  c.trials = f.trials;
  c.max_iterations = f.max_iterations;
  c.reps = f.reps;
  c.warmup = f.warmup;
  c.message_bytes = f.message_bytes;
  c.chain_blocks = f.blocks;
  c.seed = f.seed;
  c.output_dir = f.out;
  c.formats.clear();
  for (const auto& name : f.formats) c.formats.insert(hpek::parse_format(name));
  c.parallelism = hpek::parallelism_from_env();
  return c;
}

void print_report(const hpek::ExperimentReport& report) {
  for (const auto& r : report.results) {
    std::cout << "== " << hpek::to_string(r.experiment) << '\n';
    for (const auto& row : r.rows) {
      std::cout << "  " << row.algorithm << "  q1=" << hpek::format_double(row.quartiles.q1)
                << "  median=" << hpek::format_double(row.quartiles.median)
                << "  q3=" << hpek::format_double(row.quartiles.q3) << "  n=" << row.quartiles.n
                << '\n';
    }
  }
  std::cout << "wrote " << report.config.output_dir.string() << " in " << report.runtime_seconds
            << " s\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hash algorithm evaluation: bit-difference entropy, proof-of-work nonces, digest timing"};
  app.require_subcommand(1);

  SharedFlags flags;
  struct Sub {
    const char* name;
    const char* help;
    std::set<hpek::Experiment> experiments;
  };
  using E = hpek::Experiment;
  const std::vector<Sub> subs{
      {"heterogeneity", "Adjacent-pair entropy of iterated hash chains", {E::HeterogeneityAdjacent}},
      {"min-entropy", "Minimum pairwise entropy of iterated hash chains", {E::HeterogeneityMin}},
      {"pow", "Proof-of-work nonce distribution", {E::Pow}},
      {"bench", "Per-digest computation time (single-threaded)", {E::Timing}},
      {"chain-demo", "Mine, export, re-import and verify a small block chain", {E::ChainDemo}},
      {"all", "Every experiment; timing runs last",
       {E::HeterogeneityAdjacent, E::HeterogeneityMin, E::Pow, E::ChainDemo, E::Timing}},
  };
  std::vector<CLI::App*> commands;
  for (const auto& s : subs) {
    auto* cmd = app.add_subcommand(s.name, s.help);
    add_shared_flags(cmd, flags);
    commands.push_back(cmd);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return usage;
  }

  try {
    for (std::size_t i = 0; i < subs.size(); ++i) {
      if (commands[i]->parsed()) {
        print_report(hpek::run(to_config(flags, subs[i].experiments)));
      }
    }
  } catch (const hpek::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return usage;
  } catch (const hpek::IoError& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return io;
  } catch (const hpek::Exhausted& e) {
    std::cerr << "exhausted: " << e.what() << '\n';
    return exhausted;
  } catch (const hpek::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return usage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "I/O error: " << e.what() << '\n';
    return io;
  }
  return ok;
}
