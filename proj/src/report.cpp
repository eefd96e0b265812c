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

#include "hpek/report.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "hpek/blockmodel.hpp"
#include "hpek/error.hpp"
#include "hpek/heterogeneity.hpp"
#include "hpek/pow.hpp"
#include "hpek/timing.hpp"

namespace hpek {
namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

class OutputDir {
 public:
  OutputDir(const RunConfig& config, Experiment e)
      : formats_(config.formats), dir_(config.output_dir / std::string(to_string(e))) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw IoError("cannot create " + dir_.string() + ": " + ec.message());
  }

  bool wants(OutputFormat f) const { return formats_.count(f) != 0; }
  fs::path path(const std::string& name) const { return dir_ / name; }

  fs::path write(const std::string& name, const std::string& text, ExperimentResult& result) const {
    const fs::path p = path(name);
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + p.string() + " for writing");
    out << text;
    out.close();
    if (!out) throw IoError("write failed: " + p.string());
    result.files.push_back(p);
    return p;
  }

 private:
  std::set<OutputFormat> formats_;
  fs::path dir_;
};

Json rows_json(const std::vector<SummaryRow>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) {
    out.push_back(Json{{"algorithm", r.algorithm},
                       {"q1", r.quartiles.q1},
                       {"median", r.quartiles.median},
                       {"q3", r.quartiles.q3},
                       {"n", r.quartiles.n}});
  }
  return out;
}

Json algorithm_names(const RunConfig& config) {
  Json names = Json::array();
  for (auto a : config.algorithms) names.push_back(to_string(a));
  return names;
}

std::string summary_json(Experiment e, Json config, Json host, const std::vector<SummaryRow>& rows) {
  Json doc;
  doc["experiment"] = std::string(to_string(e));
  doc["config"] = std::move(config);
  doc["host"] = std::move(host);
  doc["rows"] = rows_json(rows);
  return doc.dump(2) + "\n";
}

Json stable_host(const std::string& cpu) {
  return Json{{"cpu", cpu}, {"toolkit_version", std::string(toolkit_version)}};
}

void run_heterogeneity(const RunConfig& config, const std::string& cpu,
                       std::vector<ExperimentResult>& results) {
  const bool adjacent = config.experiments.count(Experiment::HeterogeneityAdjacent) != 0;
  const bool minimum = config.experiments.count(Experiment::HeterogeneityMin) != 0;
  if (!adjacent && !minimum) return;

  std::optional<OutputDir> adj_dir, min_dir;
  ExperimentResult adj_res{Experiment::HeterogeneityAdjacent, {}, {}};
  ExperimentResult min_res{Experiment::HeterogeneityMin, {}, {}};
  std::vector<BoxSeries> adj_boxes, min_boxes;
  std::ostringstream adj_summary, min_summary;
  const std::string header = "algorithm,kind,q1,median,q3,m,seed\n";
  adj_summary << header;
  min_summary << header;
  if (adjacent) adj_dir.emplace(config, Experiment::HeterogeneityAdjacent);
  if (minimum) min_dir.emplace(config, Experiment::HeterogeneityMin);

  auto record = [&](const EntropySeries& series, const OutputDir& dir, ExperimentResult& res,
                    std::vector<BoxSeries>& boxes, std::ostringstream& summary) {
    const std::string name = to_string(series.alg);
    const auto q = quartile_summary(series.values);
    res.rows.push_back({name, q});
    summary << name << ',' << to_string(series.kind) << ',' << format_double(q.q1) << ','
            << format_double(q.median) << ',' << format_double(q.q3) << ',' << series.m << ','
            << config.seed << '\n';
    if (dir.wants(OutputFormat::Csv)) {
      std::string csv = "index,entropy\n";
      for (std::size_t i = 0; i < series.values.size(); ++i) {
        csv += std::to_string(i);
        csv += ',';
        csv += format_double(series.values[i]);
        csv += '\n';
      }
      dir.write(name + ".csv", csv, res);
    }
    if (dir.wants(OutputFormat::Svg)) boxes.push_back({name, series.values});
  };

  for (auto alg : config.algorithms) {
    const auto chain = generate_chain(alg, as_bytes(config.seed), config.m);
    if (adjacent) {
      record(adjacent_entropy_series(chain, config.parallelism), *adj_dir, adj_res, adj_boxes,
             adj_summary);
    }
    if (minimum) {
      record(min_pairwise_entropy(chain, config.parallelism), *min_dir, min_res, min_boxes,
             min_summary);
    }
  }

  auto finish = [&](Experiment e, const OutputDir& dir, ExperimentResult& res,
                    const std::vector<BoxSeries>& boxes, const std::ostringstream& summary,
                    const char* title) {
    if (dir.wants(OutputFormat::Csv)) dir.write("summary.csv", summary.str(), res);
    if (dir.wants(OutputFormat::Json)) {
      Json cfg{{"algorithms", algorithm_names(config)},
               {"m", config.m},
               {"seed", config.seed},
               {"entropy_unit", "nats"},
               {"quartile_rule", "linear interpolation at rank (n-1)q, ascending"}};
      dir.write("summary.json", summary_json(e, std::move(cfg), stable_host(cpu), res.rows), res);
    }
    if (dir.wants(OutputFormat::Svg)) {
      emit_boxplot(boxes, title, dir.path("boxplot.svg"), "entropy (nats)");
      res.files.push_back(dir.path("boxplot.svg"));
    }
    results.push_back(std::move(res));
  };
  if (adjacent) {
    finish(Experiment::HeterogeneityAdjacent, *adj_dir, adj_res, adj_boxes, adj_summary,
           "Entropy against the immediately previous hash value");
  }
  if (minimum) {
    finish(Experiment::HeterogeneityMin, *min_dir, min_res, min_boxes, min_summary,
           "Minimum entropy against all other hash values");
  }
}

void run_pow(const RunConfig& config, const std::string& cpu, std::vector<ExperimentResult>& results) {
  OutputDir dir(config, Experiment::Pow);
  ExperimentResult res{Experiment::Pow, {}, {}};
  std::vector<BoxSeries> boxes;
  std::ostringstream summary;
  summary << "algorithm,k,trials,q1,median,q3\n";

  for (auto alg : config.algorithms) {
    PowConfig pc{alg, config.k, config.max_iterations, config.trials, Bytes(config.seed.begin(), config.seed.end())};
    const auto dist = pow_distribution(pc, config.parallelism);
    const std::string name = to_string(alg);
    const auto& q = dist.summary;
    res.rows.push_back({name, q});
    summary << name << ',' << config.k << ',' << config.trials << ',' << format_double(q.q1) << ','
            << format_double(q.median) << ',' << format_double(q.q3) << '\n';
    if (dir.wants(OutputFormat::Csv)) {
      std::string csv = "trial,nonce\n";
      for (const auto& s : dist.samples) {
        csv += std::to_string(s.trial_index);
        csv += ',';
        csv += std::to_string(s.nonce);
        csv += '\n';
      }
      dir.write(name + ".csv", csv, res);
    }
    if (dir.wants(OutputFormat::Svg)) boxes.push_back({name, nonce_values(dist.samples)});
  }

  if (dir.wants(OutputFormat::Csv)) dir.write("summary.csv", summary.str(), res);
  if (dir.wants(OutputFormat::Json)) {
    Json cfg{{"algorithms", algorithm_names(config)},
             {"k", config.k},
             {"trials", config.trials},
             {"max_iterations", config.max_iterations == 0 ? default_max_iterations(config.k)
                                                            : config.max_iterations},
             {"seed", config.seed},
             {"trial_content", "seed || u64be(trial)"},
             {"quartile_rule", "linear interpolation at rank (n-1)q, ascending"}};
    dir.write("summary.json", summary_json(Experiment::Pow, std::move(cfg), stable_host(cpu), res.rows),
              res);
  }
  if (dir.wants(OutputFormat::Svg)) {
    emit_boxplot(boxes, "Proof-of-work nonce (k = " + std::to_string(config.k) + ")",
                 dir.path("boxplot.svg"), "nonce");
    res.files.push_back(dir.path("boxplot.svg"));
  }
  results.push_back(std::move(res));
}

void run_timing(const RunConfig& config, const std::string& cpu,
                std::vector<ExperimentResult>& results) {
  OutputDir dir(config, Experiment::Timing);
  ExperimentResult res{Experiment::Timing, {}, {}};
  std::vector<BoxSeries> boxes;
  std::ostringstream summary;
  summary << "algorithm,reps,message_bytes,q1_ns,median_ns,q3_ns,cpu_model,timer_resolution_ns\n";
  const Bytes message = timing_message(config.message_bytes);
  std::uint64_t resolution = 0;
  std::vector<std::string> warnings;

  for (auto alg : config.algorithms) {
    const auto batch = time_digest_batch(alg, message, config.reps, config.warmup);
    const auto q = timing_summary(batch);
    const std::string name = to_string(alg);
    resolution = std::max(resolution, batch.clock.resolution_ns);
    for (const auto& w : batch.warnings) warnings.push_back(name + ": " + w);
    res.rows.push_back({name, q});
    std::string cpu_field = cpu;
    std::replace(cpu_field.begin(), cpu_field.end(), ',', ' ');
    summary << name << ',' << config.reps << ',' << config.message_bytes << ','
            << format_double(q.q1) << ',' << format_double(q.median) << ',' << format_double(q.q3)
            << ',' << cpu_field << ',' << batch.clock.resolution_ns << '\n';
    if (dir.wants(OutputFormat::Csv)) {
      std::string csv = "rep,nanos\n";
      for (std::size_t i = 0; i < batch.samples.size(); ++i) {
        csv += std::to_string(i);
        csv += ',';
        csv += std::to_string(batch.samples[i].nanos);
        csv += '\n';
      }
      dir.write(name + ".csv", csv, res);
    }
    if (dir.wants(OutputFormat::Svg)) {
      std::vector<double> ns;
      for (const auto& s : batch.samples) ns.push_back(static_cast<double>(s.nanos));
      boxes.push_back({name, std::move(ns)});
    }
  }

  if (dir.wants(OutputFormat::Csv)) dir.write("summary.csv", summary.str(), res);
  if (dir.wants(OutputFormat::Json)) {
    Json cfg{{"algorithms", algorithm_names(config)},
             {"reps", config.reps},
             {"warmup", config.warmup},
             {"message_bytes", config.message_bytes},
             {"clock", "std::chrono::steady_clock"}};
    Json host = stable_host(cpu);
    host["timer_resolution_ns"] = resolution;
    host["warnings"] = warnings;
    dir.write("summary.json", summary_json(Experiment::Timing, std::move(cfg), std::move(host), res.rows),
              res);
  }
  if (dir.wants(OutputFormat::Svg)) {
    emit_boxplot(boxes, "Computation time per digest", dir.path("boxplot.svg"), "nanoseconds");
    res.files.push_back(dir.path("boxplot.svg"));
  }
  results.push_back(std::move(res));
}

void run_chain_demo(const RunConfig& config, std::vector<ExperimentResult>& results) {
  OutputDir dir(config, Experiment::ChainDemo);
  ExperimentResult res{Experiment::ChainDemo, {}, {}};
  Json chains = Json::array();

  for (auto alg : config.algorithms) {
    Chain chain = make_chain(alg, config.k);
    for (std::size_t i = 0; i < config.chain_blocks; ++i) {
      const std::string tx = config.seed + "/tx-" + std::to_string(i);
      append_block(chain, {Bytes(tx.begin(), tx.end())},
                   static_cast<std::int64_t>(1700000000 + 600 * i));
    }
    const std::string name = to_string(alg);
    const fs::path file = dir.path(name + ".hpek");
    export_chain(chain, file);
    res.files.push_back(file);
    const Chain reloaded = import_chain(file);
    const auto report = verify_chain(reloaded);

    std::vector<double> nonces;
    Json blocks = Json::array();
    for (const auto& b : reloaded.blocks) {
      nonces.push_back(static_cast<double>(b.nonce));
      blocks.push_back(Json{{"previous_hash", b.previous_hash.to_hex()},
                            {"generation_time", b.generation_time},
                            {"transactions", b.transactions.size()},
                            {"nonce", b.nonce},
                            {"block_hash", b.block_hash.to_hex()}});
    }
    if (!nonces.empty()) res.rows.push_back({name, quartile_summary(nonces)});
    chains.push_back(Json{{"algorithm", name},
                          {"k", config.k},
                          {"file", file.filename().string()},
                          {"valid", report.valid},
                          {"reason", std::string(to_string(report.reason))},
                          {"blocks", std::move(blocks)}});
  }
  if (dir.wants(OutputFormat::Json)) {
    Json doc{{"experiment", std::string(to_string(Experiment::ChainDemo))}, {"chains", std::move(chains)}};
    dir.write("summary.json", doc.dump(2) + "\n", res);
  }
  results.push_back(std::move(res));
}

}  // namespace

std::string_view to_string(Experiment e) noexcept {
  switch (e) {
    case Experiment::HeterogeneityAdjacent: return "heterogeneity-adjacent";
    case Experiment::HeterogeneityMin: return "heterogeneity-min";
    case Experiment::Pow: return "pow";
    case Experiment::Timing: return "timing";
    case Experiment::ChainDemo: return "chain-demo";
  }
  return "unknown";
}

Experiment parse_experiment(std::string_view name) {
  const std::string key = lower(trim(name));
  for (auto e : {Experiment::HeterogeneityAdjacent, Experiment::HeterogeneityMin, Experiment::Pow,
                 Experiment::Timing, Experiment::ChainDemo}) {
    if (key == to_string(e)) return e;
  }
  throw UsageError("unknown experiment '" + std::string(name) + "'", std::string(name));
}

OutputFormat parse_format(std::string_view name) {
  const std::string key = lower(trim(name));
  if (key == "csv") return OutputFormat::Csv;
  if (key == "json") return OutputFormat::Json;
  if (key == "svg") return OutputFormat::Svg;
  throw UsageError("unknown output format '" + std::string(name) + "'", std::string(name));
}

std::vector<HashAlgorithmId> parse_algorithm_list(std::string_view spec) {
  const std::string key = lower(trim(spec));
  if (key == "all") return list_algorithms();
  if (key == "mainstream") return mainstream_algorithms();
  std::vector<HashAlgorithmId> out;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto comma = spec.find(',', start);
    const auto token = trim(spec.substr(start, comma == std::string_view::npos ? spec.npos : comma - start));
    if (token.empty()) throw UsageError("empty algorithm name in '" + std::string(spec) + "'", std::string(spec));
    const auto alg = parse_algorithm(token);
    if (std::find(out.begin(), out.end(), alg) == out.end()) out.push_back(alg);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

ExperimentReport run(const RunConfig& config) {
  if (config.experiments.empty()) throw UsageError("no experiment selected");
  if (config.algorithms.empty()) throw UsageError("no hash algorithm selected");
  for (auto alg : config.algorithms) {
    if (!alg.is_valid()) throw UsageError("unsupported hash algorithm in configuration");
  }
  if (config.formats.empty()) throw UsageError("no output format selected");
  const bool needs_chain = config.experiments.count(Experiment::HeterogeneityAdjacent) ||
                           config.experiments.count(Experiment::HeterogeneityMin);
  if (needs_chain && config.m < 2) throw UsageError("--samples must be at least 2");
  if (config.experiments.count(Experiment::Pow) && config.trials == 0) {
    throw UsageError("--trials must be at least 1");
  }
  if (config.experiments.count(Experiment::Timing) && config.reps == 0) {
    throw UsageError("--reps must be at least 1");
  }
  for (auto alg : config.algorithms) {
    if (config.k > alg.output_bits) {
      throw UsageError("--k " + std::to_string(config.k) + " exceeds the " + to_string(alg) +
                       " digest length");
    }
  }

  const auto start = std::chrono::steady_clock::now();
  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec) throw IoError("cannot create " + config.output_dir.string() + ": " + ec.message());

  ExperimentReport report{config, {}, host_cpu_model(), 0};
  run_heterogeneity(config, report.cpu_model, report.results);
  if (config.experiments.count(Experiment::Pow)) run_pow(config, report.cpu_model, report.results);
  if (config.experiments.count(Experiment::ChainDemo)) run_chain_demo(config, report.results);
  // Timing goes last and alone: no kernel may be running while it measures.
  if (config.experiments.count(Experiment::Timing)) run_timing(config, report.cpu_model, report.results);

  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Json experiments = Json::array();
  for (const auto& r : report.results) {
    Json files = Json::array();
    for (const auto& f : r.files) files.push_back(fs::relative(f, config.output_dir).generic_string());
    experiments.push_back(Json{{"experiment", std::string(to_string(r.experiment))}, {"files", files}});
  }
  Json manifest{{"toolkit_version", std::string(toolkit_version)},
                {"cpu", report.cpu_model},
                {"threads", resolve_threads(config.parallelism)},
                {"runtime_seconds", report.runtime_seconds},
                {"experiments", std::move(experiments)}};
  const fs::path manifest_path = config.output_dir / "run.json";
  std::ofstream out(manifest_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + manifest_path.string() + " for writing");
  out << manifest.dump(2) << '\n';
  if (!out) throw IoError("write failed: " + manifest_path.string());
  return report;
}

}  // namespace hpek
