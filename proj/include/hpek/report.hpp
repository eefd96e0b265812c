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

#pragma once

/**
 * \file hpek/report.hpp
 * Batch experiment orchestration and output files.
 *
 * Layout under RunConfig::output_dir, one directory per experiment:
 *
 *     <experiment>/<ALGORITHM>.csv   raw samples
 *     <experiment>/summary.csv       one quartile row per algorithm
 *     <experiment>/summary.json      config, host and rows
 *     <experiment>/boxplot.svg       one box per algorithm
 *     run.json                       version, thread count, wall-clock runtime
 *
 * Everything except run.json and the timing directory is a pure function of
 * the RunConfig, so repeated runs are byte-identical whatever the worker count.
 */

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hpek/hash_suite.hpp"
#include "hpek/parallel.hpp"
#include "hpek/stats.hpp"

namespace hpek {

inline constexpr std::string_view toolkit_version = "0.3.0";

enum class Experiment : std::uint8_t { HeterogeneityAdjacent, HeterogeneityMin, Pow, Timing, ChainDemo };
enum class OutputFormat : std::uint8_t { Csv, Json, Svg };

std::string_view to_string(Experiment e) noexcept;
Experiment parse_experiment(std::string_view name);
OutputFormat parse_format(std::string_view name);

/// Algorithm list from "all", "mainstream" or a comma-separated list of names.
std::vector<HashAlgorithmId> parse_algorithm_list(std::string_view spec);

struct RunConfig {
  std::set<Experiment> experiments;
  std::vector<HashAlgorithmId> algorithms = list_algorithms();
  std::size_t m{32768};
  unsigned k{8};
  std::uint64_t trials{32768};
  std::uint64_t max_iterations{0};  ///< PoW bound; 0 = 2^(k+8)
  std::size_t reps{10000};
  std::size_t warmup{1000};
  std::size_t message_bytes{32};
  std::size_t chain_blocks{3};
  std::string seed{"block-0"};
  std::filesystem::path output_dir{"hpek-out"};
  std::set<OutputFormat> formats{OutputFormat::Csv, OutputFormat::Json, OutputFormat::Svg};
  Parallelism parallelism{};
};

struct SummaryRow {
  std::string algorithm;
  QuartileSummary quartiles;
};

struct ExperimentResult {
  Experiment experiment;
  std::vector<SummaryRow> rows;
  std::vector<std::filesystem::path> files;
};

struct ExperimentReport {
  RunConfig config;
  std::vector<ExperimentResult> results;
  std::string cpu_model;
  double runtime_seconds{0};
};

/// Runs each selected experiment for each algorithm and writes its files.
/// Throws UsageError for an empty experiment or algorithm selection (before
/// touching the filesystem), IoError when output cannot be written and
/// Exhausted when a PoW search gives up.
ExperimentReport run(const RunConfig& config);

struct BoxSeries {
  std::string label;
  std::vector<double> values;
};

/// Standalone SVG with one box per series: q1..q3 box, median line and
/// whiskers to the furthest samples within 1.5 IQR of the box.
std::string render_boxplot_svg(const std::vector<BoxSeries>& series, std::string_view title,
                               std::string_view y_label = {});

void emit_boxplot(const std::vector<BoxSeries>& series, std::string_view title,
                  const std::filesystem::path& path, std::string_view y_label = {});

/// Shortest decimal that parses back to the same double.
std::string format_double(double v);

}  // namespace hpek
