// Copyright 2026 The qcmap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcmap/architecture.hpp"
#include "qcmap/benchgen.hpp"
#include "qcmap/mappers.hpp"

namespace qcmap {

enum class ScalingMode { Virtual, Weak, Strong, BoundsSweep };

std::string_view scaling_mode_name(ScalingMode mode);

struct BenchmarkEntry {
  BenchmarkKind kind = BenchmarkKind::Random;
  BenchmarkParams params;

  /// CSV label, e.g. "qft" or "qgf-g1000-f0.5".
  std::string label() const;
};

/// Declarative experiment description, normally read from a JSON file.
///
/// Architecture sweep per mode:
///   virtual      one architecture (`cores` x `capacity`), circuits of each
///                size in `qubits`
///   weak         fixed `qubits`, each entry of `cores`, capacity q / N
///   strong       fixed `capacity`, each entry of `cores`, q = N * capacity
///   bounds-sweep as weak, restricted to (q, g, f) random circuits
struct ExperimentConfig {
  ScalingMode mode = ScalingMode::Strong;
  std::vector<BenchmarkEntry> benchmarks;
  std::vector<std::size_t> cores;
  std::size_t capacity = 0;
  std::vector<std::size_t> qubits;
  std::vector<Algorithm> algorithms;
  std::vector<Seed> seeds;
  std::size_t lookahead = kDefaultLookahead;
  /// When false the wall_time_s column is left empty so reruns are
  /// byte-identical.
  bool timing = true;
  std::size_t threads = 1;
  std::string output;
};

class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string path, const std::string &message);
  const std::string &path() const { return path_; }

 private:
  std::string path_;
};

/// Parses and validates a JSON experiment config; unset fields take the
/// desk-scale defaults of the chosen mode. Throws ConfigError.
ExperimentConfig parse_experiment_config(std::string_view json_text);

struct ExperimentPoint {
  std::size_t q = 0;
  Architecture arch;
};

/// The (circuit size, architecture) grid implied by the config's mode.
std::vector<ExperimentPoint> expand_points(const ExperimentConfig &cfg);

struct ExperimentRow {
  ScalingMode mode = ScalingMode::Strong;
  std::string benchmark;
  std::size_t q = 0;
  std::size_t n_cores = 0;
  std::size_t capacity = 0;
  std::string algorithm;
  Seed seed = 0;
  std::size_t comms = 0;
  std::optional<double> lower_bound;
  std::optional<double> upper_bound;
  std::optional<double> wall_time_s;
  std::size_t repairs = 0;
};

inline constexpr std::string_view kExperimentCsvHeader =
    "mode,benchmark,q,n_cores,capacity,algorithm,seed,comms,lower_bound,upper_bound,wall_time_s,repairs";

/// Runs every (benchmark, point, algorithm, seed) cell. Rows come back in
/// that nesting order regardless of `threads`.
std::vector<ExperimentRow> run_experiment(const ExperimentConfig &cfg);

std::string format_experiment_csv(const std::vector<ExperimentRow> &rows);

}  // namespace qcmap
