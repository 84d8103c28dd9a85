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

#include "qcmap/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "qcmap/bounds.hpp"

namespace qcmap {

std::string_view scaling_mode_name(ScalingMode mode) {
  switch (mode) {
    case ScalingMode::Virtual:
      return "virtual";
    case ScalingMode::Weak:
      return "weak";
    case ScalingMode::Strong:
      return "strong";
    case ScalingMode::BoundsSweep:
      return "bounds-sweep";
  }
  return "?";
}

std::string BenchmarkEntry::label() const {
  std::ostringstream out;
  out << benchmark_name(kind);
  if (kind == BenchmarkKind::RandomQgf) {
    out << "-g" << params.gates << "-f" << params.two_qubit_fraction;
  } else if (kind == BenchmarkKind::Random &&
             (params.two_qubit_fraction != 0.5 || params.depth_factor != 2)) {
    out << "-d" << params.depth_factor << "-f" << params.two_qubit_fraction;
  }
  return out.str();
}

ConfigError::ConfigError(std::string path, const std::string &message)
    : std::runtime_error(path + ": " + message), path_(std::move(path)) {}

namespace {

using nlohmann::json;

std::size_t count_field(const json &v, const std::string &path, std::size_t min = 0) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw ConfigError(path, "expected a non-negative integer");
  }
  const auto x = v.get<std::size_t>();
  if (x < min) throw ConfigError(path, "must be at least " + std::to_string(min));
  return x;
}

std::vector<std::size_t> count_list(const json &v, const std::string &path, std::size_t min) {
  if (v.is_number()) return {count_field(v, path, min)};
  if (!v.is_array() || v.empty()) throw ConfigError(path, "expected a non-empty array of integers");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(count_field(v[i], path + "/" + std::to_string(i), min));
  return out;
}

double fraction_field(const json &v, const std::string &path) {
  if (!v.is_number()) throw ConfigError(path, "expected a number");
  const double f = v.get<double>();
  if (!(f >= 0.0 && f <= 1.0)) throw ConfigError(path, "must lie in [0, 1]");
  return f;
}

BenchmarkEntry parse_benchmark(const json &v, const std::string &path) {
  BenchmarkEntry entry;
  std::string name;
  if (v.is_string()) {
    name = v.get<std::string>();
  } else if (v.is_object() && v.contains("name") && v["name"].is_string()) {
    name = v["name"].get<std::string>();
  } else {
    throw ConfigError(path, "expected a benchmark name or an object with a \"name\"");
  }
  const auto kind = benchmark_from_name(name);
  if (!kind) throw ConfigError(path, "unknown benchmark '" + name + "'");
  entry.kind = *kind;
  if (v.is_object()) {
    for (const auto &[key, value] : v.items()) {
      const std::string p = path + "/" + key;
      if (key == "name") continue;
      if (key == "gates") {
        entry.params.gates = count_field(value, p);
      } else if (key == "f") {
        entry.params.two_qubit_fraction = fraction_field(value, p);
      } else if (key == "depth_factor") {
        entry.params.depth_factor = count_field(value, p);
      } else {
        throw ConfigError(p, "unknown benchmark parameter");
      }
    }
  }
  if (entry.kind == BenchmarkKind::RandomQgf && !(v.is_object() && v.contains("gates"))) {
    throw ConfigError(path + "/gates", "qgf benchmarks require a gate count");
  }
  return entry;
}

void apply_defaults(ExperimentConfig &cfg, bool has_cores, bool has_capacity, bool has_qubits) {
  switch (cfg.mode) {
    case ScalingMode::Virtual:
      if (!has_cores) cfg.cores = {6};
      if (!has_capacity) cfg.capacity = 6;
      if (!has_qubits) cfg.qubits = {18, 24, 30, 36};
      break;
    case ScalingMode::Weak:
    case ScalingMode::BoundsSweep:
      if (!has_qubits) cfg.qubits = {60};
      if (!has_cores) cfg.cores = {2, 3, 4, 5, 6, 10};
      break;
    case ScalingMode::Strong:
      if (!has_capacity) cfg.capacity = 10;
      if (!has_cores) cfg.cores = {2, 4, 6, 8, 10, 12};
      break;
  }
  if (cfg.algorithms.empty()) cfg.algorithms = {Algorithm::Naive, Algorithm::FgpRoee, Algorithm::Hqa};
  if (cfg.seeds.empty()) cfg.seeds = {1};
}

void validate(const ExperimentConfig &cfg) {
  if (cfg.benchmarks.empty()) throw ConfigError("/benchmarks", "at least one benchmark is required");
  switch (cfg.mode) {
    case ScalingMode::Virtual:
      if (cfg.cores.size() != 1) throw ConfigError("/cores", "virtual scaling uses a single core count");
      for (std::size_t i = 0; i < cfg.qubits.size(); ++i) {
        if (cfg.qubits[i] > cfg.cores[0] * cfg.capacity) {
          throw ConfigError("/qubits/" + std::to_string(i), "circuit does not fit the architecture");
        }
      }
      break;
    case ScalingMode::Weak:
    case ScalingMode::BoundsSweep:
      if (cfg.qubits.size() != 1) throw ConfigError("/qubits", "weak scaling uses a single qubit count");
      for (std::size_t i = 0; i < cfg.cores.size(); ++i) {
        if (cfg.qubits[0] % cfg.cores[i] != 0) {
          throw ConfigError("/cores/" + std::to_string(i), "core count must divide the qubit count");
        }
      }
      break;
    case ScalingMode::Strong:
      if (cfg.capacity == 0) throw ConfigError("/capacity", "must be positive");
      break;
  }
  if (cfg.mode == ScalingMode::BoundsSweep) {
    for (std::size_t i = 0; i < cfg.benchmarks.size(); ++i) {
      if (cfg.benchmarks[i].kind != BenchmarkKind::RandomQgf) {
        throw ConfigError("/benchmarks/" + std::to_string(i), "bounds-sweep only accepts qgf benchmarks");
      }
    }
  }
}

std::string format_real(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

ExperimentConfig parse_experiment_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error &e) {
    throw ConfigError("/", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("/", "expected an object");

  ExperimentConfig cfg;
  bool has_cores = false, has_capacity = false, has_qubits = false;
  bool has_mode = false;
  for (const auto &[key, value] : doc.items()) {
    const std::string path = "/" + key;
    if (key == "mode") {
      has_mode = true;
      const std::string m = value.is_string() ? value.get<std::string>() : "";
      if (m == "virtual") cfg.mode = ScalingMode::Virtual;
      else if (m == "weak") cfg.mode = ScalingMode::Weak;
      else if (m == "strong") cfg.mode = ScalingMode::Strong;
      else if (m == "bounds-sweep") cfg.mode = ScalingMode::BoundsSweep;
      else throw ConfigError(path, "expected one of virtual, weak, strong, bounds-sweep");
    } else if (key == "benchmarks") {
      if (!value.is_array()) throw ConfigError(path, "expected an array");
      for (std::size_t i = 0; i < value.size(); ++i) {
        cfg.benchmarks.push_back(parse_benchmark(value[i], path + "/" + std::to_string(i)));
      }
    } else if (key == "cores") {
      cfg.cores = count_list(value, path, 1);
      has_cores = true;
    } else if (key == "capacity") {
      cfg.capacity = count_field(value, path, 1);
      has_capacity = true;
    } else if (key == "qubits") {
      cfg.qubits = count_list(value, path, 2);
      has_qubits = true;
    } else if (key == "algorithms") {
      if (!value.is_array() || value.empty()) throw ConfigError(path, "expected a non-empty array");
      for (std::size_t i = 0; i < value.size(); ++i) {
        const std::string p = path + "/" + std::to_string(i);
        const auto algo = value[i].is_string() ? algorithm_from_name(value[i].get<std::string>()) : std::nullopt;
        if (!algo) throw ConfigError(p, "unknown algorithm");
        cfg.algorithms.push_back(*algo);
      }
    } else if (key == "seeds") {
      if (!value.is_array() || value.empty()) throw ConfigError(path, "expected a non-empty array");
      for (std::size_t i = 0; i < value.size(); ++i) {
        cfg.seeds.push_back(count_field(value[i], path + "/" + std::to_string(i)));
      }
    } else if (key == "sigma") {
      cfg.lookahead = count_field(value, path);
    } else if (key == "timing") {
      if (!value.is_boolean()) throw ConfigError(path, "expected true or false");
      cfg.timing = value.get<bool>();
    } else if (key == "threads") {
      cfg.threads = count_field(value, path, 1);
    } else if (key == "output") {
      if (!value.is_string()) throw ConfigError(path, "expected a path string");
      cfg.output = value.get<std::string>();
    } else {
      throw ConfigError(path, "unknown field");
    }
  }
  if (!has_mode) throw ConfigError("/mode", "missing required field");
  apply_defaults(cfg, has_cores, has_capacity, has_qubits);
  validate(cfg);
  return cfg;
}

std::vector<ExperimentPoint> expand_points(const ExperimentConfig &cfg) {
  std::vector<ExperimentPoint> points;
  switch (cfg.mode) {
    case ScalingMode::Virtual:
      for (std::size_t q : cfg.qubits) points.push_back({q, Architecture{cfg.cores.at(0), cfg.capacity}});
      break;
    case ScalingMode::Weak:
    case ScalingMode::BoundsSweep:
      for (std::size_t n : cfg.cores) points.push_back({cfg.qubits.at(0), Architecture{n, cfg.qubits.at(0) / n}});
      break;
    case ScalingMode::Strong:
      for (std::size_t n : cfg.cores) points.push_back({n * cfg.capacity, Architecture{n, cfg.capacity}});
      break;
  }
  return points;
}

std::vector<ExperimentRow> run_experiment(const ExperimentConfig &cfg) {
  const std::vector<ExperimentPoint> points = expand_points(cfg);
  const std::size_t n_algos = cfg.algorithms.size();
  const std::size_t n_seeds = cfg.seeds.size();

  // One task per (benchmark, point, seed): the circuit is generated and
  // sliced once and shared by every algorithm.
  struct Task {
    std::size_t bench, point, seed;
  };
  std::vector<Task> tasks;
  for (std::size_t b = 0; b < cfg.benchmarks.size(); ++b) {
    for (std::size_t p = 0; p < points.size(); ++p) {
      for (std::size_t s = 0; s < n_seeds; ++s) tasks.push_back({b, p, s});
    }
  }

  std::vector<ExperimentRow> rows(tasks.size() * n_algos);
  auto row_index = [&](const Task &t, std::size_t a) {
    return ((t.bench * points.size() + t.point) * n_algos + a) * n_seeds + t.seed;
  };

  auto run_task = [&](const Task &task) {
    const BenchmarkEntry &bench = cfg.benchmarks[task.bench];
    const ExperimentPoint &point = points[task.point];
    const Seed seed = cfg.seeds[task.seed];
    const Circuit circuit = make_benchmark(bench.kind, point.q, seed, bench.params);
    const TimeslicedCircuit tsc = fit_to_architecture(slice_circuit(circuit), point.arch);

    std::optional<double> lower, upper;
    if (bench.kind == BenchmarkKind::RandomQgf && point.q % point.arch.n_cores == 0) {
      lower = comm_lower_bound(point.q, bench.params.gates, bench.params.two_qubit_fraction, point.arch.n_cores);
      upper = comm_upper_bound(point.q, bench.params.gates, bench.params.two_qubit_fraction, point.arch.n_cores);
    }
    for (std::size_t a = 0; a < n_algos; ++a) {
      MappingResult result;
      try {
        result = run_mapper(cfg.algorithms[a], tsc, point.arch, seed, cfg.lookahead);
      } catch (const MappingError &e) {
        throw MappingError(bench.label() + " on " + std::to_string(point.arch.n_cores) + "x" +
                           std::to_string(point.arch.capacity) + ": " + e.what());
      }
      ExperimentRow &row = rows[row_index(task, a)];
      row.mode = cfg.mode;
      row.benchmark = bench.label();
      row.q = point.q;
      row.n_cores = point.arch.n_cores;
      row.capacity = point.arch.capacity;
      row.algorithm = std::string(algorithm_name(cfg.algorithms[a]));
      row.seed = seed;
      row.comms = result.nonlocal_comms;
      row.lower_bound = lower;
      row.upper_bound = upper;
      if (cfg.timing) row.wall_time_s = result.wall_time_s;
      row.repairs = result.repairs;
    }
  };

  const std::size_t workers = std::max<std::size_t>(1, std::min(cfg.threads, tasks.size()));
  if (workers == 1) {
    for (const Task &t : tasks) run_task(t);
    return rows;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        try {
          run_task(tasks[i]);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto &t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string format_experiment_csv(const std::vector<ExperimentRow> &rows) {
  std::ostringstream out;
  out << kExperimentCsvHeader << '\n';
  for (const ExperimentRow &r : rows) {
    out << scaling_mode_name(r.mode) << ',' << r.benchmark << ',' << r.q << ',' << r.n_cores << ','
        << r.capacity << ',' << r.algorithm << ',' << r.seed << ',' << r.comms << ','
        << (r.lower_bound ? format_real(*r.lower_bound) : "") << ','
        << (r.upper_bound ? format_real(*r.upper_bound) : "") << ','
        << (r.wall_time_s ? format_real(*r.wall_time_s) : "") << ',' << r.repairs << '\n';
  }
  return out.str();
}

}  // namespace qcmap
