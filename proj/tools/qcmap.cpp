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

// qcmap: command-line front end for benchmark generation, slicing, bounds
// sweeps, single mappings and experiment runs.
//
// Exit codes: 0 success, 1 usage error, 2 validation or parse error.

#include <charconv>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcmap/benchgen.hpp"
#include "qcmap/bounds.hpp"
#include "qcmap/experiment.hpp"
#include "qcmap/ingest.hpp"
#include "qcmap/mappers.hpp"

namespace {

using namespace qcmap;

constexpr int kUsageError = 1;
constexpr int kValidationError = 2;

// Usage problems detected after CLI11 parsing succeeded.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t parse_count(const std::string &text) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) throw UsageError("not a count: '" + text + "'");
  return v;
}

// "2..18", "2..12:2" or "2,4,6".
std::vector<std::size_t> parse_range(const std::string &text) {
  std::vector<std::size_t> out;
  if (const auto dots = text.find(".."); dots != std::string::npos) {
    std::string hi_text = text.substr(dots + 2);
    std::size_t step = 1;
    if (const auto colon = hi_text.find(':'); colon != std::string::npos) {
      step = parse_count(hi_text.substr(colon + 1));
      hi_text = hi_text.substr(0, colon);
    }
    const std::size_t lo = parse_count(text.substr(0, dots));
    const std::size_t hi = parse_count(hi_text);
    if (step == 0 || lo > hi) throw UsageError("empty range '" + text + "'");
    for (std::size_t v = lo; v <= hi; v += step) out.push_back(v);
  } else {
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_count(item));
  }
  if (out.empty()) throw UsageError("empty range '" + text + "'");
  return out;
}

void emit(const std::string &text, const std::string &path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct BenchOptions {
  std::string name;
  std::size_t q = 0;
  std::size_t gates = 0;
  double f = 0.5;
  std::size_t depth_factor = 2;
  std::size_t operand_bits = 0;

  void attach(CLI::App *cmd) {
    cmd->add_option("--bench", name, "qft | draper | cuccaro | random | qv | qgf");
    cmd->add_option("--q", q, "Number of qubits");
    cmd->add_option("--g", gates, "Gate count (qgf)");
    cmd->add_option("--f", f, "Two-qubit fraction (qgf) or pairing density (random)");
    cmd->add_option("--depth-factor", depth_factor, "Layers per qubit (random)");
    cmd->add_option("--n", operand_bits, "Operand bits (adders); overrides --q");
  }

  Circuit build(Seed seed) const {
    const auto kind = benchmark_from_name(name);
    if (!kind) throw UsageError("unknown benchmark '" + name + "'");
    if (operand_bits > 0) {
      if (*kind == BenchmarkKind::Cuccaro) return cuccaro_adder(operand_bits);
      if (*kind == BenchmarkKind::Draper) return draper_adder(operand_bits);
      throw UsageError("--n only applies to adders");
    }
    if (q == 0) throw UsageError("--q is required");
    if (*kind == BenchmarkKind::RandomQgf && gates == 0) throw UsageError("qgf needs --g");
    BenchmarkParams params;
    params.gates = gates;
    params.two_qubit_fraction = f;
    params.depth_factor = depth_factor;
    return make_benchmark(*kind, q, seed, params);
  }
};

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"qcmap: map quantum circuits onto multi-core architectures"};
  app.require_subcommand(1);

  Seed seed = 1;
  std::size_t sigma = kDefaultLookahead;
  std::string out_path;
  auto common = [&](CLI::App *cmd) {
    cmd->add_option("--out", out_path, "Output file (default stdout)");
  };

  // gen
  auto *gen = app.add_subcommand("gen", "Emit a benchmark circuit as QASM or JSON");
  BenchOptions gen_bench;
  std::string gen_format = "qasm";
  gen_bench.attach(gen);
  gen->get_option("--bench")->required();
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_option("--format", gen_format, "qasm | json")->check(CLI::IsMember({"qasm", "json"}));
  common(gen);

  // slice
  auto *slice = app.add_subcommand("slice", "Summarise the timeslices of a circuit");
  std::string slice_in;
  slice->add_option("--in", slice_in, "Circuit file (.qasm or .json)")->required();
  common(slice);

  // bounds
  auto *bounds = app.add_subcommand("bounds", "CSV sweep of the analytic communication bounds");
  std::size_t b_q = 0, b_g = 0, b_core_size = 0, b_gates_per_qubit = 20;
  double b_f = 0.5;
  std::string b_cores;
  bounds->add_option("--q", b_q, "Fixed qubit count (sweep over cores)");
  bounds->add_option("--g", b_g, "Gate count for a fixed qubit count");
  bounds->add_option("--f", b_f, "Two-qubit gate fraction")->required();
  bounds->add_option("--cores", b_cores, "Core counts, e.g. 2..18 or 2,4,8")->required();
  bounds->add_option("--core-size", b_core_size, "Qubits per core (sweep q = N * size)");
  bounds->add_option("--gates-per-qubit", b_gates_per_qubit, "g = this * q with --core-size");
  common(bounds);

  // map
  auto *map = app.add_subcommand("map", "Map one circuit with one algorithm");
  std::string map_in, map_algo = "hqa";
  BenchOptions map_bench;
  std::size_t map_cores = 0, map_capacity = 0;
  map->add_option("--in", map_in, "Circuit file (.qasm or .json)");
  map_bench.attach(map);
  map->add_option("--algo", map_algo, "naive | fgp-roee | hqa | hqa-noattr | hqa-random-init");
  map->add_option("--cores", map_cores, "Number of cores")->required();
  map->add_option("--capacity", map_capacity, "Qubits per core")->required();
  map->add_option("--seed", seed, "RNG seed");
  map->add_option("--sigma", sigma, "Look-ahead horizon in slices");
  common(map);

  // exp
  auto *exp = app.add_subcommand("exp", "Run an experiment config and write result rows as CSV");
  std::string exp_config;
  exp->add_option("--config", exp_config, "JSON experiment config")->required();
  exp->add_option("--seed", seed, "Replace the config's seed list with this single seed");
  exp->add_option("--sigma", sigma, "Override the config's look-ahead horizon");
  common(exp);

  // verify
  auto *verify = app.add_subcommand("verify", "Check an assignment CSV against a circuit");
  std::string v_in, v_csv;
  std::size_t v_cores = 0, v_capacity = 0;
  verify->add_option("--in", v_in, "Circuit file")->required();
  verify->add_option("--assignments", v_csv, "Assignment CSV")->required();
  verify->add_option("--cores", v_cores, "Number of cores")->required();
  verify->add_option("--capacity", v_capacity, "Qubits per core")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    std::cerr << app.help();
    return kUsageError;
  }

  try {
    if (gen->parsed()) {
      const Circuit c = gen_bench.build(seed);
      emit(gen_format == "json" ? write_json(c) : write_qasm(c), out_path);
    } else if (slice->parsed()) {
      const TimeslicedCircuit tsc = slice_circuit(load_circuit(slice_in));
      std::ostringstream out;
      out << "# qubits=" << tsc.num_qubits << " slices=" << tsc.num_slices() << " gates=" << tsc.num_gates()
          << '\n';
      out << "slice,gates,two_qubit_gates\n";
      for (const auto &s : tsc.slices) {
        std::size_t two = 0;
        for (const auto &g : s.gates) two += g.is_two_qubit();
        out << s.index << ',' << s.gates.size() << ',' << two << '\n';
      }
      emit(out.str(), out_path);
    } else if (bounds->parsed()) {
      const auto cores = parse_range(b_cores);
      if ((b_q == 0) == (b_core_size == 0)) throw UsageError("give exactly one of --q or --core-size");
      if (b_q != 0 && b_g == 0) throw UsageError("--q sweeps need --g");
      std::ostringstream out;
      out << "n_cores,q,g,f,lower_bound,upper_bound\n";
      out.precision(10);
      // Ranges skip core counts that do not divide q; a single count is
      // evaluated as given so its error surfaces.
      for (std::size_t n : cores) {
        const std::size_t q = b_q != 0 ? b_q : n * b_core_size;
        const std::size_t g = b_q != 0 ? b_g : b_gates_per_qubit * q;
        if (cores.size() > 1 && (n == 0 || q % n != 0)) {
          std::cerr << "skipping " << n << " cores: does not divide " << q << " qubits\n";
          continue;
        }
        out << n << ',' << q << ',' << g << ',' << b_f << ',' << comm_lower_bound(q, g, b_f, n) << ','
            << comm_upper_bound(q, g, b_f, n) << '\n';
      }
      emit(out.str(), out_path);
    } else if (map->parsed()) {
      if (map_in.empty() == map_bench.name.empty()) throw UsageError("give exactly one of --in or --bench");
      const auto algo = algorithm_from_name(map_algo);
      if (!algo) throw UsageError("unknown algorithm '" + map_algo + "'");
      const Circuit circuit = map_in.empty() ? map_bench.build(seed) : load_circuit(map_in);
      const Architecture arch{map_cores, map_capacity};
      const TimeslicedCircuit tsc = fit_to_architecture(slice_circuit(circuit), arch);
      const MappingResult result = run_mapper(*algo, tsc, arch, seed, sigma);
      std::cout << "algorithm=" << result.algorithm << " qubits=" << tsc.num_qubits
                << " slices=" << tsc.num_slices() << " comms=" << result.nonlocal_comms
                << " repairs=" << result.repairs << " wall_time_s=" << result.wall_time_s << '\n';
      if (!out_path.empty()) emit(write_assignments_csv(result.sequence), out_path);
    } else if (exp->parsed()) {
      ExperimentConfig cfg = parse_experiment_config(read_file(exp_config));
      if (exp->count("--seed")) cfg.seeds = {seed};
      if (exp->count("--sigma")) cfg.lookahead = sigma;
      const std::string csv = format_experiment_csv(run_experiment(cfg));
      emit(csv, !out_path.empty() ? out_path : cfg.output);
    } else if (verify->parsed()) {
      const Architecture arch{v_cores, v_capacity};
      const TimeslicedCircuit tsc = fit_to_architecture(slice_circuit(load_circuit(v_in)), arch);
      const AssignmentSequence seq = read_assignments_csv(read_file(v_csv));
      if (seq.size() != tsc.num_slices()) {
        std::cerr << "assignment has " << seq.size() << " slices, circuit has " << tsc.num_slices() << '\n';
        return kValidationError;
      }
      if (seq.initial && (seq.initial->num_qubits() != tsc.num_qubits || !is_valid(Timeslice{}, *seq.initial, arch))) {
        std::cerr << "initial placement: invalid assignment\n";
        return kValidationError;
      }
      for (std::size_t t = 0; t < seq.size(); ++t) {
        if (seq[t].num_qubits() != tsc.num_qubits || !is_valid(tsc.slices[t], seq[t], arch)) {
          std::cerr << "slice " << t << ": invalid assignment\n";
          return kValidationError;
        }
      }
      std::cout << "valid: " << seq.size() << " slices, comms=" << count_comms(seq) << '\n';
    }
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const CircuitLoadError &e) {
    std::cerr << e.what() << '\n';
    // The message already carries the first error.
    bool skipped = false;
    for (const auto &d : e.diagnostics()) {
      if (!skipped && d.severity == Severity::Error) {
        skipped = true;
        continue;
      }
      std::cerr << "  " << d.to_string() << '\n';
    }
    return kValidationError;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kValidationError;
  }
  return 0;
}
