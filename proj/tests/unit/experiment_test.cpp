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

#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "qcmap/experiment.hpp"

namespace qcmap {
namespace {

ExperimentConfig small_config() {
  return parse_experiment_config(R"({
    "mode": "strong",
    "benchmarks": ["qft", {"name": "qgf", "gates": 40, "f": 0.6}],
    "capacity": 4,
    "cores": [2],
    "algorithms": ["naive", "hqa"],
    "seeds": [1, 2, 3],
    "timing": false
  })");
}

TEST(ConfigTest, ParsesFields) {
  const ExperimentConfig cfg = small_config();
  EXPECT_EQ(cfg.mode, ScalingMode::Strong);
  ASSERT_EQ(cfg.benchmarks.size(), 2u);
  EXPECT_EQ(cfg.benchmarks[0].kind, BenchmarkKind::Qft);
  EXPECT_EQ(cfg.benchmarks[1].kind, BenchmarkKind::RandomQgf);
  EXPECT_EQ(cfg.benchmarks[1].params.gates, 40u);
  EXPECT_DOUBLE_EQ(cfg.benchmarks[1].params.two_qubit_fraction, 0.6);
  EXPECT_EQ(cfg.capacity, 4u);
  EXPECT_EQ(cfg.algorithms, (std::vector<Algorithm>{Algorithm::Naive, Algorithm::Hqa}));
  EXPECT_EQ(cfg.seeds, (std::vector<Seed>{1, 2, 3}));
  EXPECT_FALSE(cfg.timing);
}

TEST(ConfigTest, Defaults) {
  const ExperimentConfig cfg = parse_experiment_config(R"({"mode":"strong","benchmarks":["qft"]})");
  EXPECT_EQ(cfg.capacity, 10u);
  EXPECT_FALSE(cfg.cores.empty());
  EXPECT_EQ(cfg.algorithms.size(), 3u);
  EXPECT_EQ(cfg.seeds, (std::vector<Seed>{1}));
  EXPECT_EQ(cfg.lookahead, kDefaultLookahead);
  EXPECT_TRUE(cfg.timing);
  EXPECT_EQ(parse_experiment_config(R"({"mode":"weak","benchmarks":["qv"],"sigma":3})").lookahead, 3u);
}

TEST(ConfigTest, ErrorsCarryPaths) {
  const std::pair<const char *, const char *> cases[] = {
      {"{", "/"},
      {"[]", "/"},
      {R"({"benchmarks":["qft"]})", "/mode"},
      {R"({"mode":"diagonal","benchmarks":["qft"]})", "/mode"},
      {R"({"mode":"strong"})", "/benchmarks"},
      {R"({"mode":"strong","benchmarks":["fft"]})", "/benchmarks/0"},
      {R"({"mode":"strong","benchmarks":["qgf"]})", "/benchmarks/0/gates"},
      {R"({"mode":"strong","benchmarks":[{"name":"qgf","gates":5,"f":2}]})", "/benchmarks/0/f"},
      {R"({"mode":"strong","benchmarks":[{"name":"qft","colour":1}]})", "/benchmarks/0/colour"},
      {R"({"mode":"strong","benchmarks":["qft"],"algorithms":["magic"]})", "/algorithms/0"},
      {R"({"mode":"strong","benchmarks":["qft"],"seeds":[]})", "/seeds"},
      {R"({"mode":"strong","benchmarks":["qft"],"capacity":0})", "/capacity"},
      {R"({"mode":"strong","benchmarks":["qft"],"timing":"no"})", "/timing"},
      {R"({"mode":"strong","benchmarks":["qft"],"extra":1})", "/extra"},
      {R"({"mode":"weak","benchmarks":["qft"],"qubits":[12],"cores":[5]})", "/cores/0"},
      {R"({"mode":"virtual","benchmarks":["qft"],"cores":[2],"capacity":3,"qubits":[7]})", "/qubits/0"},
      {R"({"mode":"bounds-sweep","benchmarks":["qft"]})", "/benchmarks/0"},
  };
  for (const auto &[text, path] : cases) {
    try {
      parse_experiment_config(text);
      ADD_FAILURE() << "accepted " << text;
    } catch (const ConfigError &e) {
      EXPECT_EQ(e.path(), path) << text << " -> " << e.what();
    }
  }
}

TEST(ExpandTest, ModeGrids) {
  ExperimentConfig strong = parse_experiment_config(R"({"mode":"strong","benchmarks":["qft"],"capacity":20,"cores":[1,2,3]})");
  const auto sp = expand_points(strong);
  ASSERT_EQ(sp.size(), 3u);
  EXPECT_EQ(sp[0].q, 20u);
  EXPECT_EQ(sp[1].q, 40u);
  EXPECT_EQ(sp[2].q, 60u);
  EXPECT_EQ(sp[2].arch, (Architecture{3, 20}));

  const auto wp = expand_points(parse_experiment_config(R"({"mode":"weak","benchmarks":["qft"],"qubits":[12],"cores":[2,3,4]})"));
  ASSERT_EQ(wp.size(), 3u);
  EXPECT_EQ(wp[2].arch, (Architecture{4, 3}));
  EXPECT_EQ(wp[2].q, 12u);

  const auto vp = expand_points(
      parse_experiment_config(R"({"mode":"virtual","benchmarks":["qft"],"cores":[3],"capacity":5,"qubits":[6,15]})"));
  ASSERT_EQ(vp.size(), 2u);
  EXPECT_EQ(vp[0].arch, (Architecture{3, 5}));
  EXPECT_EQ(vp[1].q, 15u);
}

TEST(RunTest, RowCountAndOrder) {
  ExperimentConfig cfg = small_config();
  cfg.benchmarks.resize(1);
  const auto rows = run_experiment(cfg);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0].algorithm, "naive");
  EXPECT_EQ(rows[0].seed, 1u);
  EXPECT_EQ(rows[2].seed, 3u);
  EXPECT_EQ(rows[3].algorithm, "hqa");
  for (const auto &r : rows) {
    EXPECT_EQ(r.q, 8u);
    EXPECT_EQ(r.n_cores, 2u);
    EXPECT_EQ(r.capacity, 4u);
    EXPECT_FALSE(r.wall_time_s.has_value());
    EXPECT_FALSE(r.lower_bound.has_value());
  }
}

TEST(RunTest, BoundsOnlyForQgf) {
  const auto rows = run_experiment(small_config());
  ASSERT_EQ(rows.size(), 12u);
  for (const auto &r : rows) {
    const bool qgf = r.benchmark.rfind("qgf", 0) == 0;
    EXPECT_EQ(r.lower_bound.has_value(), qgf) << r.benchmark;
    EXPECT_EQ(r.upper_bound.has_value(), qgf);
    if (qgf) EXPECT_DOUBLE_EQ(*r.upper_bound, 2 * *r.lower_bound);
  }
}

TEST(RunTest, CsvStableAcrossRunsAndThreads) {
  ExperimentConfig cfg = small_config();
  const std::string a = format_experiment_csv(run_experiment(cfg));
  cfg.threads = 3;
  const std::string b = format_experiment_csv(run_experiment(cfg));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind(std::string(kExperimentCsvHeader) + "\n", 0), 0u);
  std::istringstream in(a);
  std::string line;
  std::size_t lines = 0;
  while (std::getline(in, line)) {
    ++lines;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 11) << line;
  }
  EXPECT_EQ(lines, 13u);
}

TEST(RunTest, TimingFillsWallTime) {
  ExperimentConfig cfg = small_config();
  cfg.timing = true;
  for (const auto &r : run_experiment(cfg)) {
    ASSERT_TRUE(r.wall_time_s.has_value());
    EXPECT_GE(*r.wall_time_s, 0.0);
  }
}

TEST(BenchmarkEntryTest, Labels) {
  const ExperimentConfig cfg = small_config();
  EXPECT_EQ(cfg.benchmarks[0].label(), "qft");
  EXPECT_NE(cfg.benchmarks[1].label().find("qgf"), std::string::npos);
  EXPECT_EQ(scaling_mode_name(ScalingMode::Weak), "weak");
}

}  // namespace
}  // namespace qcmap
