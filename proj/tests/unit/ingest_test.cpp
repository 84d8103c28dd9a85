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

#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <string>

#include "qcmap/benchgen.hpp"
#include "qcmap/ingest.hpp"

namespace qcmap {
namespace {

using K = GateKind;

Circuit parse_ok(std::string_view src) {
  QasmParseResult r = parse_qasm(src);
  EXPECT_TRUE(r.ok()) << (r.diagnostics.empty() ? "" : r.diagnostics.front().to_string());
  return r.ok() ? *r.circuit : Circuit();
}

const ParseDiagnostic *first_error(const QasmParseResult &r) {
  for (const auto &d : r.diagnostics) {
    if (d.severity == Severity::Error) return &d;
  }
  return nullptr;
}

// Random circuit over every supported kind, with parameters and barriers.
Circuit random_full_circuit(std::size_t q, std::size_t g, std::mt19937_64 &rng) {
  Circuit c(q);
  std::uniform_int_distribution<Qubit> pick(0, q - 1);
  std::uniform_real_distribution<double> angle(-7.0, 7.0);
  for (std::size_t i = 0; i < g; ++i) {
    if (rng() % 13 == 0) c.add_barrier();
    const auto kind = static_cast<K>(rng() % (static_cast<int>(K::CU1) + 1));
    std::optional<double> param;
    if (gate_takes_param(kind)) param = angle(rng);
    const Qubit a = pick(rng);
    if (gate_arity(kind) == 2) {
      Qubit b = pick(rng);
      while (b == a) b = pick(rng);
      c.add(Gate::pair(kind, a, b, param));
    } else {
      c.add(Gate::single(kind, a, param));
    }
  }
  return c;
}

TEST(QasmTest, MinimalProgram) {
  const Circuit c = parse_ok("OPENQASM 2.0; qreg q[2]; cx q[0],q[1];");
  EXPECT_EQ(c.num_qubits(), 2u);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.gates()[0], Gate::pair(K::CX, 0, 1));
}

TEST(QasmTest, ToffoliExpandsToSixCx) {
  const Circuit c = parse_ok("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[3];\nccx q[0],q[1],q[2];\n");
  EXPECT_EQ(c.size(), 15u);
  EXPECT_EQ(c.two_qubit_gate_count(), 6u);
  for (const Gate &g : c.gates()) {
    for (Qubit x : g.operands()) EXPECT_LT(x, 3u);
  }
}

TEST(QasmTest, IndexOutOfRangeReportsLine) {
  const QasmParseResult r = parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncx q[0],q[5];\n");
  EXPECT_FALSE(r.ok());
  const ParseDiagnostic *d = first_error(r);
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->line, 3u);
  EXPECT_NE(d->message.find("index out of range"), std::string::npos);
}

TEST(QasmTest, ErrorKinds) {
  struct Case {
    const char *source;
    std::size_t line;
    const char *needle;
  };
  const Case cases[] = {
      {"OPENQASM 2.0;\nqreg q[2];\nfoo q[0];\n", 3, "unknown gate"},
      {"OPENQASM 2.0;\nqreg q[3];\ncx q[0];\n", 3, "expects 2"},
      {"OPENQASM 3.0;\nqreg q[1];\n", 1, "malformed header"},
      {"qreg q[1];\nh q[0];\n", 1, "malformed header"},
      {"OPENQASM 2.0;\nqreg q[2];\ncx q[1],q[1];\n", 3, "repeats a qubit"},
      {"OPENQASM 2.0;\nqreg q[2];\nrz q[0];\n", 3, "param"},
      {"OPENQASM 2.0;\nqreg q[2];\nh r[0];\n", 3, "register"},
      {"OPENQASM 2.0;\nqreg q[2];\nqreg q[3];\n", 3, "q"},
      {"OPENQASM 2.0;\nqreg q[2];\nh q[0]\nh q[1];\n", 4, ";"},
  };
  for (const Case &c : cases) {
    const QasmParseResult r = parse_qasm(c.source);
    EXPECT_FALSE(r.ok()) << c.source;
    const ParseDiagnostic *d = first_error(r);
    ASSERT_NE(d, nullptr) << c.source;
    EXPECT_EQ(d->line, c.line) << c.source << d->to_string();
    EXPECT_NE(d->message.find(c.needle), std::string::npos) << d->to_string();
    EXPECT_GE(d->column, 1u);
  }
}

TEST(QasmTest, ErrorsAreAllOrNothingAndRecover) {
  const QasmParseResult r = parse_qasm("OPENQASM 2.0;\nqreg q[2];\nfoo q[0];\nh q[0];\nbar q[1];\n");
  EXPECT_FALSE(r.circuit.has_value());
  std::size_t errors = 0;
  for (const auto &d : r.diagnostics) errors += d.severity == Severity::Error;
  EXPECT_EQ(errors, 2u);
}

TEST(QasmTest, MeasureIsIgnoredWithWarning) {
  const QasmParseResult r = parse_qasm("OPENQASM 2.0;\nqreg q[1];\ncreg c[1];\nh q[0];\nmeasure q[0] -> c[0];\n");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r.circuit->size(), 1u);
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].severity, Severity::Warning);
  EXPECT_EQ(r.diagnostics[0].line, 5u);
}

TEST(QasmTest, RegistersFlattenInDeclarationOrder) {
  const Circuit c = parse_ok("OPENQASM 2.0;\nqreg a[2];\nqreg b[3];\ncx a[1],b[2];\n");
  EXPECT_EQ(c.num_qubits(), 5u);
  EXPECT_EQ(c.gates()[0], Gate::pair(K::CX, 1, 4));
}

TEST(QasmTest, BroadcastOverRegisters) {
  const Circuit c = parse_ok("OPENQASM 2.0;\nqreg q[3];\nqreg r[3];\nh q;\ncx q,r;\n");
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(c.gates()[2], Gate::single(K::H, 2));
  EXPECT_EQ(c.gates()[4], Gate::pair(K::CX, 1, 4));
}

TEST(QasmTest, ParameterExpressions) {
  const Circuit c = parse_ok(
      "OPENQASM 2.0;\nqreg q[1];\nrz(pi/2) q[0];\nrz(-pi/4) q[0];\nrz(2*pi) q[0];\nrz(0.25) q[0];\n"
      "rz(-(pi/2)+pi/4) q[0];\nrz(1e-3) q[0];\n");
  const double pi = std::numbers::pi;
  const double expected[] = {pi / 2, -pi / 4, 2 * pi, 0.25, -pi / 4, 1e-3};
  ASSERT_EQ(c.size(), 6u);
  for (std::size_t i = 0; i < 6; ++i) EXPECT_DOUBLE_EQ(*c.gates()[i].param, expected[i]);
}

TEST(QasmTest, CrlfAndComments) {
  const Circuit c = parse_ok("// lead\r\nOPENQASM 2.0; // header\r\nqreg q[2];\r\n// cx q[0],q[1];\r\nh q[1];\r\n");
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.gates()[0], Gate::single(K::H, 1));
}

TEST(QasmTest, BarrierRecorded) {
  const Circuit c = parse_ok("OPENQASM 2.0;\nqreg q[2];\nh q[0];\nbarrier q;\nh q[1];\n");
  EXPECT_EQ(c.barriers(), (std::vector<std::size_t>{1}));
}

TEST(QasmTest, RoundTripRandomCircuits) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const Circuit c = random_full_circuit(2 + rng() % 8, rng() % 50, rng);
    const QasmParseResult r = parse_qasm(write_qasm(c));
    ASSERT_TRUE(r.ok()) << write_qasm(c);
    EXPECT_EQ(*r.circuit, c);
  }
}

TEST(QasmTest, WriterIsCanonical) {
  const Circuit c = qft(3);
  const std::string text = write_qasm(c);
  EXPECT_EQ(write_qasm(parse_ok(text)), text);
  EXPECT_EQ(text.rfind("OPENQASM 2.0;\n", 0), 0u);
}

TEST(QasmTest, NeverThrowsOnGarbage) {
  std::mt19937_64 rng(99);
  const std::string alphabet = "OPENQASM 2.0;qreg[]0123456789,->cxh()pi*/+- \n\t\"{}#@";
  for (int trial = 0; trial < 2000; ++trial) {
    std::string s;
    const std::size_t n = rng() % 120;
    for (std::size_t i = 0; i < n; ++i) {
      s.push_back(trial % 2 ? static_cast<char>(rng() & 0xff) : alphabet[rng() % alphabet.size()]);
    }
    QasmParseResult r;
    ASSERT_NO_THROW(r = parse_qasm(s));
    if (!r.ok()) EXPECT_NE(first_error(r), nullptr);
  }
}

TEST(JsonTest, EmptyCircuit) {
  const Circuit c = parse_json(R"({"num_qubits":1,"gates":[]})");
  EXPECT_EQ(c.num_qubits(), 1u);
  EXPECT_TRUE(c.empty());
}

TEST(JsonTest, DuplicateQubitIsSchemaError) {
  try {
    parse_json(R"({"gates":[{"kind":"cx","qubits":[0,0]}]})");
    FAIL() << "expected JsonSchemaError";
  } catch (const JsonSchemaError &e) {
    EXPECT_EQ(e.path(), "/gates/0/qubits");
    EXPECT_NE(std::string(e.what()).find("duplicate qubit"), std::string::npos);
  }
}

TEST(JsonTest, SchemaViolationsCarryPaths) {
  const std::pair<const char *, const char *> cases[] = {
      {R"([1,2])", ""},
      {R"({"num_qubits":2})", "/gates"},
      {R"({"gates":{}})", "/gates"},
      {R"({"gates":[{"qubits":[0]}]})", "/gates/0/kind"},
      {R"({"gates":[{"kind":"zz","qubits":[0]}]})", "/gates/0/kind"},
      {R"({"gates":[{"kind":"h","qubits":[0,1]}]})", "/gates/0/qubits"},
      {R"({"gates":[{"kind":"h","qubits":[-1]}]})", "/gates/0/qubits/0"},
      {R"({"gates":[{"kind":"rz","qubits":[0]}]})", "/gates/0/param"},
      {R"({"gates":[{"kind":"h","qubits":[0],"param":1}]})", "/gates/0/param"},
      {R"({"num_qubits":2,"gates":[{"kind":"h","qubits":[3]}]})", "/gates/0/qubits"},
      {R"({"num_qubits":-2,"gates":[]})", "/num_qubits"},
      {R"({"gates":[], "barriers":[1]})", "/barriers/0"},
  };
  for (const auto &[text, path] : cases) {
    try {
      parse_json(text);
      ADD_FAILURE() << "accepted " << text;
    } catch (const JsonSchemaError &e) {
      EXPECT_EQ(e.path(), path) << text << " -> " << e.what();
    }
  }
}

TEST(JsonTest, KindsAreCaseInsensitiveAndQubitsInferred) {
  const Circuit c = parse_json(R"({"gates":[{"kind":"CX","qubits":[0,3]},{"kind":"Rz","qubits":[1],"param":0.5}]})");
  EXPECT_EQ(c.num_qubits(), 4u);
  EXPECT_EQ(c.gates()[0], Gate::pair(K::CX, 0, 3));
  EXPECT_EQ(c.gates()[1], Gate::single(K::RZ, 1, 0.5));
}

TEST(JsonTest, RoundTripRandomCircuits) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const Circuit c = random_full_circuit(2 + rng() % 8, rng() % 50, rng);
    EXPECT_EQ(parse_json(write_json(c)), c);
  }
}

TEST(JsonTest, WriterIsDeterministic) {
  const Circuit c = quantum_volume(4, 2);
  EXPECT_EQ(write_json(c), write_json(parse_json(write_json(c))));
}

TEST(CsvTest, DirectSerialization) {
  AssignmentSequence seq;
  seq.per_slice.push_back(Assignment{{0, 1}});
  EXPECT_EQ(write_assignments_csv(seq), "slice,qubit,core\n0,0,0\n0,1,1\n");
  EXPECT_EQ(write_assignments_csv(AssignmentSequence{}), "slice,qubit,core\n");
}

TEST(CsvTest, InitialRowsComeFirst) {
  AssignmentSequence seq;
  seq.initial = Assignment{{1, 0}};
  seq.per_slice.push_back(Assignment{{0, 0}});
  EXPECT_EQ(write_assignments_csv(seq), "slice,qubit,core\ninit,0,1\ninit,1,0\n0,0,0\n0,1,0\n");
}

TEST(CsvTest, RoundTrip) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    AssignmentSequence seq;
    const std::size_t width = 1 + rng() % 6;
    if (trial % 2) {
      seq.initial.emplace();
      for (std::size_t q = 0; q < width; ++q) seq.initial->core_of.push_back(rng() % 4);
    }
    for (std::size_t t = rng() % 5; t > 0; --t) {
      Assignment a;
      for (std::size_t q = 0; q < width; ++q) a.core_of.push_back(rng() % 4);
      seq.per_slice.push_back(a);
    }
    EXPECT_EQ(read_assignments_csv(write_assignments_csv(seq)), seq);
  }
}

TEST(CsvTest, StrictReader) {
  const char *bad[] = {
      "",
      "slice,core,qubit\n",
      "slice,qubit,core\n0,0\n",
      "slice,qubit,core\n0,1,0\n",
      "slice,qubit,core\n1,0,0\n",
      "slice,qubit,core\n0,0,0\n0,1,0\n1,0,0\n",
      "slice,qubit,core\n0,0,0x\n",
      "slice,qubit,core\n0,0,-1\n",
      "slice,qubit,core\n0,0,0\ninit,0,0\n",
  };
  for (const char *text : bad) EXPECT_THROW(read_assignments_csv(text), std::invalid_argument) << text;
  EXPECT_NO_THROW(read_assignments_csv("slice,qubit,core\r\n0,0,1\r\n"));
}

TEST(LoadTest, DispatchOnExtension) {
  const auto dir = std::filesystem::temp_directory_path() / "qcmap_ingest_test";
  std::filesystem::create_directories(dir);
  const Circuit c = qft(3);
  {
    std::ofstream(dir / "c.json") << write_json(c);
    std::ofstream(dir / "c.qasm") << write_qasm(c);
    std::ofstream(dir / "bad.qasm") << "OPENQASM 2.0;\nqreg q[1];\ncx q[0],q[1];\n";
  }
  EXPECT_EQ(load_circuit(dir / "c.json"), c);
  EXPECT_EQ(load_circuit(dir / "c.qasm"), c);
  try {
    load_circuit(dir / "bad.qasm");
    FAIL() << "expected CircuitLoadError";
  } catch (const CircuitLoadError &e) {
    ASSERT_FALSE(e.diagnostics().empty());
    EXPECT_EQ(e.diagnostics()[0].line, 3u);
  }
  EXPECT_THROW(load_circuit(dir / "missing.qasm"), CircuitLoadError);
  std::filesystem::remove_all(dir);
}

TEST(GoldenTest, AllFilesParseAndRoundTrip) {
  std::size_t count = 0;
  for (const auto &entry : std::filesystem::directory_iterator(QCMAP_TEST_DATA_DIR "/qasm")) {
    if (entry.path().extension() != ".qasm") continue;
    ++count;
    std::ifstream in(entry.path(), std::ios::binary);
    const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const QasmParseResult r = parse_qasm(text);
    ASSERT_TRUE(r.ok()) << entry.path();
    const QasmParseResult again = parse_qasm(write_qasm(*r.circuit));
    ASSERT_TRUE(again.ok()) << entry.path();
    EXPECT_EQ(*again.circuit, *r.circuit) << entry.path();
    EXPECT_EQ(parse_json(write_json(*r.circuit)), *r.circuit) << entry.path();
  }
  EXPECT_EQ(count, 50u);
}

}  // namespace
}  // namespace qcmap
