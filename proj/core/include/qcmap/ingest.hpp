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
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qcmap/architecture.hpp"
#include "qcmap/circuit.hpp"

namespace qcmap {

enum class Severity { Error, Warning };

struct ParseDiagnostic {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based
  std::string message;
  Severity severity = Severity::Error;

  std::string to_string() const;
};

struct QasmParseResult {
  std::optional<Circuit> circuit;
  std::vector<ParseDiagnostic> diagnostics;

  bool ok() const { return circuit.has_value(); }
};

/// Parses the supported OpenQASM 2 subset. Never throws on malformed input;
/// any error-severity diagnostic leaves `circuit` empty.
QasmParseResult parse_qasm(std::string_view source);

std::string write_qasm(const Circuit &circuit);

/// Raised for JSON schema violations; `path()` is a JSON pointer to the
/// offending value.
class JsonSchemaError : public std::runtime_error {
 public:
  JsonSchemaError(std::string path, const std::string &message);
  const std::string &path() const { return path_; }

 private:
  std::string path_;
};

Circuit parse_json(std::string_view source);
std::string write_json(const Circuit &circuit);

/// CSV with header `slice,qubit,core`, rows sorted by (slice, qubit). The
/// initial placement, when present, comes first with slice `init`.
std::string write_assignments_csv(const AssignmentSequence &seq);
/// Inverse of write_assignments_csv. Throws std::invalid_argument with the
/// offending line number on malformed input.
AssignmentSequence read_assignments_csv(std::string_view source);

/// Thrown by load_circuit when a file fails to parse.
class CircuitLoadError : public std::runtime_error {
 public:
  CircuitLoadError(const std::string &message, std::vector<ParseDiagnostic> diagnostics = {});
  const std::vector<ParseDiagnostic> &diagnostics() const { return diagnostics_; }

 private:
  std::vector<ParseDiagnostic> diagnostics_;
};

/// Reads a `.qasm` or `.json` circuit file, dispatching on the extension.
Circuit load_circuit(const std::filesystem::path &path);

}  // namespace qcmap
