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

#include "qcmap/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"

namespace qcmap {

std::string ParseDiagnostic::to_string() const {
  std::ostringstream out;
  out << line << ':' << column << ": " << (severity == Severity::Error ? "error" : "warning")
      << ": " << message;
  return out.str();
}

// ---------------------------------------------------------------------------
// OpenQASM 2 lexer

namespace {

enum class Tok { Ident, Number, String, Symbol, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;
};

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool is_ident_char(char c) { return is_ident_start(c) || (c >= '0' && c <= '9'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

class Lexer {
 public:
  Lexer(std::string_view src, std::vector<ParseDiagnostic> &diags) : src_(src), diags_(diags) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    std::size_t end_line = 1, end_col = 1;
    bool in_garbage = false;
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        advance();
        in_garbage = false;
        continue;
      }
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f' || c == '\v') {
        advance();
        in_garbage = false;
        continue;
      }
      if (c == '/' && peek(1) == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
        continue;
      }
      end_line = line_;
      end_col = col_;
      Token tok;
      tok.line = line_;
      tok.column = col_;
      if (is_ident_start(c)) {
        tok.kind = Tok::Ident;
        while (pos_ < src_.size() && is_ident_char(src_[pos_])) tok.text += take();
      } else if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
        tok.kind = Tok::Number;
        lex_number(tok.text);
      } else if (c == '"') {
        tok.kind = Tok::String;
        advance();
        bool closed = false;
        while (pos_ < src_.size() && src_[pos_] != '\n') {
          if (src_[pos_] == '"') {
            advance();
            closed = true;
            break;
          }
          tok.text += take();
        }
        if (!closed) {
          diags_.push_back({tok.line, tok.column, "unterminated string literal", Severity::Error});
          in_garbage = false;
          continue;
        }
      } else if (c == '-' && peek(1) == '>') {
        tok.kind = Tok::Symbol;
        tok.text = "->";
        advance();
        advance();
      } else if (std::string_view(";,[](){}+-*/^").find(c) != std::string_view::npos) {
        tok.kind = Tok::Symbol;
        tok.text = std::string(1, take());
      } else {
        if (!in_garbage) {
          diags_.push_back({line_, col_, "unexpected character", Severity::Error});
        }
        in_garbage = true;
        advance();
        continue;
      }
      in_garbage = false;
      out.push_back(std::move(tok));
    }
    out.push_back(Token{Tok::End, "", end_line, end_col});
    return out;
  }

 private:
  char peek(std::size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
  }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  char take() {
    const char c = src_[pos_];
    advance();
    return c;
  }
  void lex_number(std::string &text) {
    while (pos_ < src_.size() && is_digit(src_[pos_])) text += take();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      text += take();
      while (pos_ < src_.size() && is_digit(src_[pos_])) text += take();
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      const char sign = peek(1);
      if (is_digit(sign) || ((sign == '+' || sign == '-') && is_digit(peek(2)))) {
        text += take();
        if (!is_digit(src_[pos_])) text += take();
        while (pos_ < src_.size() && is_digit(src_[pos_])) text += take();
      }
    }
  }

  std::string_view src_;
  std::vector<ParseDiagnostic> &diags_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

// ---------------------------------------------------------------------------
// OpenQASM 2 parser

struct StatementError {
  std::size_t line;
  std::size_t column;
  std::string message;
};

struct Register {
  std::size_t offset = 0;
  std::size_t size = 0;
};

// A gate application before register sizes are final.
struct PendingOp {
  enum class Kind { Gate, Toffoli, Barrier } kind = Kind::Gate;
  Gate gate;
  std::array<Qubit, 3> toffoli{};
};

// One argument of a gate statement: a single qubit or a whole register.
struct Operand {
  const Token *where = nullptr;
  std::vector<Qubit> qubits;
  bool is_register = false;
};

class QasmParser {
 public:
  QasmParser(std::vector<Token> tokens, std::vector<ParseDiagnostic> &diags)
      : toks_(std::move(tokens)), diags_(diags) {}

  std::optional<Circuit> run() {
    header();
    while (peek().kind != Tok::End) {
      try {
        statement();
      } catch (const StatementError &e) {
        error(e.line, e.column, e.message);
        synchronize();
      }
    }
    const bool failed = std::any_of(diags_.begin(), diags_.end(), [](const ParseDiagnostic &d) {
      return d.severity == Severity::Error;
    });
    if (failed) return std::nullopt;

    Circuit circuit(num_qubits_);
    for (const auto &op : ops_) {
      switch (op.kind) {
        case PendingOp::Kind::Gate:
          circuit.add(op.gate);
          break;
        case PendingOp::Kind::Toffoli:
          circuit.append_toffoli(op.toffoli[0], op.toffoli[1], op.toffoli[2]);
          break;
        case PendingOp::Kind::Barrier:
          circuit.add_barrier();
          break;
      }
    }
    return circuit;
  }

 private:
  const Token &peek() const { return toks_[pos_]; }
  const Token &next() {
    const Token &t = toks_[pos_];
    if (t.kind != Tok::End) ++pos_;
    return t;
  }
  bool at_symbol(std::string_view s) const {
    return peek().kind == Tok::Symbol && peek().text == s;
  }

  [[noreturn]] static void fail(const Token &at, std::string message) {
    throw StatementError{at.line, at.column, std::move(message)};
  }

  static std::string describe(const Token &t) {
    switch (t.kind) {
      case Tok::End:
        return "end of input";
      case Tok::String:
        return "string \"" + t.text + "\"";
      default:
        return "'" + t.text + "'";
    }
  }

  const Token &expect_symbol(std::string_view s) {
    if (!at_symbol(s)) fail(peek(), "expected '" + std::string(s) + "' but found " + describe(peek()));
    return next();
  }
  const Token &expect(Tok kind, std::string_view what) {
    if (peek().kind != kind) fail(peek(), "expected " + std::string(what) + " but found " + describe(peek()));
    return next();
  }

  void error(std::size_t line, std::size_t column, std::string message) {
    diags_.push_back({line, column, std::move(message), Severity::Error});
  }

  void synchronize() {
    while (peek().kind != Tok::End) {
      if (next().kind == Tok::Symbol && toks_[pos_ - 1].text == ";") return;
    }
  }

  void header() {
    const Token &first = peek();
    if (first.kind != Tok::Ident || first.text != "OPENQASM") {
      error(first.line, first.column, "malformed header: expected 'OPENQASM 2.0;'");
      return;
    }
    try {
      next();
      const Token &version = expect(Tok::Number, "version number");
      if (version.text != "2.0" && version.text != "2") {
        fail(version, "malformed header: unsupported OpenQASM version " + version.text);
      }
      expect_symbol(";");
    } catch (const StatementError &e) {
      error(e.line, e.column, e.message);
      synchronize();
    }
  }

  std::size_t parse_index(const Token &t) {
    std::size_t value = 0;
    const char *begin = t.text.data();
    const char *end = begin + t.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) fail(t, "expected a non-negative integer but found '" + t.text + "'");
    return value;
  }

  void statement() {
    const Token &head = peek();
    if (head.kind != Tok::Ident) fail(head, "expected a statement but found " + describe(head));
    const std::string &word = head.text;

    if (word == "include") {
      next();
      const Token &file = expect(Tok::String, "file name");
      if (file.text != "qelib1.inc") fail(file, "unsupported include \"" + file.text + "\"");
      expect_symbol(";");
    } else if (word == "qreg" || word == "creg") {
      declare_register(word == "qreg");
    } else if (word == "barrier") {
      next();
      arguments();
      expect_symbol(";");
      ops_.push_back(PendingOp{PendingOp::Kind::Barrier, {}, {}});
    } else if (word == "measure") {
      next();
      diags_.push_back({head.line, head.column, "measure ignored", Severity::Warning});
      while (!at_symbol(";")) {
        if (peek().kind == Tok::End) fail(peek(), "expected ';' but found end of input");
        next();
      }
      next();
    } else if (word == "gate" || word == "opaque" || word == "if" || word == "reset" ||
               word == "OPENQASM") {
      fail(head, "unsupported statement '" + word + "'");
    } else {
      gate_statement();
    }
  }

  void declare_register(bool quantum) {
    next();
    const Token &name = expect(Tok::Ident, "register name");
    expect_symbol("[");
    const Token &size_tok = expect(Tok::Number, "register size");
    const std::size_t size = parse_index(size_tok);
    expect_symbol("]");
    expect_symbol(";");
    if (qregs_.contains(name.text) || cregs_.contains(name.text)) {
      fail(name, "register '" + name.text + "' already declared");
    }
    if (size == 0) fail(size_tok, "register size must be positive");
    if (quantum) {
      if (size > kMaxQubits || num_qubits_ + size > kMaxQubits) {
        fail(size_tok, "register too large");
      }
      qregs_[name.text] = Register{num_qubits_, size};
      num_qubits_ += size;
    } else {
      cregs_.insert(name.text);
    }
  }

  Operand operand() {
    const Token &name = expect(Tok::Ident, "qubit argument");
    auto reg = qregs_.find(name.text);
    if (reg == qregs_.end()) fail(name, "unknown quantum register '" + name.text + "'");
    Operand op;
    op.where = &name;
    if (at_symbol("[")) {
      next();
      const Token &idx_tok = expect(Tok::Number, "qubit index");
      const std::size_t idx = parse_index(idx_tok);
      expect_symbol("]");
      if (idx >= reg->second.size) {
        fail(idx_tok, "index out of range: " + name.text + "[" + idx_tok.text + "] but register has size " +
                          std::to_string(reg->second.size));
      }
      op.qubits.push_back(reg->second.offset + idx);
    } else {
      op.is_register = true;
      for (std::size_t i = 0; i < reg->second.size; ++i) op.qubits.push_back(reg->second.offset + i);
    }
    return op;
  }

  std::vector<Operand> arguments() {
    std::vector<Operand> args;
    args.push_back(operand());
    while (at_symbol(",")) {
      next();
      args.push_back(operand());
    }
    return args;
  }

  // expr := term (('+' | '-') term)*
  double expression() {
    double value = term();
    while (at_symbol("+") || at_symbol("-")) {
      const bool plus = next().text == "+";
      const double rhs = term();
      value = plus ? value + rhs : value - rhs;
    }
    return value;
  }
  // term := unary (('*' | '/') unary)*
  double term() {
    double value = unary();
    while (at_symbol("*") || at_symbol("/")) {
      const Token &op = next();
      const double rhs = unary();
      if (op.text == "/") {
        if (rhs == 0.0) fail(op, "division by zero");
        value /= rhs;
      } else {
        value *= rhs;
      }
    }
    return value;
  }
  double unary() {
    if (at_symbol("-")) {
      next();
      return -unary();
    }
    if (at_symbol("+")) {
      next();
      return unary();
    }
    return primary();
  }
  double primary() {
    const Token &t = next();
    if (t.kind == Tok::Number) {
      const double v = std::strtod(t.text.c_str(), nullptr);
      if (!std::isfinite(v)) fail(t, "numeric literal out of range");
      return v;
    }
    if (t.kind == Tok::Ident && t.text == "pi") return std::numbers::pi;
    if (t.kind == Tok::Symbol && t.text == "(") {
      const double v = expression();
      expect_symbol(")");
      return v;
    }
    fail(t, "expected a number or 'pi' but found " + describe(t));
  }

  void gate_statement() {
    const Token &name = next();
    const bool toffoli = name.text == "ccx";
    const auto kind = gate_kind_from_name(name.text);
    if (!toffoli && !kind) fail(name, "unknown gate '" + name.text + "'");

    std::vector<double> params;
    const Token *param_tok = &peek();
    if (at_symbol("(")) {
      next();
      if (!at_symbol(")")) {
        params.push_back(expression());
        while (at_symbol(",")) {
          next();
          params.push_back(expression());
        }
      }
      expect_symbol(")");
    }
    const std::size_t want_params = (!toffoli && gate_takes_param(*kind)) ? 1 : 0;
    if (params.size() != want_params) {
      fail(*param_tok, "gate '" + name.text + "' expects " + std::to_string(want_params) +
                           " parameter(s), got " + std::to_string(params.size()));
    }
    if (!params.empty() && !std::isfinite(params[0])) fail(*param_tok, "parameter is not finite");

    const Token &args_tok = peek();
    const std::vector<Operand> args = arguments();
    expect_symbol(";");

    const std::size_t arity = toffoli ? 3 : static_cast<std::size_t>(gate_arity(*kind));
    if (args.size() != arity) {
      fail(args_tok, "gate '" + name.text + "' expects " + std::to_string(arity) +
                         " qubit argument(s), got " + std::to_string(args.size()));
    }

    std::size_t repeat = 1;
    for (const auto &a : args) {
      if (!a.is_register) continue;
      if (repeat != 1 && a.qubits.size() != repeat) {
        fail(*a.where, "register arguments of '" + name.text + "' differ in size");
      }
      repeat = a.qubits.size();
    }

    for (std::size_t r = 0; r < repeat; ++r) {
      std::array<Qubit, 3> q{};
      for (std::size_t i = 0; i < arity; ++i) {
        q[i] = args[i].is_register ? args[i].qubits[r] : args[i].qubits[0];
      }
      for (std::size_t i = 0; i < arity; ++i) {
        for (std::size_t j = i + 1; j < arity; ++j) {
          if (q[i] == q[j]) fail(*args[j].where, "gate '" + name.text + "' repeats a qubit");
        }
      }
      PendingOp op;
      if (toffoli) {
        op.kind = PendingOp::Kind::Toffoli;
        op.toffoli = q;
      } else {
        op.gate.kind = *kind;
        op.gate.qubits = {q[0], arity == 2 ? q[1] : 0};
        if (want_params) op.gate.param = params[0];
      }
      ops_.push_back(op);
    }
  }

  static constexpr std::size_t kMaxQubits = std::size_t{1} << 20;

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<ParseDiagnostic> &diags_;
  std::map<std::string, Register> qregs_;
  std::set<std::string> cregs_;
  std::size_t num_qubits_ = 0;
  std::vector<PendingOp> ops_;
};

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

QasmParseResult parse_qasm(std::string_view source) {
  QasmParseResult result;
  Lexer lexer(source, result.diagnostics);
  std::vector<Token> tokens = lexer.run();
  QasmParser parser(std::move(tokens), result.diagnostics);
  result.circuit = parser.run();
  std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(),
                   [](const ParseDiagnostic &a, const ParseDiagnostic &b) {
                     return std::tie(a.line, a.column) < std::tie(b.line, b.column);
                   });
  return result;
}

std::string write_qasm(const Circuit &circuit) {
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  if (circuit.num_qubits() > 0) out << "qreg q[" << circuit.num_qubits() << "];\n";
  auto barrier = circuit.barriers().begin();
  const auto &gates = circuit.gates();
  for (std::size_t i = 0; i <= gates.size(); ++i) {
    while (barrier != circuit.barriers().end() && *barrier == i) {
      out << "barrier q;\n";
      ++barrier;
    }
    if (i == gates.size()) break;
    const Gate &g = gates[i];
    out << gate_name(g.kind);
    if (g.param) out << '(' << format_double(*g.param) << ')';
    out << " q[" << g.qubits[0] << ']';
    if (g.is_two_qubit()) out << ",q[" << g.qubits[1] << ']';
    out << ";\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON

JsonSchemaError::JsonSchemaError(std::string path, const std::string &message)
    : std::runtime_error((path.empty() ? std::string("/") : path) + ": " + message),
      path_(std::move(path)) {}

namespace {

using nlohmann::json;

std::size_t as_index(const json &value, const std::string &path, const char *what) {
  if (!value.is_number_integer() || (!value.is_number_unsigned() && value.get<std::int64_t>() < 0)) {
    throw JsonSchemaError(path, std::string(what) + " must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

}  // namespace

Circuit parse_json(std::string_view source) {
  json doc;
  try {
    doc = json::parse(source);
  } catch (const json::parse_error &e) {
    throw JsonSchemaError("", std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw JsonSchemaError("", "expected an object");
  if (!doc.contains("gates")) throw JsonSchemaError("/gates", "missing required field");
  const json &gates = doc["gates"];
  if (!gates.is_array()) throw JsonSchemaError("/gates", "must be an array");

  std::vector<Gate> parsed;
  parsed.reserve(gates.size());
  std::size_t highest = 0;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const std::string path = "/gates/" + std::to_string(i);
    const json &g = gates[i];
    if (!g.is_object()) throw JsonSchemaError(path, "gate must be an object");
    if (!g.contains("kind") || !g["kind"].is_string()) {
      throw JsonSchemaError(path + "/kind", "missing or not a string");
    }
    const std::string name = g["kind"].get<std::string>();
    std::string lowered = name;
    std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    const auto kind = gate_kind_from_name(lowered);
    if (!kind) throw JsonSchemaError(path + "/kind", "unknown gate '" + name + "'");

    if (!g.contains("qubits") || !g["qubits"].is_array()) {
      throw JsonSchemaError(path + "/qubits", "missing or not an array");
    }
    const json &qs = g["qubits"];
    if (qs.size() != static_cast<std::size_t>(gate_arity(*kind))) {
      throw JsonSchemaError(path + "/qubits", "gate '" + lowered + "' expects " +
                                                  std::to_string(gate_arity(*kind)) + " qubit(s), got " +
                                                  std::to_string(qs.size()));
    }
    Gate gate;
    gate.kind = *kind;
    for (std::size_t k = 0; k < qs.size(); ++k) {
      gate.qubits[k] = as_index(qs[k], path + "/qubits/" + std::to_string(k), "qubit index");
      highest = std::max(highest, gate.qubits[k] + 1);
    }
    if (gate.is_two_qubit() && gate.qubits[0] == gate.qubits[1]) {
      throw JsonSchemaError(path + "/qubits", "duplicate qubit " + std::to_string(gate.qubits[0]));
    }
    const bool has_param = g.contains("param") && !g["param"].is_null();
    if (has_param != gate_takes_param(*kind)) {
      throw JsonSchemaError(path + "/param", has_param ? "gate '" + lowered + "' takes no parameter"
                                                       : "gate '" + lowered + "' requires a parameter");
    }
    if (has_param) {
      if (!g["param"].is_number()) throw JsonSchemaError(path + "/param", "must be a number");
      gate.param = g["param"].get<double>();
    }
    parsed.push_back(gate);
  }

  std::size_t num_qubits = highest;
  if (doc.contains("num_qubits")) {
    num_qubits = as_index(doc["num_qubits"], "/num_qubits", "num_qubits");
    for (std::size_t i = 0; i < parsed.size(); ++i) {
      for (Qubit q : parsed[i].operands()) {
        if (q >= num_qubits) {
          throw JsonSchemaError("/gates/" + std::to_string(i) + "/qubits",
                                "qubit " + std::to_string(q) + " out of range for " +
                                    std::to_string(num_qubits) + " qubits");
        }
      }
    }
  }

  std::vector<std::size_t> barriers;
  if (doc.contains("barriers")) {
    const json &bs = doc["barriers"];
    if (!bs.is_array()) throw JsonSchemaError("/barriers", "must be an array");
    for (std::size_t i = 0; i < bs.size(); ++i) {
      const std::string path = "/barriers/" + std::to_string(i);
      const std::size_t at = as_index(bs[i], path, "barrier position");
      if (at > parsed.size()) throw JsonSchemaError(path, "barrier position past the last gate");
      if (!barriers.empty() && at < barriers.back()) {
        throw JsonSchemaError(path, "barrier positions must be non-decreasing");
      }
      barriers.push_back(at);
    }
  }

  Circuit circuit(num_qubits);
  auto barrier = barriers.begin();
  for (std::size_t i = 0; i <= parsed.size(); ++i) {
    while (barrier != barriers.end() && *barrier == i) {
      circuit.add_barrier();
      ++barrier;
    }
    if (i < parsed.size()) circuit.add(parsed[i]);
  }
  return circuit;
}

std::string write_json(const Circuit &circuit) {
  std::ostringstream out;
  out << "{\n  \"num_qubits\": " << circuit.num_qubits() << ",\n  \"gates\": [";
  const auto &gates = circuit.gates();
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate &g = gates[i];
    nlohmann::ordered_json j;
    j["kind"] = gate_name(g.kind);
    j["qubits"] = nlohmann::json::array();
    for (Qubit q : g.operands()) j["qubits"].push_back(q);
    if (g.param) j["param"] = *g.param;
    out << (i == 0 ? "\n    " : ",\n    ") << j.dump();
  }
  out << (gates.empty() ? "]" : "\n  ]");
  if (!circuit.barriers().empty()) {
    out << ",\n  \"barriers\": " << nlohmann::json(circuit.barriers()).dump();
  }
  out << "\n}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Assignment CSV

std::string write_assignments_csv(const AssignmentSequence &seq) {
  std::ostringstream out;
  out << "slice,qubit,core\n";
  if (seq.initial) {
    for (Qubit q = 0; q < seq.initial->num_qubits(); ++q) out << "init," << q << ',' << (*seq.initial)[q] << '\n';
  }
  for (std::size_t t = 0; t < seq.size(); ++t) {
    const Assignment &a = seq[t];
    for (Qubit q = 0; q < a.num_qubits(); ++q) out << t << ',' << q << ',' << a[q] << '\n';
  }
  return out.str();
}

AssignmentSequence read_assignments_csv(std::string_view source) {
  std::istringstream in{std::string(source)};
  std::string line;
  std::size_t lineno = 0;
  auto bad = [&](const std::string &msg) {
    return std::invalid_argument("assignment CSV line " + std::to_string(lineno) + ": " + msg);
  };

  if (!std::getline(in, line)) throw std::invalid_argument("assignment CSV is empty");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "slice,qubit,core") throw bad("expected header 'slice,qubit,core'");

  AssignmentSequence seq;
  std::optional<std::size_t> width;
  Assignment *current = nullptr;
  auto close = [&](const Assignment &a) {
    if (!width) width = a.num_qubits();
    if (a.num_qubits() != *width) throw bad("previous block has " + std::to_string(a.num_qubits()) +
                                            " qubits, expected " + std::to_string(*width));
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const char *p = line.data();
    const char *end = p + line.size();

    std::optional<std::size_t> slice;  // empty for the initial placement
    if (line.rfind("init,", 0) == 0) {
      p += 4;
    } else {
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(p, end, value);
      if (ec != std::errc()) throw bad("expected 'init' or a slice index");
      slice = value;
      p = ptr;
    }
    std::array<std::size_t, 2> field{};
    for (std::size_t k = 0; k < 2; ++k) {
      if (p == end || *p != ',') throw bad("expected ','");
      ++p;
      auto [ptr, ec] = std::from_chars(p, end, field[k]);
      if (ec != std::errc()) throw bad("expected a non-negative integer");
      p = ptr;
    }
    if (p != end) throw bad("trailing characters");
    const auto [qubit, core] = field;

    if (!slice) {
      if (!seq.empty()) throw bad("initial rows must precede slice rows");
      if (!seq.initial) seq.initial.emplace();
      current = &*seq.initial;
    } else if (*slice == seq.size()) {
      if (current != nullptr) close(*current);
      seq.per_slice.emplace_back();
      current = &seq.per_slice.back();
    } else if (*slice + 1 != seq.size()) {
      throw bad("slices must appear in order");
    }
    if (qubit != current->num_qubits()) throw bad("qubits must appear in order starting at 0");
    current->core_of.push_back(core);
  }
  if (current != nullptr) {
    try {
      close(*current);
    } catch (const std::invalid_argument &) {
      throw std::invalid_argument("assignment CSV: last block incomplete");
    }
  }
  return seq;
}

// ---------------------------------------------------------------------------

CircuitLoadError::CircuitLoadError(const std::string &message, std::vector<ParseDiagnostic> diagnostics)
    : std::runtime_error(message), diagnostics_(std::move(diagnostics)) {}

Circuit load_circuit(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CircuitLoadError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();

  if (path.extension() == ".json") {
    try {
      return parse_json(text);
    } catch (const JsonSchemaError &e) {
      throw CircuitLoadError(path.string() + ": " + e.what());
    }
  }
  QasmParseResult result = parse_qasm(text);
  if (!result.ok()) {
    std::string first;
    for (const auto &d : result.diagnostics) {
      if (d.severity == Severity::Error) {
        first = d.to_string();
        break;
      }
    }
    throw CircuitLoadError(path.string() + ":" + first, std::move(result.diagnostics));
  }
  return std::move(*result.circuit);
}

}  // namespace qcmap
