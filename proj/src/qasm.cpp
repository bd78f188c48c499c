// Copyright 2026 The qaoachain Authors
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

#include "qaoachain/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <optional>

#include "qaoachain/errors.hpp"

namespace qaoachain {

std::string emit_qasm(const PhysicalCircuit& circuit) {
  std::string out = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(circuit.num_qubits) + "];\n";
  out += "creg c[" + std::to_string(circuit.final_layout.size()) + "];\n";
  char buf[64];
  for (const auto& cycle : circuit.cycles) {
    for (const Gate& g : cycle) {
      switch (g.kind) {
        case GateKind::kH:
          std::snprintf(buf, sizeof buf, "h q[%u];\n", g.q0);
          break;
        case GateKind::kRX:
        case GateKind::kRZ:
          std::snprintf(buf, sizeof buf, "%s(%.17g) q[%u];\n", g.kind == GateKind::kRX ? "rx" : "rz", g.angle, g.q0);
          break;
        case GateKind::kCnot:
          std::snprintf(buf, sizeof buf, "cx q[%u],q[%u];\n", g.q0, g.q1);
          break;
        default:
          throw ConfigError("gate '" + std::string(gate_name(g.kind)) + "' has no QASM form here; decompose first");
      }
      out += buf;
    }
  }
  for (std::size_t l = 0; l < circuit.final_layout.size(); ++l) {
    out += "measure q[" + std::to_string(circuit.final_layout[l]) + "] -> c[" + std::to_string(l) + "];\n";
  }
  return out;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PhysicalCircuit run() {
    expect_word("OPENQASM");
    const auto [version, vat] = number_token();
    if (version != "2.0") fail("unsupported OPENQASM version '" + std::string(version) + "'", vat);
    expect(';');
    expect_word("include");
    const auto [file, fat] = string_token();
    if (file != "qelib1.inc") fail("only qelib1.inc may be included", fat);
    expect(';');

    std::vector<Gate> gates;
    std::vector<std::optional<std::size_t>> measured;
    bool measuring = false;
    while (true) {
      skip_space();
      if (pos_ >= text_.size()) break;
      const Location at = here();
      const std::string_view word = identifier();
      if (word == "qreg" || word == "creg") {
        declare(word == "qreg", at);
        continue;
      }
      if (!qreg_ || !creg_) fail("registers must be declared before '" + std::string(word) + "'", at);
      if (word == "measure") {
        measuring = true;
        measured.resize(creg_->size);
        const std::size_t q = operand(true);
        skip_space();
        const Location arrow = here();
        if (text_.substr(pos_, 2) != "->") fail("expected '->'", arrow);
        pos_ += 2;
        const Location cat = (skip_space(), here());
        const std::size_t c = operand(false);
        if (measured[c]) fail("classical bit " + std::to_string(c) + " measured twice", cat);
        measured[c] = q;
        expect(';');
        continue;
      }
      if (measuring) fail("gate after measurement", at);
      gates.push_back(gate(word, at));
    }
    if (!qreg_ || !creg_) fail("missing register declaration", here());
    measured.resize(creg_->size);

    PhysicalCircuit pc;
    pc.num_qubits = qreg_->size;
    std::vector<bool> hit(pc.num_qubits, false);
    for (std::size_t l = 0; l < measured.size(); ++l) {
      if (!measured[l]) fail("classical bit " + std::to_string(l) + " is never measured", here());
      if (hit[*measured[l]]) fail("qubit " + std::to_string(*measured[l]) + " measured twice", here());
      hit[*measured[l]] = true;
      pc.final_layout.push_back(*measured[l]);
    }
    pc.chain.resize(pc.num_qubits);
    std::iota(pc.chain.begin(), pc.chain.end(), 0);
    pc.cycles = asap_layers(pc.num_qubits, gates);
    return pc;
  }

 private:
  struct Location {
    std::size_t line, column;
  };
  struct Register {
    std::string name;
    std::size_t size;
  };

  [[noreturn]] void fail(const std::string& message, Location at) const {
    throw ParseError(message, std::to_string(at.line) + ":" + std::to_string(at.column));
  }

  // pos_ only moves forward, so the scan resumes from the previous answer.
  Location here() const {
    for (; scanned_ < pos_ && scanned_ < text_.size(); ++scanned_) {
      if (text_[scanned_] == '\n') {
        ++seen_.line;
        seen_.column = 1;
      } else {
        ++seen_.column;
      }
    }
    return seen_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_.substr(pos_, 2) == "//") {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'", here());
    ++pos_;
  }

  std::string_view identifier() {
    skip_space();
    const Location at = here();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_ || std::isdigit(static_cast<unsigned char>(text_[start]))) fail("expected an identifier", at);
    return text_.substr(start, pos_ - start);
  }

  void expect_word(std::string_view word) {
    skip_space();
    const Location at = here();
    if (identifier() != word) fail("expected '" + std::string(word) + "'", at);
  }

  std::pair<std::string_view, Location> number_token() {
    skip_space();
    const Location at = here();
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' || text_[pos_] == '+' ||
            text_[pos_] == '-')) {
      // A sign is part of the token only at the start or after an exponent marker.
      if ((text_[pos_] == '+' || text_[pos_] == '-') && pos_ != start && text_[pos_ - 1] != 'e' &&
          text_[pos_ - 1] != 'E') {
        break;
      }
      ++pos_;
    }
    if (start == pos_) fail("expected a number", at);
    return {text_.substr(start, pos_ - start), at};
  }

  std::pair<std::string_view, Location> string_token() {
    skip_space();
    const Location at = here();
    if (pos_ >= text_.size() || text_[pos_] != '"') fail("expected a quoted string", at);
    const std::size_t close = text_.find('"', pos_ + 1);
    if (close == std::string_view::npos) fail("unterminated string", at);
    auto s = text_.substr(pos_ + 1, close - pos_ - 1);
    pos_ = close + 1;
    return {s, at};
  }

  std::size_t index_value() {
    const auto [tok, at] = number_token();
    std::size_t v = 0;
    auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || end != tok.data() + tok.size()) fail("malformed index '" + std::string(tok) + "'", at);
    return v;
  }

  double real_value() {
    auto [tok, at] = number_token();
    std::string_view digits = tok;
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    double v = 0.0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty()) {
      fail("malformed real '" + std::string(tok) + "'", at);
    }
    return v;
  }

  void declare(bool quantum, Location at) {
    auto& slot = quantum ? qreg_ : creg_;
    if (slot) fail(std::string("second ") + (quantum ? "qreg" : "creg") + " declaration", at);
    const std::string name(identifier());
    expect('[');
    const std::size_t size = index_value();
    expect(']');
    expect(';');
    if (qreg_ && qreg_->name == name) fail("register name '" + name + "' already used", at);
    slot = Register{name, size};
  }

  std::size_t operand(bool quantum) {
    skip_space();
    const Location at = here();
    const Register& reg = quantum ? *qreg_ : *creg_;
    const std::string_view name = identifier();
    if (name != reg.name) fail("unknown " + std::string(quantum ? "quantum" : "classical") + " register '" + std::string(name) + "'", at);
    expect('[');
    const Location iat = (skip_space(), here());
    const std::size_t i = index_value();
    expect(']');
    if (i >= reg.size) {
      fail("index " + std::to_string(i) + " out of range for register '" + reg.name + "'", iat);
    }
    return i;
  }

  Gate gate(std::string_view word, Location at) {
    Gate g;
    if (word == "h") {
      g = Gate::h(static_cast<std::uint32_t>(operand(true)));
    } else if (word == "rx" || word == "rz") {
      expect('(');
      const double theta = real_value();
      expect(')');
      const auto q = static_cast<std::uint32_t>(operand(true));
      g = word == "rx" ? Gate::rx(q, theta) : Gate::rz(q, theta);
    } else if (word == "cx") {
      const auto a = static_cast<std::uint32_t>(operand(true));
      expect(',');
      const auto b = static_cast<std::uint32_t>(operand(true));
      if (a == b) fail("cx needs two distinct qubits", at);
      g = Gate::cnot(a, b);
    } else {
      fail("unknown gate '" + std::string(word) + "'", at);
    }
    expect(';');
    return g;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  mutable std::size_t scanned_ = 0;
  mutable Location seen_{1, 1};
  std::optional<Register> qreg_;
  std::optional<Register> creg_;
};

}  // namespace

PhysicalCircuit parse_qasm(std::string_view text) { return Parser(text).run(); }

}  // namespace qaoachain
