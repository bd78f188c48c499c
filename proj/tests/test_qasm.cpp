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

#include <gtest/gtest.h>

#include <numbers>
#include <numeric>
#include <random>

#include "oracle.hpp"
#include "qaoachain/compiler.hpp"
#include "qaoachain/errors.hpp"
#include "qaoachain/qasm.hpp"

using namespace qaoachain;

namespace {

std::string error_at(std::string_view text) {
  try {
    parse_qasm(text);
  } catch (const ParseError& e) {
    return e.location() + " " + e.message();
  }
  return "<no error>";
}

constexpr std::string_view kHeader = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[2];\ncreg c[2];\n";

}  // namespace

TEST(Emit, SingleEdgeDocument) {
  const std::vector<int> chain{0, 1};
  const auto res = compile(WeightGraph({0, 0}, {{0, 1, 1}}), QaoaParams({0.25}, {0.125}), chain);
  EXPECT_EQ(emit_qasm(res.circuit), std::string(kHeader) +
                                        "h q[0];\nh q[1];\n"
                                        "cx q[0],q[1];\n"
                                        "rz(0.5) q[1];\n"
                                        "cx q[0],q[1];\n"
                                        "rx(0.25) q[0];\nrx(0.25) q[1];\n"
                                        "measure q[0] -> c[0];\nmeasure q[1] -> c[1];\n");
}

TEST(Emit, EmptyCircuitAndPi) {
  PhysicalCircuit pc;
  pc.num_qubits = 2;
  pc.final_layout = {1, 0};
  EXPECT_EQ(emit_qasm(pc), std::string(kHeader) + "measure q[1] -> c[0];\nmeasure q[0] -> c[1];\n");
  pc.cycles = {{Gate::rz(0, std::numbers::pi)}};
  EXPECT_NE(emit_qasm(pc).find("rz(3.1415926535897931) q[0];"), std::string::npos);
  pc.cycles = {{Gate::swap(0, 1)}};
  EXPECT_THROW(emit_qasm(pc), ConfigError);
}

TEST(Parse, RoundTripOnCompiledCircuits) {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> a(-3, 3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + t % 10;
    const auto g = oracle::random_weight_graph(n, 0.5, t % 2 == 0, rng);
    const std::size_t p = 1 + t % 2;
    std::vector<double> gm(p), bt(p);
    for (auto& x : gm) x = a(rng);
    for (auto& x : bt) x = a(rng);
    std::vector<int> chain(n);
    std::iota(chain.begin(), chain.end(), 0);
    const auto pc = compile(g, QaoaParams(gm, bt), chain).circuit;
    const std::string text = emit_qasm(pc);
    const auto back = parse_qasm(text);
    EXPECT_EQ(back.num_qubits, pc.num_qubits);
    EXPECT_EQ(back.gates(), pc.gates());
    EXPECT_EQ(back.cycles, pc.cycles);
    EXPECT_EQ(back.final_layout, pc.final_layout);
    EXPECT_EQ(emit_qasm(back), text);
  }
}

TEST(Parse, AcceptsCommentsAndSpacing) {
  const auto pc = parse_qasm(
      "// compiled\nOPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg r[3];\ncreg m[2];\n"
      "h r[2];  rx( -1.5e-3 ) r[0];\ncx r[2], r[1];\nmeasure r[2] -> m[0];\nmeasure r[0]->m[1];\n");
  EXPECT_EQ(pc.num_qubits, 3U);
  EXPECT_EQ(pc.final_layout, (std::vector<std::size_t>{2, 0}));
  ASSERT_EQ(pc.gate_count(), 3U);
  EXPECT_EQ(pc.gates()[1], Gate::rx(0, -1.5e-3));
}

TEST(Parse, Errors) {
  const std::string h(kHeader);
  EXPECT_EQ(error_at(h + "cz q[0],q[1];\n"), "5:1 unknown gate 'cz'");
  EXPECT_EQ(error_at(h + "h q[0]\nh q[1];\n"), "6:1 expected ';'");
  EXPECT_EQ(error_at(h + "h q[2];\n"), "5:5 index 2 out of range for register 'q'");
  EXPECT_EQ(error_at(h + "h p[0];\n"), "5:3 unknown quantum register 'p'");
  EXPECT_EQ(error_at(h + "rx(1.2.3) q[0];\n"), "5:4 malformed real '1.2.3'");
  EXPECT_EQ(error_at(h + "measure q[0] -> c[0];\n").substr(0, 3), "6:1");  // c[1] never measured
  EXPECT_EQ(error_at(h + "measure q[0] -> c[0];\nh q[0];\n"), "6:1 gate after measurement");
  EXPECT_EQ(error_at("OPENQASM 3.0;"), "1:10 unsupported OPENQASM version '3.0'");
  EXPECT_EQ(error_at("OPENQASM 2.0;\ninclude \"qelib1.inc\";\nh q[0];\n"),
            "3:1 registers must be declared before 'h'");
}
