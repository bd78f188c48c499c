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

#pragma once

#include <string>
#include <string_view>

#include "qaoachain/circuit.hpp"

namespace qaoachain {

/// OpenQASM 2.0 text for a compiled circuit: one quantum register sized
/// to the chain, one classical bit per logical qubit, gates in cycle
/// order, then `measure q[final_layout[l]] -> c[l];` for every l.
/// Angles use 17 significant digits.
std::string emit_qasm(const PhysicalCircuit& circuit);

/// Reads the subset written by emit_qasm (h, rx, rz, cx, measure; `//`
/// comments allowed). Cycles are rebuilt by ASAP layering, the chain is
/// the identity, and final_layout comes from the measurements, which must
/// cover every classical bit exactly once. Errors are ParseErrors whose
/// location is "line:column".
PhysicalCircuit parse_qasm(std::string_view text);

}  // namespace qaoachain
