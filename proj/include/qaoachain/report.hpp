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

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "qaoachain/task_service.hpp"
#include "qaoachain/weight_graph.hpp"

namespace qaoachain {

/// Twelve fill colours; colour indices wrap around.
std::string_view palette_color(std::size_t index) noexcept;

/// Undirected DOT graph with node i filled by palette_color(colors[i]).
/// Edge labels show weights other than 1.
std::string graph_dot(const WeightGraph& g, const std::vector<std::size_t>& colors);

/// Colours each node by its bit in a logical bitstring.
std::string partition_dot(const WeightGraph& problem, std::string_view bits);

/// QUBO assignment behind a measured bitstring. Spins are s = 2x − 1 on
/// the model side and z = 1 − 2·bit on the measurement side, so x_i is the
/// complement of bit i.
std::string assignment_of(std::string_view bits);

/// Colour per node from a one-hot coloring assignment over n·k bits: the
/// first colour whose bit is set, or k when none is.
std::vector<std::size_t> decode_coloring(std::string_view bits, std::size_t nodes, std::size_t colors);

/// `bits,count,energy,objective,solution`, one line per row.
void write_histogram_csv(std::ostream& out, const std::vector<RankedRow>& rows);

}  // namespace qaoachain
