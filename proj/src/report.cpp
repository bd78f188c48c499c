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

#include "qaoachain/report.hpp"

#include <array>
#include <cstdio>
#include <ostream>

#include "qaoachain/errors.hpp"

namespace qaoachain {

namespace {

constexpr std::array<std::string_view, 12> kPalette = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#1f77b4", "#17becf"};

std::string real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string_view palette_color(std::size_t index) noexcept { return kPalette[index % kPalette.size()]; }

std::string graph_dot(const WeightGraph& g, const std::vector<std::size_t>& colors) {
  if (colors.size() != g.num_nodes()) throw ModelError("one colour per node required");
  std::string out = "graph G {\n  node [style=filled, shape=circle];\n";
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    out += "  " + std::to_string(i) + " [fillcolor=\"" + std::string(palette_color(colors[i])) + "\"];\n";
  }
  for (const auto& e : g.edges()) {
    out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v);
    if (e.w != 1.0) out += " [label=\"" + real(e.w) + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string partition_dot(const WeightGraph& problem, std::string_view bits) {
  if (bits.size() != problem.num_nodes()) throw ModelError("bitstring length differs from the node count");
  std::vector<std::size_t> colors(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) colors[i] = bits[i] == '1' ? 1 : 0;
  return graph_dot(problem, colors);
}

std::string assignment_of(std::string_view bits) {
  std::string x(bits);
  for (char& c : x) c = c == '1' ? '0' : '1';
  return x;
}

std::vector<std::size_t> decode_coloring(std::string_view bits, std::size_t nodes, std::size_t colors) {
  if (bits.size() != nodes * colors) throw ModelError("bitstring length differs from nodes × colours");
  std::vector<std::size_t> out(nodes, colors);
  for (std::size_t v = 0; v < nodes; ++v) {
    for (std::size_t c = 0; c < colors; ++c) {
      if (bits[v * colors + c] == '1') {
        out[v] = c;
        break;
      }
    }
  }
  return out;
}

void write_histogram_csv(std::ostream& out, const std::vector<RankedRow>& rows) {
  out << "bits,count,energy,objective,solution\n";
  for (const auto& r : rows) {
    out << r.bits << ',' << r.count << ',' << real(r.energy) << ',' << real(r.objective) << ','
        << (r.solution ? 1 : 0) << '\n';
  }
}

}  // namespace qaoachain
