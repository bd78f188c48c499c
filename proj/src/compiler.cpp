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

#include "qaoachain/compiler.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "qaoachain/errors.hpp"
#include "qaoachain/simd/kernels.hpp"

namespace qaoachain {

// ---------------------------------------------------------------- template

SwapTemplate::SwapTemplate(std::size_t n) : n_(n) {
  if (n < 2) throw ConfigError("SWAP template needs a chain of at least 2 qubits");
  auto make = [n](LayerKind kind) {
    TemplateLayer layer{kind, {}};
    const std::size_t first = (kind == LayerKind::kRzzEven || kind == LayerKind::kSwapEven) ? 0 : 1;
    for (std::size_t i = first; i + 1 < n; i += 2) layer.pairs.emplace_back(i, i + 1);
    return layer;
  };
  for (std::size_t r = 0; r < n / 2; ++r) {
    layers_.push_back(make(LayerKind::kRzzEven));
    layers_.push_back(make(LayerKind::kRzzOdd));
    layers_.push_back(make(LayerKind::kSwapOdd));
    layers_.push_back(make(LayerKind::kSwapEven));
  }
  if (n % 2 == 0) {
    layers_.resize(layers_.size() - 2);
  } else {
    layers_.push_back(make(LayerKind::kRzzEven));
  }
}

std::size_t SwapTemplate::rzz_layer_count() const {
  return static_cast<std::size_t>(
      std::count_if(layers_.begin(), layers_.end(), [](const TemplateLayer& l) { return is_rzz_layer(l.kind); }));
}

std::size_t SwapTemplate::swap_layer_count() const { return layers_.size() - rzz_layer_count(); }

SwapTemplate build_template(std::size_t n) { return SwapTemplate(n); }

ExeRTable::ExeRTable(const SwapTemplate& tmpl) : n_(tmpl.size()), table_(n_ * n_, 0) {
  if (tmpl.cycle_count() > std::numeric_limits<std::uint16_t>::max()) {
    throw CapacityError("chain of " + std::to_string(n_) + " qubits is too long for the cycle table");
  }
  std::vector<std::size_t> origin(n_);  // position -> initial position of its occupant
  std::iota(origin.begin(), origin.end(), 0);
  std::size_t cycle = 0;
  for (const auto& layer : tmpl.layers()) {
    ++cycle;
    for (const auto& [a, b] : layer.pairs) {
      if (is_rzz_layer(layer.kind)) {
        const auto c = static_cast<std::uint16_t>(cycle);
        table_[origin[a] * n_ + origin[b]] = c;
        table_[origin[b] * n_ + origin[a]] = c;
        max_cycle_ = std::max(max_cycle_, cycle);
      } else {
        std::swap(origin[a], origin[b]);
      }
    }
  }
}

ExeRTable build_exer_table(std::size_t n) { return ExeRTable(SwapTemplate(n)); }

// ------------------------------------------------------------------ mapping

void Mapping::validate() const {
  std::vector<bool> taken(chain_length, false);
  for (std::size_t l = 0; l < position_of.size(); ++l) {
    const auto p = position_of[l];
    if (p >= chain_length) {
      throw ConfigError("logical qubit " + std::to_string(l) + " mapped outside the chain");
    }
    if (taken[p]) throw ConfigError("chain position " + std::to_string(p) + " used twice");
    taken[p] = true;
  }
}

std::size_t mapping_cost(const WeightGraph& g, const Mapping& mapping, const ExeRTable& exer) {
  std::size_t last = 0;
  for (const auto& e : g.edges()) {
    last = std::max(last, exer.cycle(mapping.position_of[e.u], mapping.position_of[e.v]));
  }
  return last;
}

MappingSearchResult search_initial_mapping(const WeightGraph& g, std::size_t chain_length, std::size_t b_max,
                                           bool mirror_pruning) {
  const std::size_t n = g.num_nodes();
  if (n > chain_length) {
    throw CapacityError("graph with " + std::to_string(n) + " nodes does not fit a chain of " +
                        std::to_string(chain_length));
  }
  if (b_max == 0) throw ConfigError("search breadth per cost must be at least 1");
  const std::size_t N = chain_length;
  if (N < 2) return {Mapping{{0}, N}, 0};

  const ExeRTable exer = build_exer_table(N);
  const auto deg = g.degrees();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });

  std::vector<std::size_t> rank(n);
  for (std::size_t k = 0; k < n; ++k) rank[order[k]] = k;
  const auto adj = g.adjacency();
  std::vector<std::vector<std::size_t>> placed_neighbours(n);  // by level
  for (std::size_t k = 0; k < n; ++k) {
    for (auto m : adj[order[k]]) {
      if (rank[m] < k) placed_neighbours[k].push_back(m);
    }
  }

  // One search level, stored flat: node i owns pos[i*n ..] and used[i*N ..].
  struct Level {
    std::vector<std::uint16_t> pos;
    std::vector<std::uint8_t> used;
    std::vector<std::uint16_t> cost;
    std::size_t size() const { return cost.size(); }
  };
  constexpr std::uint16_t kUnplaced = std::numeric_limits<std::uint16_t>::max();

  Level level;
  {
    const std::size_t first_positions = mirror_pruning ? (N + 1) / 2 : N;
    for (std::size_t p = 0; p < first_positions; ++p) {
      level.pos.resize(level.pos.size() + n, kUnplaced);
      level.pos[p * n + order[0]] = static_cast<std::uint16_t>(p);
      level.used.resize(level.used.size() + N, 0);
      level.used[p * N + p] = 1;
      level.cost.push_back(0);
    }
  }

  const auto& kernels = simd::active_kernels();
  std::vector<std::uint16_t> local(N);
  std::vector<std::size_t> kept_per_cost(exer.max_cycle() + 1);
  struct Child {
    std::uint32_t parent;
    std::uint16_t position;
    std::uint16_t cost;
  };
  std::vector<Child> children;

  for (std::size_t k = 1; k < n; ++k) {
    const std::size_t q = order[k];
    std::fill(kept_per_cost.begin(), kept_per_cost.end(), 0);
    children.clear();
    for (std::size_t parent = 0; parent < level.size(); ++parent) {
      const std::uint16_t* pos = level.pos.data() + parent * n;
      const std::uint8_t* used = level.used.data() + parent * N;
      std::fill(local.begin(), local.end(), 0);
      for (auto m : placed_neighbours[k]) kernels.max_accumulate_u16(local.data(), exer.row(pos[m]), N);
      const std::uint16_t base = level.cost[parent];
      for (std::size_t p = 0; p < N; ++p) {
        if (used[p]) continue;
        const std::uint16_t c = std::max(base, local[p]);
        if (kept_per_cost[c] >= b_max) continue;
        ++kept_per_cost[c];
        children.push_back({static_cast<std::uint32_t>(parent), static_cast<std::uint16_t>(p), c});
      }
    }
    Level next;
    next.pos.resize(children.size() * n);
    next.used.resize(children.size() * N);
    next.cost.resize(children.size());
    for (std::size_t i = 0; i < children.size(); ++i) {
      const auto& ch = children[i];
      std::copy_n(level.pos.data() + std::size_t{ch.parent} * n, n, next.pos.data() + i * n);
      std::copy_n(level.used.data() + std::size_t{ch.parent} * N, N, next.used.data() + i * N);
      next.pos[i * n + q] = ch.position;
      next.used[i * N + ch.position] = 1;
      next.cost[i] = ch.cost;
    }
    level = std::move(next);
  }

  const auto best = static_cast<std::size_t>(std::min_element(level.cost.begin(), level.cost.end()) - level.cost.begin());
  MappingSearchResult result;
  result.mapping.chain_length = N;
  result.mapping.position_of.assign(level.pos.begin() + static_cast<std::ptrdiff_t>(best * n),
                                    level.pos.begin() + static_cast<std::ptrdiff_t>((best + 1) * n));
  result.last_rzz_cycle = level.cost[best];
  return result;
}

// --------------------------------------------------------------- schedule

std::size_t ScheduledCircuit::template_cycles() const {
  return std::accumulate(block_cycles.begin(), block_cycles.end(), std::size_t{0});
}

std::size_t ScheduledCircuit::last_rzz_cycle() const {
  std::size_t last = 0;
  for (const auto& layer : layers) {
    if (layer.kind == StepKind::kRzz && layer.block == 1 && !layer.gates.empty()) last = std::max(last, layer.cycle);
  }
  return last;
}

std::vector<Gate> ScheduledCircuit::gates() const {
  std::vector<Gate> out;
  for (const auto& layer : layers) out.insert(out.end(), layer.gates.begin(), layer.gates.end());
  return out;
}

ScheduledCircuit schedule(const WeightGraph& g, const Mapping& mapping, const QaoaParams& params) {
  const std::size_t n = g.num_nodes();
  if (mapping.position_of.size() != n) throw ConfigError("mapping does not cover every logical qubit");
  mapping.validate();
  if (params.depth() == 0 || params.gamma.size() != params.beta.size()) {
    throw ConfigError("QAOA parameters need equal, nonzero numbers of gammas and betas");
  }
  const std::size_t N = mapping.chain_length;
  constexpr std::size_t kEmpty = std::numeric_limits<std::size_t>::max();

  std::vector<std::size_t> edge_at(n * n, kEmpty);
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    const auto& e = g.edges()[k];
    edge_at[e.u * n + e.v] = k;
    edge_at[e.v * n + e.u] = k;
  }

  // The first cost block with edge indices instead of angles.
  struct SkeletonGate {
    std::uint32_t a, b;
    std::size_t edge;  // kEmpty for SWAP
  };
  struct SkeletonLayer {
    StepKind kind;
    std::size_t cycle;
    std::vector<SkeletonGate> gates;
  };
  std::vector<SkeletonLayer> skeleton;
  std::size_t last = 0;
  if (N >= 2 && g.num_edges() > 0) {
    const SwapTemplate tmpl(N);
    last = mapping_cost(g, mapping, ExeRTable(tmpl));
    std::vector<std::size_t> occupant(N, kEmpty);
    for (std::size_t l = 0; l < n; ++l) occupant[mapping.position_of[l]] = l;
    for (std::size_t c = 1; c <= last; ++c) {
      const auto& layer = tmpl.layers()[c - 1];
      SkeletonLayer sl{is_rzz_layer(layer.kind) ? StepKind::kRzz : StepKind::kSwap, c, {}};
      for (const auto& [a, b] : layer.pairs) {
        const auto ua = static_cast<std::uint32_t>(a);
        const auto ub = static_cast<std::uint32_t>(b);
        if (sl.kind == StepKind::kRzz) {
          if (occupant[a] != kEmpty && occupant[b] != kEmpty) {
            const std::size_t e = edge_at[occupant[a] * n + occupant[b]];
            if (e != kEmpty) sl.gates.push_back({ua, ub, e});
          }
        } else {
          sl.gates.push_back({ua, ub, kEmpty});
          std::swap(occupant[a], occupant[b]);
        }
      }
      skeleton.push_back(std::move(sl));
    }
  }

  ScheduledCircuit out;
  out.num_qubits = N;
  out.initial_layout = mapping.position_of;
  std::vector<std::size_t> where = mapping.position_of;
  std::vector<std::size_t> occupant(N, kEmpty);
  for (std::size_t l = 0; l < n; ++l) occupant[where[l]] = l;

  auto single_qubit_layer = [&](StepKind kind, std::size_t block, auto&& make) {
    ScheduledLayer layer{kind, block, 0, {}};
    for (std::size_t p = 0; p < N; ++p) {
      if (occupant[p] == kEmpty) continue;
      if (auto gate = make(static_cast<std::uint32_t>(p), occupant[p])) layer.gates.push_back(*gate);
    }
    return layer;
  };

  out.layers.push_back(single_qubit_layer(StepKind::kInit, 0, [](std::uint32_t p, std::size_t) {
    return std::optional<Gate>(Gate::h(p));
  }));

  for (std::size_t k = 0; k < params.depth(); ++k) {
    const std::size_t block = k + 1;
    const double gamma = params.gamma[k];
    auto bias = single_qubit_layer(StepKind::kBias, block, [&](std::uint32_t p, std::size_t l) {
      const double h = g.node_weights()[l];
      return h != 0.0 ? std::optional<Gate>(Gate::rz(p, 2.0 * gamma * h)) : std::nullopt;
    });
    if (!bias.gates.empty()) out.layers.push_back(std::move(bias));

    auto emit = [&](const SkeletonLayer& sl) {
      ScheduledLayer layer{sl.kind, block, sl.cycle, {}};
      for (const auto& sg : sl.gates) {
        if (sl.kind == StepKind::kRzz) {
          layer.gates.push_back(Gate::rzz(sg.a, sg.b, 2.0 * gamma * g.edges()[sg.edge].w));
        } else {
          layer.gates.push_back(Gate::swap(sg.a, sg.b));
          std::swap(occupant[sg.a], occupant[sg.b]);
        }
      }
      out.layers.push_back(std::move(layer));
    };
    if (k % 2 == 0) {
      for (const auto& sl : skeleton) emit(sl);
    } else {
      for (auto it = skeleton.rbegin(); it != skeleton.rend(); ++it) emit(*it);
    }
    out.block_cycles.push_back(last);

    for (std::size_t p = 0; p < N; ++p) {
      if (occupant[p] != kEmpty) where[occupant[p]] = p;
    }
    const double beta = params.beta[k];
    out.layers.push_back(single_qubit_layer(StepKind::kMixer, block, [&](std::uint32_t p, std::size_t) {
      return std::optional<Gate>(Gate::rx(p, 2.0 * beta));
    }));
  }
  out.final_layout = where;
  return out;
}

// ------------------------------------------------------- decomposition

PhysicalCircuit decompose_gates(const ScheduledCircuit& scheduled) {
  PhysicalCircuit pc;
  pc.num_qubits = scheduled.num_qubits;
  pc.final_layout = scheduled.final_layout;
  pc.chain.resize(scheduled.num_qubits);
  std::iota(pc.chain.begin(), pc.chain.end(), 0);

  for (const auto& layer : scheduled.layers) {
    if (layer.gates.empty()) continue;
    if (layer.kind != StepKind::kRzz && layer.kind != StepKind::kSwap) {
      pc.cycles.push_back(layer.gates);
      continue;
    }
    std::vector<Gate> first, second, third;
    for (const auto& g : layer.gates) {
      if (g.kind == GateKind::kRZZ) {
        first.push_back(Gate::cnot(g.q0, g.q1));
        second.push_back(Gate::rz(g.q1, g.angle));
        third.push_back(Gate::cnot(g.q0, g.q1));
      } else if (g.kind == GateKind::kSwap) {
        first.push_back(Gate::cnot(g.q0, g.q1));
        second.push_back(Gate::cnot(g.q1, g.q0));
        third.push_back(Gate::cnot(g.q0, g.q1));
      } else {
        first.push_back(g);
      }
    }
    for (auto* sub : {&first, &second, &third}) {
      if (!sub->empty()) pc.cycles.push_back(std::move(*sub));
    }
  }
  return pc;
}

PhysicalCircuit optimize_circuit(const PhysicalCircuit& circuit) {
  const auto gates = circuit.gates();
  std::vector<bool> removed(gates.size(), false);
  std::vector<std::vector<std::size_t>> last_on(circuit.num_qubits);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    validate_gate(g, circuit.num_qubits);
    if (g.kind == GateKind::kCnot) {
      auto& sc = last_on[g.q0];
      auto& st = last_on[g.q1];
      if (!sc.empty() && !st.empty() && sc.back() == st.back() && gates[sc.back()] == g) {
        removed[sc.back()] = true;
        removed[i] = true;
        sc.pop_back();
        st.pop_back();
        continue;
      }
      sc.push_back(i);
      st.push_back(i);
    } else {
      last_on[g.q0].push_back(i);
      if (is_two_qubit(g.kind)) last_on[g.q1].push_back(i);
    }
  }
  std::vector<Gate> kept;
  kept.reserve(gates.size());
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (!removed[i]) kept.push_back(gates[i]);
  }
  PhysicalCircuit out;
  out.num_qubits = circuit.num_qubits;
  out.final_layout = circuit.final_layout;
  out.chain = circuit.chain;
  out.cycles = asap_layers(circuit.num_qubits, kept);
  return out;
}

// ---------------------------------------------------------------- driver

CompileResult compile(const WeightGraph& g, const QaoaParams& params, std::span<const int> chain, std::size_t b_max,
                      bool mirror_pruning) {
  const std::size_t n = g.num_nodes();
  if (chain.size() < n) {
    throw CapacityError("graph with " + std::to_string(n) + " nodes needs a chain of at least " + std::to_string(n) +
                        " qubits, got " + std::to_string(chain.size()));
  }
  CompileResult result;
  auto search = search_initial_mapping(g, n, b_max, mirror_pruning);
  result.mapping = search.mapping;
  result.predicted_last_cycle = search.last_rzz_cycle;
  const auto scheduled = schedule(g, search.mapping, params);
  result.template_cycles = scheduled.template_cycles();
  auto raw = decompose_gates(scheduled);
  raw.chain.assign(chain.begin(), chain.begin() + static_cast<std::ptrdiff_t>(n));
  result.depth_before_optimization = raw.depth();
  result.cnot_before_optimization = raw.cnot_count();
  result.circuit = optimize_circuit(raw);
  return result;
}

std::string layout_to_json(const PhysicalCircuit& circuit) {
  auto list = [](const auto& values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) s += ", ";
      s += std::to_string(values[i]);
    }
    return s + "]";
  };
  std::vector<int> physical;
  for (auto p : circuit.final_layout) physical.push_back(circuit.chain.empty() ? static_cast<int>(p) : circuit.chain[p]);
  return "{\"logical_to_physical\": " + list(physical) + ", \"measure_order\": " + list(circuit.final_layout) +
         ", \"chain\": " + list(circuit.chain) + "}\n";
}

}  // namespace qaoachain
