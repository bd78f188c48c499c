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

#include "qaoachain/qaoa.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <string>
#include <thread>

#include "qaoachain/errors.hpp"
#include "qaoachain/simulator.hpp"

namespace qaoachain {

QaoaParams::QaoaParams(std::vector<double> gammas, std::vector<double> betas)
    : gamma(std::move(gammas)), beta(std::move(betas)) {
  if (gamma.empty()) throw ConfigError("QAOA depth must be at least 1");
  if (gamma.size() != beta.size()) {
    throw ConfigError("gamma has " + std::to_string(gamma.size()) + " entries but beta has " +
                      std::to_string(beta.size()));
  }
}

namespace {

void check_params(const QaoaParams& params) {
  if (params.gamma.empty() || params.gamma.size() != params.beta.size()) {
    throw ConfigError("QAOA parameters need equal, nonzero numbers of gammas and betas");
  }
}

}  // namespace

LogicalCircuit build_qaoa_circuit(const WeightGraph& g, const QaoaParams& params) {
  check_params(params);
  const auto n = static_cast<std::uint32_t>(g.num_nodes());
  LogicalCircuit c(n);
  for (std::uint32_t q = 0; q < n; ++q) c.add(Gate::h(q));
  for (std::size_t k = 0; k < params.depth(); ++k) {
    const double gamma = params.gamma[k];
    for (const auto& e : g.edges()) {
      c.add(Gate::rzz(static_cast<std::uint32_t>(e.u), static_cast<std::uint32_t>(e.v), 2.0 * gamma * e.w));
    }
    for (std::uint32_t q = 0; q < n; ++q) {
      const double h = g.node_weights()[q];
      if (h != 0.0) c.add(Gate::rz(q, 2.0 * gamma * h));
    }
    for (std::uint32_t q = 0; q < n; ++q) c.add(Gate::rx(q, 2.0 * params.beta[k]));
  }
  return c;
}

std::vector<double> cost_diagonal(const WeightGraph& g) {
  const std::size_t n = g.num_nodes();
  if (n > kMaxSimulatedQubits) throw CapacityError("cost diagonal of " + std::to_string(n) + " qubits is too large");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<double> diag(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    double c = 0.0;
    for (const auto& e : g.edges()) c += (((i >> e.u) ^ (i >> e.v)) & 1U) ? -e.w : e.w;
    for (std::size_t q = 0; q < n; ++q) c += ((i >> q) & 1U) ? -g.node_weights()[q] : g.node_weights()[q];
    diag[i] = c;
  }
  return diag;
}

double energy_of_bitstring(const WeightGraph& g, std::span<const int> spins) {
  for (int s : spins) {
    if (s != 1 && s != -1) throw ModelError("spins must be +1 or -1");
  }
  return g.energy(spins);
}

double expectation_full(const WeightGraph& g, const QaoaParams& params) {
  if (g.num_nodes() > kMaxSimulatedQubits) {
    throw CapacityError("graph with " + std::to_string(g.num_nodes()) +
                        " nodes exceeds the simulator limit; use the decomposed evaluation");
  }
  const auto state = simulate(build_qaoa_circuit(g, params));
  return state.expect_diagonal(cost_diagonal(g));
}

std::vector<TermSubproblem> decompose(const WeightGraph& g, std::size_t depth) {
  if (depth == 0) throw ConfigError("QAOA depth must be at least 1");
  const auto adj = g.adjacency();
  const std::size_t n = g.num_nodes();

  auto light_cone = [&](std::initializer_list<std::size_t> support) {
    std::vector<std::size_t> dist(n, depth + 1);
    std::vector<std::size_t> frontier;
    for (auto s : support) {
      dist[s] = 0;
      frontier.push_back(s);
    }
    for (std::size_t hop = 1; hop <= depth && !frontier.empty(); ++hop) {
      std::vector<std::size_t> next;
      for (auto u : frontier) {
        for (auto v : adj[u]) {
          if (dist[v] > hop) {
            dist[v] = hop;
            next.push_back(v);
          }
        }
      }
      frontier = std::move(next);
    }
    std::vector<std::size_t> nodes;
    for (std::size_t v = 0; v < n; ++v) {
      if (dist[v] <= depth) nodes.push_back(v);
    }
    return nodes;
  };

  auto make = [&](HamiltonianTerm term, std::vector<std::size_t> nodes) {
    TermSubproblem sp;
    sp.term = term;
    sp.subgraph = induced_subgraph(g, nodes);
    sp.local_a = static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), term.a) - nodes.begin());
    sp.local_b = static_cast<std::size_t>(std::lower_bound(nodes.begin(), nodes.end(), term.b) - nodes.begin());
    sp.to_original = std::move(nodes);
    return sp;
  };

  std::vector<TermSubproblem> out;
  for (std::size_t v = 0; v < n; ++v) {
    const double h = g.node_weights()[v];
    if (h == 0.0) continue;
    out.push_back(make({HamiltonianTerm::Kind::kNode, v, v, h}, light_cone({v})));
  }
  for (const auto& e : g.edges()) {
    if (e.w == 0.0) continue;
    out.push_back(make({HamiltonianTerm::Kind::kEdge, e.u, e.v, e.w}, light_cone({e.u, e.v})));
  }
  return out;
}

namespace {

double evaluate_term(const TermSubproblem& sp, const QaoaParams& params) {
  if (sp.subgraph.num_nodes() > kMaxSimulatedQubits) {
    const std::string name = sp.term.kind == HamiltonianTerm::Kind::kNode
                                 ? "node term " + std::to_string(sp.term.a)
                                 : "edge term (" + std::to_string(sp.term.a) + "," + std::to_string(sp.term.b) + ")";
    throw CapacityError(name + " has a light cone of " + std::to_string(sp.subgraph.num_nodes()) +
                        " qubits, above the simulator limit of " + std::to_string(kMaxSimulatedQubits));
  }
  const auto state = simulate(build_qaoa_circuit(sp.subgraph, params));
  return sp.term.kind == HamiltonianTerm::Kind::kNode ? state.expect_z(sp.local_a)
                                                      : state.expect_zz(sp.local_a, sp.local_b);
}

}  // namespace

std::vector<double> term_expectations(const std::vector<TermSubproblem>& subproblems, const QaoaParams& params,
                                      unsigned threads) {
  check_params(params);
  std::vector<double> values(subproblems.size(), 0.0);
  std::vector<std::exception_ptr> errors(subproblems.size());
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, subproblems.size()));

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < subproblems.size(); i = next++) {
      try {
        values[i] = evaluate_term(subproblems[i], params);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return values;
}

double expectation_decomposed(const WeightGraph& g, const QaoaParams& params, unsigned threads) {
  const auto subproblems = decompose(g, params.depth());
  const auto values = term_expectations(subproblems, params, threads);
  double total = 0.0;
  for (std::size_t i = 0; i < subproblems.size(); ++i) total += subproblems[i].term.weight * values[i];
  return total;
}

}  // namespace qaoachain
