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

#include "qaoachain/weight_graph.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "qaoachain/errors.hpp"

namespace qaoachain {

WeightGraph::WeightGraph(std::vector<double> node_weights, std::vector<WeightedEdge> edges,
                         double offset)
    : node_weights_(std::move(node_weights)), edges_(std::move(edges)), offset_(offset) {
  if (node_weights_.empty()) throw ModelError("weight graph needs at least one node");
  const std::size_t n = node_weights_.size();
  for (auto& e : edges_) {
    if (e.u >= n || e.v >= n) {
      throw ModelError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                       ") references a missing node");
    }
    if (e.u == e.v) throw ModelError("self loop on node " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (edges_[k].u == edges_[k - 1].u && edges_[k].v == edges_[k - 1].v) {
      throw ModelError("duplicate edge (" + std::to_string(edges_[k].u) + "," +
                       std::to_string(edges_[k].v) + ")");
    }
  }
}

std::vector<std::vector<std::size_t>> WeightGraph::adjacency() const {
  std::vector<std::vector<std::size_t>> adj(num_nodes());
  for (const auto& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& row : adj) std::sort(row.begin(), row.end());
  return adj;
}

std::vector<std::size_t> WeightGraph::degrees() const {
  std::vector<std::size_t> deg(num_nodes(), 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  return deg;
}

double WeightGraph::energy(std::span<const int> spins) const {
  if (spins.size() != num_nodes()) {
    throw ModelError("spin vector has length " + std::to_string(spins.size()) + ", graph has " +
                     std::to_string(num_nodes()) + " nodes");
  }
  double e = 0.0;
  for (const auto& edge : edges_) e += edge.w * spins[edge.u] * spins[edge.v];
  for (std::size_t i = 0; i < node_weights_.size(); ++i) e += node_weights_[i] * spins[i];
  return e;
}

bool WeightGraph::is_trivial() const {
  return std::all_of(node_weights_.begin(), node_weights_.end(), [](double w) { return w == 0.0; }) &&
         std::all_of(edges_.begin(), edges_.end(), [](const WeightedEdge& e) { return e.w == 0.0; });
}

WeightGraph weight_graph_from_ising(const IsingModel& model) {
  std::vector<WeightedEdge> edges;
  for (const auto& [key, coupling] : model.j) {
    if (coupling != 0.0) edges.push_back({key.first, key.second, coupling});
  }
  return WeightGraph(model.h, std::move(edges), model.offset);
}

WeightGraph induced_subgraph(const WeightGraph& g, std::span<const std::size_t> nodes) {
  std::vector<std::size_t> local(g.num_nodes(), g.num_nodes());
  std::vector<double> weights;
  weights.reserve(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    local[nodes[k]] = k;
    weights.push_back(g.node_weights()[nodes[k]]);
  }
  std::vector<WeightedEdge> edges;
  for (const auto& e : g.edges()) {
    if (local[e.u] != g.num_nodes() && local[e.v] != g.num_nodes()) {
      edges.push_back({local[e.u], local[e.v], e.w});
    }
  }
  return WeightGraph(std::move(weights), std::move(edges));
}

namespace {

std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

using nlohmann::json;

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'", where);
  return *it;
}

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return it.key() == k; })) {
      throw ParseError("unknown field '" + it.key() + "'", where);
    }
  }
}

double real_field(const json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_number()) throw ParseError("expected a number", where + "." + key);
  return v.get<double>();
}

std::size_t index_field(const json& obj, const char* key, const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw ParseError("expected a non-negative integer", where + "." + key);
  }
  return v.get<std::size_t>();
}

}  // namespace

std::string graph_to_json(const WeightGraph& g) {
  std::string out = "{\"offset\": " + format_real(g.offset()) + ", \"nodes\": [";
  for (std::size_t i = 0; i < g.num_nodes(); ++i) {
    if (i) out += ", ";
    out += "{\"id\": " + std::to_string(i) + ", \"w\": " + format_real(g.node_weights()[i]) + "}";
  }
  out += "], \"edges\": [";
  for (std::size_t k = 0; k < g.num_edges(); ++k) {
    const auto& e = g.edges()[k];
    if (k) out += ", ";
    out += "{\"u\": " + std::to_string(e.u) + ", \"v\": " + std::to_string(e.v) +
           ", \"w\": " + format_real(e.w) + "}";
  }
  out += "]}\n";
  return out;
}

WeightGraph graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(e.what(), "byte " + std::to_string(e.byte));
  }
  if (!doc.is_object()) throw ParseError("expected a JSON object", "$");
  reject_unknown(doc, {"offset", "nodes", "edges"}, "$");

  double offset = 0.0;
  if (doc.contains("offset")) offset = real_field(doc, "offset", "$");

  const auto& nodes = require(doc, "nodes", "$");
  if (!nodes.is_array()) throw ParseError("expected an array", "$.nodes");
  if (nodes.empty()) throw ParseError("graph needs at least one node", "$.nodes");
  std::vector<double> weights(nodes.size(), 0.0);
  std::vector<bool> seen(nodes.size(), false);
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    const std::string where = "$.nodes[" + std::to_string(k) + "]";
    const auto& node = nodes[k];
    if (!node.is_object()) throw ParseError("expected an object", where);
    reject_unknown(node, {"id", "w"}, where);
    const std::size_t id = index_field(node, "id", where);
    if (id >= nodes.size()) throw ParseError("node ids must be 0..n-1", where + ".id");
    if (seen[id]) throw ParseError("duplicate node id " + std::to_string(id), where + ".id");
    seen[id] = true;
    weights[id] = node.contains("w") ? real_field(node, "w", where) : 0.0;
  }

  std::vector<WeightedEdge> edges;
  if (doc.contains("edges")) {
    const auto& list = doc["edges"];
    if (!list.is_array()) throw ParseError("expected an array", "$.edges");
    std::set<std::pair<std::size_t, std::size_t>> keys;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const std::string where = "$.edges[" + std::to_string(k) + "]";
      const auto& edge = list[k];
      if (!edge.is_object()) throw ParseError("expected an object", where);
      reject_unknown(edge, {"u", "v", "w"}, where);
      std::size_t u = index_field(edge, "u", where);
      std::size_t v = index_field(edge, "v", where);
      const double w = edge.contains("w") ? real_field(edge, "w", where) : 1.0;
      if (u >= weights.size()) throw ParseError("dangling endpoint " + std::to_string(u), where + ".u");
      if (v >= weights.size()) throw ParseError("dangling endpoint " + std::to_string(v), where + ".v");
      if (u == v) throw ParseError("self loop", where);
      if (u > v) std::swap(u, v);
      if (!keys.insert({u, v}).second) throw ParseError("duplicate edge", where);
      edges.push_back({u, v, w});
    }
  }
  return WeightGraph(std::move(weights), std::move(edges), offset);
}

WeightGraph read_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open graph file '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return graph_from_json(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(e.message(), path.string() + ":" + e.location());
  }
}

void write_graph(const std::filesystem::path& path, const WeightGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write graph file '" + path.string() + "'");
  out << graph_to_json(g);
}

ProblemGraph problem_graph_from(const WeightGraph& g) {
  return ProblemGraph{g.num_nodes(), g.edges()};
}

}  // namespace qaoachain
