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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qaoachain/errors.hpp"
#include "qaoachain/weight_graph.hpp"

using namespace qaoachain;

namespace {

std::string parse_error_location(std::string_view text) {
  try {
    graph_from_json(text);
  } catch (const ParseError& e) {
    return e.location();
  }
  return "<no error>";
}

}  // namespace

TEST(WeightGraph, CanonicalizesEdges) {
  WeightGraph g({0, 0, 0}, {{2, 1, 0.5}, {1, 0, -1}});
  ASSERT_EQ(g.num_edges(), 2U);
  EXPECT_EQ(g.edges()[0], (WeightedEdge{0, 1, -1}));
  EXPECT_EQ(g.edges()[1], (WeightedEdge{1, 2, 0.5}));
  EXPECT_EQ(g.degrees(), (std::vector<std::size_t>{1, 2, 1}));
}

TEST(WeightGraph, RejectsInvalid) {
  EXPECT_THROW(WeightGraph({}, {}), ModelError);
  EXPECT_THROW(WeightGraph({0, 0}, {{0, 0, 1}}), ModelError);
  EXPECT_THROW(WeightGraph({0, 0}, {{0, 2, 1}}), ModelError);
  EXPECT_THROW(WeightGraph({0, 0}, {{0, 1, 1}, {1, 0, 2}}), ModelError);
}

TEST(WeightGraph, TrivialAndEnergy) {
  EXPECT_TRUE(WeightGraph({0, 0}, {{0, 1, 0}}).is_trivial());
  WeightGraph g({0.25, 0}, {{0, 1, 2}});
  EXPECT_FALSE(g.is_trivial());
  std::vector<int> s{1, -1};
  EXPECT_DOUBLE_EQ(g.energy(s), -2 + 0.25);
}

TEST(WeightGraph, InducedSubgraphKeepsOrder) {
  WeightGraph g({1, 2, 3, 4}, {{0, 1, 1}, {1, 2, 2}, {2, 3, 3}, {0, 3, 4}}, 9);
  const std::vector<std::size_t> nodes{3, 0, 1};
  const auto sub = induced_subgraph(g, nodes);
  EXPECT_EQ(sub.node_weights(), (std::vector<double>{4, 1, 2}));
  ASSERT_EQ(sub.num_edges(), 2U);
  EXPECT_EQ(sub.edges()[0], (WeightedEdge{0, 1, 4}));
  EXPECT_EQ(sub.edges()[1], (WeightedEdge{1, 2, 1}));
  EXPECT_EQ(sub.offset(), 0.0);
}

TEST(GraphJson, CanonicalRoundTripIsByteIdentical) {
  WeightGraph k2({0.5, 0.5}, {{0, 1, 0.5}}, 0.5);
  const std::string text = graph_to_json(k2);
  EXPECT_EQ(graph_from_json(text), k2);
  EXPECT_EQ(graph_to_json(graph_from_json(text)), text);

  WeightGraph odd({0.1, -1.0 / 3}, {{0, 1, 1e-300}}, 2.0 / 3);
  EXPECT_EQ(graph_from_json(graph_to_json(odd)), odd);
}

TEST(GraphJson, FileRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "qaoachain_graph_io";
  std::filesystem::create_directories(dir);
  WeightGraph g({0, 1, 0}, {{0, 1, 1}, {1, 2, -2}}, 3);
  write_graph(dir / "g.json", g);
  EXPECT_EQ(read_graph(dir / "g.json"), g);
  std::filesystem::remove_all(dir);
}

TEST(GraphJson, ErrorsCarryLocation) {
  EXPECT_EQ(parse_error_location(R"({"nodes": [{"id": 0, "w": 0}], "edges": [{"u": 0, "v": 3, "w": 1}]})"),
            "$.edges[0].v");
  EXPECT_EQ(parse_error_location(R"({"nodes": [], "edges": []})"), "$.nodes");
  EXPECT_EQ(parse_error_location(R"({"nodes": [{"id": 0, "w": 0, "colour": 1}], "edges": []})"), "$.nodes[0]");
  EXPECT_EQ(parse_error_location(R"({"nodes": [{"id": 0, "w": 0}], "edges": [], "extra": 1})"), "$");
  EXPECT_NE(parse_error_location("{\"nodes\": ["), "<no error>");
}

TEST(GraphJson, MissingFileNamesPath) {
  try {
    read_graph("/nonexistent/graph.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/graph.json"), std::string::npos);
  }
}
