#pragma once

#include <string>
#include <vector>

#include "bnl/types.hpp"

namespace bnl {

struct GraphEdge {
  int u = 0;
  int v = 0;
};

// Directed edge list with ids 0..vertices-1. Capacities are optional and,
// when present, parallel to the edge list.
struct Graph {
  int vertices = 0;
  std::vector<GraphEdge> edges;
  Vec capacities;

  int edge_count() const { return static_cast<int>(edges.size()); }
};

std::vector<int> in_degrees(const Graph& g);
std::vector<int> out_degrees(const Graph& g);

// Throws std::invalid_argument on out-of-range ids, self-loops or duplicate
// directed edges.
void validate_graph(const Graph& g);

}  // namespace bnl
