#include "bnl/graph.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace bnl {

std::vector<int> in_degrees(const Graph& g) {
  std::vector<int> deg(g.vertices, 0);
  for (const GraphEdge& e : g.edges) ++deg[e.v];
  return deg;
}

std::vector<int> out_degrees(const Graph& g) {
  std::vector<int> deg(g.vertices, 0);
  for (const GraphEdge& e : g.edges) ++deg[e.u];
  return deg;
}

void validate_graph(const Graph& g) {
  if (g.vertices < 0) throw std::invalid_argument("graph: negative size");
  if (!g.capacities.empty() && g.capacities.size() != g.edges.size()) {
    throw std::invalid_argument("graph: capacity list length mismatch");
  }
  std::set<std::pair<int, int>> seen;
  for (const GraphEdge& e : g.edges) {
    if (e.u < 0 || e.u >= g.vertices || e.v < 0 || e.v >= g.vertices) {
      throw std::invalid_argument("graph: edge endpoint out of range");
    }
    if (e.u == e.v) throw std::invalid_argument("graph: self-loop");
    if (!seen.insert({e.u, e.v}).second) {
      throw std::invalid_argument(
          "graph: duplicate directed edge " + std::to_string(e.u) + "->" +
          std::to_string(e.v));
    }
  }
}

}  // namespace bnl
