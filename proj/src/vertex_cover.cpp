#include "bnl/vertex_cover.hpp"

#include <stdexcept>

namespace bnl {

McvcSkeleton::McvcSkeleton(Graph g) : graph(std::move(g)) {
  validate_graph(graph);
  if (graph.vertices > 62) {
    throw std::invalid_argument("vertex cover: too many vertices for bitmask");
  }
}

VertexCover::Instance VertexCover::bind(const Skeleton& sk, const Vec& costs) {
  if (static_cast<int>(costs.size()) != sk.graph.vertices) {
    throw std::invalid_argument("vertex cover: cost length mismatch");
  }
  return Instance{&sk, costs, sk.graph.vertices, 0u};
}

VertexCover::LearnInstance VertexCover::bind_line(const Skeleton& sk,
                                                  std::vector<ParamFn> costs) {
  if (static_cast<int>(costs.size()) != sk.graph.vertices) {
    throw std::invalid_argument("vertex cover: cost length mismatch");
  }
  return LearnInstance{&sk, std::move(costs), sk.graph.vertices, 0u};
}

bool VertexCover::covers(const Skeleton& sk, std::uint64_t chosen) {
  for (const GraphEdge& e : sk.graph.edges) {
    if (!(chosen & ((1ULL << e.u) | (1ULL << e.v)))) return false;
  }
  return true;
}

double VertexCover::objective(const Skeleton& sk, Solution chosen,
                              const Vec& costs) {
  if (!covers(sk, chosen)) return kInf;
  double total = 0.0;
  for (std::size_t v = 0; v < costs.size(); ++v) {
    if (chosen & (1ULL << v)) total += costs[v];
  }
  return total;
}

SolveOutcome<VertexCover> VertexCover::base_result(const Instance& p) {
  if (!covers(*p.skeleton, p.chosen)) return {p.chosen, kInf};
  double total = 0.0;
  for (std::size_t v = 0; v < p.costs.size(); ++v) {
    if (p.chosen & (1ULL << v)) total += p.costs[v];
  }
  return {p.chosen, total};
}

std::vector<VertexCover::Instance> VertexCover::branch(const Instance& p,
                                                       BranchInfo) {
  const int vertex = p.remaining - 1;
  Instance skip = p;
  skip.remaining = vertex;
  Instance take = p;
  take.remaining = vertex;
  take.chosen |= (1ULL << vertex);
  return {skip, take};
}

PwlFunction VertexCover::base_result_l(const LearnInstance& p,
                                       const Interval& domain) {
  if (!covers(*p.skeleton, p.chosen)) {
    return PwlFunction::constant(kInf, domain, kInf);
  }
  LinearFn est{0.0, 0.0};
  double payload = 0.0;
  for (std::size_t v = 0; v < p.costs.size(); ++v) {
    if (p.chosen & (1ULL << v)) {
      est.slope += p.costs[v].est.slope;
      est.intercept += p.costs[v].est.intercept;
      payload += p.costs[v].truth;
    }
  }
  return PwlFunction::line(est, payload, domain);
}

std::vector<VertexCover::LearnInstance> VertexCover::branch_l(
    const LearnInstance& p, LearnBranchInfo, const Interval&) {
  const int vertex = p.remaining - 1;
  LearnInstance skip = p;
  skip.remaining = vertex;
  LearnInstance take = p;
  take.remaining = vertex;
  take.chosen |= (1ULL << vertex);
  return {skip, take};
}

SolveOutcome<VertexCover> solve_vertex_cover(const McvcSkeleton& sk,
                                             const Vec& costs) {
  return solve<VertexCover>(VertexCover::bind(sk, costs));
}

PwlFunction vertex_cover_profile(const McvcSkeleton& sk,
                                 std::vector<ParamFn> costs,
                                 const Interval& domain) {
  return learn_profile<VertexCover>(
      VertexCover::bind_line(sk, std::move(costs)), domain);
}

double brute_force_vertex_cover(const Graph& g, const Vec& costs) {
  if (g.vertices > 16) {
    throw std::invalid_argument("brute_force_vertex_cover: graph too large");
  }
  const std::uint32_t subsets = 1u << g.vertices;
  double best = kInf;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    bool ok = true;
    for (const GraphEdge& e : g.edges) {
      if (!(mask & ((1u << e.u) | (1u << e.v)))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    double total = 0.0;
    for (int v = 0; v < g.vertices; ++v) {
      if (mask & (1u << v)) total += costs[v];
    }
    best = std::min(best, total);
  }
  return best;
}

}  // namespace bnl
