#include "bnl/shortest_path.hpp"

#include <algorithm>
#include <stdexcept>

namespace bnl {

SppSkeleton::SppSkeleton(Graph g, int s, int t)
    : graph(std::move(g)), source(s), target(t) {
  validate_graph(graph);
  if (s < 0 || s >= graph.vertices || t < 0 || t >= graph.vertices) {
    throw std::invalid_argument("shortest path: endpoint out of range");
  }
  in_edges.assign(graph.vertices, {});
  for (int e = 0; e < graph.edge_count(); ++e) {
    in_edges[graph.edges[e].v].push_back({graph.edges[e].u, e});
  }
}

ShortestPath::Instance ShortestPath::bind(const Skeleton& sk,
                                          const Vec& costs) {
  if (static_cast<int>(costs.size()) != sk.graph.edge_count()) {
    throw std::invalid_argument("shortest path: cost length mismatch");
  }
  Instance p{&sk, costs, Vec(sk.graph.vertices, kInf),
             std::vector<int>(sk.graph.vertices, -1),
             std::max(0, sk.graph.vertices - 1)};
  p.dist[sk.source] = 0.0;
  return p;
}

ShortestPath::LearnInstance ShortestPath::bind_line(
    const Skeleton& sk, std::vector<ParamFn> costs) {
  if (static_cast<int>(costs.size()) != sk.graph.edge_count()) {
    throw std::invalid_argument("shortest path: cost length mismatch");
  }
  LearnInstance p{&sk, std::move(costs), {},
                  std::max(0, sk.graph.vertices - 1)};
  return p;  // dist functions are materialized once the domain is known
}

double ShortestPath::objective(const Skeleton& sk, const Solution& path,
                               const Vec& costs) {
  if (path.empty()) return kInf;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    const int u = path[i];
    const int v = path[i + 1];
    int edge = -1;
    for (const auto& [from, e] : sk.in_edges[v]) {
      if (from == u) {
        edge = e;
        break;
      }
    }
    if (edge < 0) throw std::invalid_argument("shortest path: broken path");
    total += costs[edge];
  }
  return total;
}

SolveOutcome<ShortestPath> ShortestPath::base_result(const Instance& p) {
  const Skeleton& sk = *p.skeleton;
  Solution path;
  if (ext_finite(p.dist[sk.target])) {
    int v = sk.target;
    path.push_back(v);
    while (v != sk.source) {
      v = p.pred[v];
      path.push_back(v);
    }
    std::reverse(path.begin(), path.end());
  }
  return {std::move(path), p.dist[sk.target]};
}

ShortestPath::Relaxed ShortestPath::extract(const Instance& p) {
  const Skeleton& sk = *p.skeleton;
  Relaxed next{p.dist, p.pred};
  for (int v = 0; v < sk.graph.vertices; ++v) {
    for (const auto& [u, e] : sk.in_edges[v]) {
      if (u == v) continue;
      if (!ext_finite(p.dist[u])) continue;
      const double cand = p.dist[u] + p.costs[e];
      if (cand < next.dist[v]) {
        next.dist[v] = cand;
        next.pred[v] = u;
      }
    }
  }
  return next;
}

std::vector<ShortestPath::Instance> ShortestPath::branch(const Instance& p,
                                                         BranchInfo info) {
  Instance child = p;
  child.dist = std::move(info.dist);
  child.pred = std::move(info.pred);
  child.rounds_left = p.rounds_left - 1;
  return {std::move(child)};
}

PwlFunction ShortestPath::base_result_l(const LearnInstance& p,
                                        const Interval& domain) {
  if (!p.dist.empty()) return p.dist[p.skeleton->target];
  // Degenerate single-vertex graph: no relaxation rounds at all.
  return p.skeleton->source == p.skeleton->target
             ? PwlFunction::constant(0.0, domain, 0.0)
             : PwlFunction::constant(kInf, domain, kInf);
}

PiecewiseInfo<ShortestPath::LearnBranchInfo> ShortestPath::extract_l(
    const LearnInstance& p, const Interval& domain) {
  const Skeleton& sk = *p.skeleton;
  std::vector<PwlFunction> dist = p.dist;
  if (dist.empty()) {
    dist.reserve(sk.graph.vertices);
    for (int v = 0; v < sk.graph.vertices; ++v) {
      dist.push_back(v == sk.source
                         ? PwlFunction::constant(0.0, domain, 0.0)
                         : PwlFunction::constant(kInf, domain, kInf));
    }
  }
  std::vector<PwlFunction> next;
  next.reserve(dist.size());
  for (int v = 0; v < sk.graph.vertices; ++v) {
    PwlFunction nd = dist[v];
    for (const auto& [u, e] : sk.in_edges[v]) {
      if (u == v) continue;
      const PwlFunction edge_cost =
          PwlFunction::line(p.costs[e].est, p.costs[e].truth, domain);
      nd = combine(nd, combine(dist[u], edge_cost, CombineOp::add),
                   CombineOp::min);
    }
    next.push_back(simplify(nd));
  }
  return PiecewiseInfo<LearnBranchInfo>{{{domain, std::move(next)}}};
}

std::vector<ShortestPath::LearnInstance> ShortestPath::branch_l(
    const LearnInstance& p, LearnBranchInfo info, const Interval&) {
  LearnInstance child = p;
  child.dist = std::move(info);
  child.rounds_left = p.rounds_left - 1;
  return {std::move(child)};
}

SolveOutcome<ShortestPath> solve_shortest_path(const SppSkeleton& sk,
                                               const Vec& costs) {
  return solve<ShortestPath>(ShortestPath::bind(sk, costs));
}

PwlFunction shortest_path_profile(const SppSkeleton& sk,
                                  std::vector<ParamFn> costs,
                                  const Interval& domain) {
  return learn_profile<ShortestPath>(
      ShortestPath::bind_line(sk, std::move(costs)), domain);
}

double brute_force_shortest_path(const Graph& g, int source, int target,
                                 const Vec& costs) {
  if (g.vertices > 8) {
    throw std::invalid_argument("brute_force_shortest_path: graph too large");
  }
  std::vector<std::vector<std::pair<int, int>>> out(g.vertices);
  for (int e = 0; e < g.edge_count(); ++e) {
    out[g.edges[e].u].push_back({g.edges[e].v, e});
  }
  double best = kInf;
  std::vector<bool> visited(g.vertices, false);
  // Depth-first enumeration of all simple paths.
  auto walk = [&](auto&& self, int v, double length) -> void {
    if (v == target) {
      best = std::min(best, length);
      return;
    }
    visited[v] = true;
    for (const auto& [w, e] : out[v]) {
      if (!visited[w]) self(self, w, length + costs[e]);
    }
    visited[v] = false;
  };
  if (source == target) return 0.0;
  walk(walk, source, 0.0);
  return best;
}

}  // namespace bnl
