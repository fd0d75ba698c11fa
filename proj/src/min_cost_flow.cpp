#include "bnl/min_cost_flow.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bnl {

namespace {

// Residual arcs live on vertex pairs: forward arcs at the original cost,
// reverse arcs at the negated cost.
struct ResidualArc {
  int u;
  int v;
  int edge;
  bool forward;
};

std::vector<ResidualArc> residual_arcs(const McfpSkeleton& sk) {
  std::vector<ResidualArc> arcs;
  arcs.reserve(2 * sk.graph.edges.size());
  for (int e = 0; e < sk.graph.edge_count(); ++e) {
    const auto [u, v] = sk.graph.edges[e];
    arcs.push_back({u, v, e, true});
    arcs.push_back({v, u, e, false});
  }
  return arcs;
}

bool residual_reachable(const McfpSkeleton& sk, const Vec& residual) {
  const int n = sk.graph.vertices;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{sk.source};
  seen[sk.source] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    if (u == sk.sink) return true;
    for (int v = 0; v < n; ++v) {
      if (!seen[v] && residual[static_cast<std::size_t>(u) * n + v] > 0.0) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return false;
}

// Fixed-round relaxation over positive-residual arcs with strict-improvement
// predecessor updates. The cost functor maps (edge, forward) to a scalar.
template <typename CostFn>
std::vector<int> residual_shortest_path(const McfpSkeleton& sk,
                                        const Vec& residual, CostFn cost) {
  const int n = sk.graph.vertices;
  const auto arcs = residual_arcs(sk);
  Vec dist(n, kInf);
  std::vector<int> pred(n, -1);
  dist[sk.source] = 0.0;
  for (int round = 1; round < n; ++round) {
    Vec next = dist;
    std::vector<int> next_pred = pred;
    for (const ResidualArc& a : arcs) {
      if (residual[static_cast<std::size_t>(a.u) * n + a.v] <= 0.0) continue;
      if (!ext_finite(dist[a.u])) continue;
      const double cand = dist[a.u] + cost(a.edge, a.forward);
      if (cand < next[a.v]) {
        next[a.v] = cand;
        next_pred[a.v] = a.u;
      }
    }
    dist = std::move(next);
    pred = std::move(next_pred);
  }
  if (!ext_finite(dist[sk.sink])) {
    throw std::logic_error("min cost flow: expected an augmenting path");
  }
  return pred;
}

// Walks the predecessor array from the sink, returning path arcs.
std::vector<std::pair<int, int>> path_arcs(const McfpSkeleton& sk,
                                           const std::vector<int>& pred) {
  std::vector<std::pair<int, int>> arcs;
  int v = sk.sink;
  int guard = sk.graph.vertices + 1;
  while (v != sk.source) {
    if (pred[v] < 0 || --guard < 0) {
      throw std::logic_error("min cost flow: broken predecessor chain");
    }
    arcs.push_back({pred[v], v});
    v = pred[v];
  }
  std::reverse(arcs.begin(), arcs.end());
  return arcs;
}

// Applies one augmentation along pred: updates residuals, per-edge flows and
// the remaining demand. Shared by the solve and learn branches.
template <typename P>
void apply_augmentation(P& p, const std::vector<int>& pred) {
  const McfpSkeleton& sk = *p.skeleton;
  const int n = sk.graph.vertices;
  const auto arcs = path_arcs(sk, pred);
  double block = p.remaining;
  for (const auto& [u, v] : arcs) {
    block = std::min(block, p.residual[static_cast<std::size_t>(u) * n + v]);
  }
  for (const auto& [u, v] : arcs) {
    p.residual[static_cast<std::size_t>(u) * n + v] -= block;
    p.residual[static_cast<std::size_t>(v) * n + u] += block;
    const int fwd = sk.fwd(u, v);
    if (fwd >= 0) {
      p.flow[fwd] += block;
    } else {
      p.flow[sk.fwd(v, u)] -= block;
    }
  }
  p.remaining -= block;
}

}  // namespace

McfpSkeleton::McfpSkeleton(Graph g, int source_, int sink_, double demand_)
    : graph(std::move(g)), source(source_), sink(sink_), demand(demand_) {
  validate_graph(graph);
  const int n = graph.vertices;
  if (source < 0 || source >= n || sink < 0 || sink >= n || source == sink) {
    throw std::invalid_argument("min cost flow: bad source/sink");
  }
  if (demand < 0.0) {
    throw std::invalid_argument("min cost flow: negative demand");
  }
  if (graph.capacities.size() != graph.edges.size()) {
    throw std::invalid_argument("min cost flow: capacities required");
  }
  for (double c : graph.capacities) {
    if (c < 0.0) throw std::invalid_argument("min cost flow: negative capacity");
  }
  forward.assign(static_cast<std::size_t>(n) * n, -1);
  for (int e = 0; e < graph.edge_count(); ++e) {
    const auto [u, v] = graph.edges[e];
    if (fwd(v, u) >= 0) {
      throw std::invalid_argument(
          "min cost flow: anti-parallel edge pair not supported");
    }
    forward[static_cast<std::size_t>(u) * n + v] = e;
  }
}

MinCostFlow::Instance MinCostFlow::bind(const Skeleton& sk, const Vec& costs) {
  if (static_cast<int>(costs.size()) != sk.graph.edge_count()) {
    throw std::invalid_argument("min cost flow: cost length mismatch");
  }
  const int n = sk.graph.vertices;
  Instance p{&sk, costs, Vec(static_cast<std::size_t>(n) * n, 0.0),
             Vec(sk.graph.edges.size(), 0.0), sk.demand};
  for (int e = 0; e < sk.graph.edge_count(); ++e) {
    const auto [u, v] = sk.graph.edges[e];
    p.residual[static_cast<std::size_t>(u) * n + v] = sk.graph.capacities[e];
  }
  return p;
}

MinCostFlow::LearnInstance MinCostFlow::bind_line(const Skeleton& sk,
                                                  std::vector<ParamFn> costs) {
  if (static_cast<int>(costs.size()) != sk.graph.edge_count()) {
    throw std::invalid_argument("min cost flow: cost length mismatch");
  }
  const int n = sk.graph.vertices;
  LearnInstance p{&sk, std::move(costs),
                  Vec(static_cast<std::size_t>(n) * n, 0.0),
                  Vec(sk.graph.edges.size(), 0.0), sk.demand};
  for (int e = 0; e < sk.graph.edge_count(); ++e) {
    const auto [u, v] = sk.graph.edges[e];
    p.residual[static_cast<std::size_t>(u) * n + v] = sk.graph.capacities[e];
  }
  return p;
}

double MinCostFlow::objective(const Skeleton&, const Solution& plan,
                              const Vec& costs) {
  double total = 0.0;
  for (std::size_t e = 0; e < costs.size(); ++e) {
    total += plan.edge_flow[e] * costs[e];
  }
  return total;
}

bool MinCostFlow::base_case(const Instance& p) {
  return p.remaining <= 0.0 || !residual_reachable(*p.skeleton, p.residual);
}

SolveOutcome<MinCostFlow> MinCostFlow::base_result(const Instance& p) {
  double total = 0.0;
  for (std::size_t e = 0; e < p.flow.size(); ++e) {
    total += p.flow[e] * p.costs[e];
  }
  return {FlowPlan{p.flow, p.remaining}, total};
}

MinCostFlow::BranchInfo MinCostFlow::extract(const Instance& p) {
  return residual_shortest_path(
      *p.skeleton, p.residual, [&p](int e, bool forward) {
        return forward ? p.costs[e] : -p.costs[e];
      });
}

std::vector<MinCostFlow::Instance> MinCostFlow::branch(const Instance& p,
                                                       BranchInfo pred) {
  Instance child = p;
  apply_augmentation(child, pred);
  return {std::move(child)};
}

bool MinCostFlow::base_case_l(const LearnInstance& p) {
  return p.remaining <= 0.0 || !residual_reachable(*p.skeleton, p.residual);
}

PwlFunction MinCostFlow::base_result_l(const LearnInstance& p,
                                       const Interval& domain) {
  LinearFn est{0.0, 0.0};
  double payload = 0.0;
  for (std::size_t e = 0; e < p.flow.size(); ++e) {
    est.slope += p.flow[e] * p.costs[e].est.slope;
    est.intercept += p.flow[e] * p.costs[e].est.intercept;
    payload += p.flow[e] * p.costs[e].truth;
  }
  return PwlFunction::line(est, payload, domain);
}

PiecewiseInfo<MinCostFlow::LearnBranchInfo> MinCostFlow::extract_l(
    const LearnInstance& p, const Interval& domain) {
  const Skeleton& sk = *p.skeleton;
  const int n = sk.graph.vertices;
  const auto arcs = residual_arcs(sk);

  // Piecewise relaxation, collecting every interior breakpoint that shows up
  // in any round's distance functions; predecessor choices can only change
  // across those points.
  std::vector<PwlFunction> dist;
  dist.reserve(n);
  for (int v = 0; v < n; ++v) {
    dist.push_back(v == sk.source
                       ? PwlFunction::constant(0.0, domain, 0.0)
                       : PwlFunction::constant(kInf, domain, kInf));
  }
  std::vector<double> cuts;
  for (int round = 1; round < n; ++round) {
    std::vector<PwlFunction> next = dist;
    for (const ResidualArc& a : arcs) {
      if (p.residual[static_cast<std::size_t>(a.u) * n + a.v] <= 0.0) continue;
      const ParamFn& c = p.costs[a.edge];
      const LinearFn est =
          a.forward ? c.est : LinearFn{-c.est.slope, -c.est.intercept};
      const PwlFunction arc_cost =
          PwlFunction::line(est, a.forward ? c.truth : -c.truth, domain);
      next[a.v] = combine(next[a.v],
                          combine(dist[a.u], arc_cost, CombineOp::add),
                          CombineOp::min);
    }
    for (int v = 0; v < n; ++v) {
      next[v] = simplify(next[v]);
      for (double b : next[v].breakpoints()) cuts.push_back(b);
    }
    dist = std::move(next);
  }

  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  // Partition the working interval, dropping cuts that would create slivers.
  std::vector<double> bounds{domain.lo};
  for (double c : cuts) {
    if (c <= domain.lo || c >= domain.hi) continue;
    if (c - bounds.back() <= 1e-11 * std::max(1.0, std::fabs(c))) continue;
    bounds.push_back(c);
  }
  bounds.push_back(domain.hi);

  PiecewiseInfo<LearnBranchInfo> cells;
  cells.cells.reserve(bounds.size() - 1);
  for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
    const Interval cell{bounds[i], bounds[i + 1]};
    const double at = cell.representative();
    auto pred = residual_shortest_path(
        sk, p.residual, [&p, at](int e, bool forward) {
          const double value = p.costs[e].est(at);
          return forward ? value : -value;
        });
    cells.cells.push_back({cell, std::move(pred)});
  }
  return cells;
}

std::vector<MinCostFlow::LearnInstance> MinCostFlow::branch_l(
    const LearnInstance& p, LearnBranchInfo pred, const Interval&) {
  LearnInstance child = p;
  apply_augmentation(child, pred);
  return {std::move(child)};
}

SolveOutcome<MinCostFlow> solve_min_cost_flow(const McfpSkeleton& sk,
                                              const Vec& costs) {
  return solve<MinCostFlow>(MinCostFlow::bind(sk, costs));
}

PwlFunction min_cost_flow_profile(const McfpSkeleton& sk,
                                  std::vector<ParamFn> costs,
                                  const Interval& domain) {
  return learn_profile<MinCostFlow>(
      MinCostFlow::bind_line(sk, std::move(costs)), domain);
}

BruteFlowResult brute_force_min_cost_flow(const Graph& g, const Vec& costs,
                                          int source, int sink,
                                          double demand) {
  const int m = g.edge_count();
  if (m > 6) {
    throw std::invalid_argument("brute_force_min_cost_flow: too many edges");
  }
  double cap_total = 0.0;
  for (double c : g.capacities) {
    if (c < 0.0 || c > 20.0 || c != std::floor(c)) {
      throw std::invalid_argument(
          "brute_force_min_cost_flow: capacities must be integers in [0,20]");
    }
    cap_total += c;
  }

  // For every vertex, the last edge index touching it (for early
  // conservation checks) and suffix capacity sums (for imbalance pruning).
  const int n = g.vertices;
  std::vector<int> last_touch(n, -1);
  for (int e = 0; e < m; ++e) {
    last_touch[g.edges[e].u] = std::max(last_touch[g.edges[e].u], e);
    last_touch[g.edges[e].v] = std::max(last_touch[g.edges[e].v], e);
  }
  std::vector<Vec> suffix_cap(n, Vec(m + 1, 0.0));
  for (int v = 0; v < n; ++v) {
    for (int e = m - 1; e >= 0; --e) {
      suffix_cap[v][e] = suffix_cap[v][e + 1];
      if (g.edges[e].u == v || g.edges[e].v == v) {
        suffix_cap[v][e] += g.capacities[e];
      }
    }
  }

  const int max_units = static_cast<int>(cap_total);
  Vec best(max_units + 1, kInf);
  Vec net(n, 0.0);

  auto enumerate = [&](auto&& self, int e, double cost) -> void {
    if (e == m) {
      for (int v = 0; v < n; ++v) {
        if (v != source && v != sink && net[v] != 0.0) return;
      }
      if (net[source] < 0.0 || net[source] != -net[sink]) return;
      const int routed = static_cast<int>(net[source]);
      best[routed] = std::min(best[routed], cost);
      return;
    }
    const auto [u, v] = g.edges[e];
    for (double f = 0.0; f <= g.capacities[e]; f += 1.0) {
      net[u] += f;
      net[v] -= f;
      bool ok = true;
      for (int w : {u, v}) {
        if (w == source || w == sink) continue;
        if (last_touch[w] == e && net[w] != 0.0) ok = false;
        if (std::fabs(net[w]) > suffix_cap[w][e + 1]) ok = false;
      }
      if (ok) self(self, e + 1, cost + f * costs[e]);
      net[u] -= f;
      net[v] += f;
    }
  };
  enumerate(enumerate, 0, 0.0);

  int max_routed = 0;
  for (int r = 0; r <= max_units; ++r) {
    if (ext_finite(best[r])) max_routed = r;
  }
  const int target = static_cast<int>(std::min(demand, double(max_routed)));
  return BruteFlowResult{best[target], double(target)};
}

}  // namespace bnl
