#pragma once

#include <vector>

#include "bnl/graph.hpp"
#include "bnl/predopt.hpp"

// Capacitated min-cost flow by successive cheapest augmenting paths on the
// residual graph (reverse arcs carry negated cost), minimization. Unknown
// parameters are the forward-edge unit costs. Routing stops once the demand
// is met or no augmenting path remains; in the latter case the result
// reports the shortfall.

namespace bnl {

struct McfpSkeleton {
  Graph graph;  // forward edges; capacities required
  int source = 0;
  int sink = 0;
  double demand = 0.0;

  std::vector<int> forward;  // vertices x vertices -> edge id or -1

  McfpSkeleton() = default;
  McfpSkeleton(Graph g, int source, int sink, double demand);

  int fwd(int u, int v) const {
    return forward[static_cast<std::size_t>(u) * graph.vertices + v];
  }
};

struct FlowPlan {
  Vec edge_flow;      // per forward edge
  double shortfall;   // demand left unrouted (0 when feasible)
};

struct MinCostFlow {
  using Skeleton = McfpSkeleton;
  using Solution = FlowPlan;

  static constexpr Sense sense = Sense::minimize;
  static constexpr bool nonneg_params = true;

  struct Instance {
    const Skeleton* skeleton;
    Vec costs;      // per forward edge
    Vec residual;   // vertices x vertices
    Vec flow;       // per forward edge
    double remaining;
  };

  struct LearnInstance {
    const Skeleton* skeleton;
    std::vector<ParamFn> costs;
    Vec residual;
    Vec flow;
    double remaining;
  };

  using BranchInfo = std::vector<int>;       // predecessor array for the path
  using LearnBranchInfo = std::vector<int>;  // per-cell predecessor array

  static Instance bind(const Skeleton& sk, const Vec& costs);
  static LearnInstance bind_line(const Skeleton& sk,
                                 std::vector<ParamFn> costs);
  static double objective(const Skeleton& sk, const Solution& plan,
                          const Vec& costs);

  static bool base_case(const Instance& p);
  static SolveOutcome<MinCostFlow> base_result(const Instance& p);
  static BranchInfo extract(const Instance& p);
  static std::vector<Instance> branch(const Instance& p, BranchInfo pred);
  static SolveOutcome<MinCostFlow> reduce(SolveOutcome<MinCostFlow> a,
                                          SolveOutcome<MinCostFlow>) {
    return a;  // single-branch recursion
  }

  static bool base_case_l(const LearnInstance& p);
  static PwlFunction base_result_l(const LearnInstance& p,
                                   const Interval& domain);
  static PiecewiseInfo<LearnBranchInfo> extract_l(const LearnInstance& p,
                                                  const Interval& domain);
  static std::vector<LearnInstance> branch_l(const LearnInstance& p,
                                             LearnBranchInfo pred,
                                             const Interval& cell);
  static PwlFunction reduce_l(const PwlFunction& a, const PwlFunction&) {
    return a;
  }
};

SolveOutcome<MinCostFlow> solve_min_cost_flow(const McfpSkeleton& sk,
                                              const Vec& costs);
PwlFunction min_cost_flow_profile(const McfpSkeleton& sk,
                                  std::vector<ParamFn> costs,
                                  const Interval& domain);

// Test oracle: exhaustive enumeration of integral per-edge flows (at most
// 6 edges, integral capacities at most 20). Routes min(demand, max-flow)
// units at minimum cost; routed < demand marks infeasibility.
struct BruteFlowResult {
  double cost;
  double routed;
};
BruteFlowResult brute_force_min_cost_flow(const Graph& g, const Vec& costs,
                                          int source, int sink, double demand);

}  // namespace bnl
