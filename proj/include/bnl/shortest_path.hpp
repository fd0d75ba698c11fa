#pragma once

#include <vector>

#include "bnl/graph.hpp"
#include "bnl/predopt.hpp"

// Single-pair shortest path via fixed-round relaxation (|V|-1 rounds over
// all edges), minimization. Unknown parameters are the edge costs, indexed
// by the skeleton's edge order.

namespace bnl {

struct SppSkeleton {
  Graph graph;
  int source = 0;
  int target = 0;

  // in_edges[v] lists (u, edge index) for every edge u->v.
  std::vector<std::vector<std::pair<int, int>>> in_edges;

  SppSkeleton() = default;
  SppSkeleton(Graph g, int s, int t);
};

struct ShortestPath {
  using Skeleton = SppSkeleton;
  using Solution = std::vector<int>;  // vertex sequence s..t; empty when
                                      // the target is unreachable

  static constexpr Sense sense = Sense::minimize;
  static constexpr bool nonneg_params = true;

  struct Instance {
    const Skeleton* skeleton;
    Vec costs;
    Vec dist;
    std::vector<int> pred;
    int rounds_left;
  };

  struct LearnInstance {
    const Skeleton* skeleton;
    std::vector<ParamFn> costs;
    std::vector<PwlFunction> dist;
    int rounds_left;
  };

  struct Relaxed {
    Vec dist;
    std::vector<int> pred;
  };
  using BranchInfo = Relaxed;
  using LearnBranchInfo = std::vector<PwlFunction>;

  static Instance bind(const Skeleton& sk, const Vec& costs);
  static LearnInstance bind_line(const Skeleton& sk,
                                 std::vector<ParamFn> costs);
  static double objective(const Skeleton& sk, const Solution& path,
                          const Vec& costs);

  static bool base_case(const Instance& p) { return p.rounds_left == 0; }
  static SolveOutcome<ShortestPath> base_result(const Instance& p);
  static BranchInfo extract(const Instance& p);
  static std::vector<Instance> branch(const Instance& p, BranchInfo info);
  static SolveOutcome<ShortestPath> reduce(SolveOutcome<ShortestPath> a,
                                           SolveOutcome<ShortestPath>) {
    return a;  // single-branch recursion
  }

  static bool base_case_l(const LearnInstance& p) { return p.rounds_left == 0; }
  static PwlFunction base_result_l(const LearnInstance& p,
                                   const Interval& domain);
  static PiecewiseInfo<LearnBranchInfo> extract_l(const LearnInstance& p,
                                                  const Interval& domain);
  static std::vector<LearnInstance> branch_l(const LearnInstance& p,
                                             LearnBranchInfo info,
                                             const Interval&);
  static PwlFunction reduce_l(const PwlFunction& a, const PwlFunction&) {
    return a;
  }
};

SolveOutcome<ShortestPath> solve_shortest_path(const SppSkeleton& sk,
                                               const Vec& costs);
PwlFunction shortest_path_profile(const SppSkeleton& sk,
                                  std::vector<ParamFn> costs,
                                  const Interval& domain);

// Test oracle: enumerates all simple source->target paths, at most 8
// vertices. Returns +inf when the target is unreachable.
double brute_force_shortest_path(const Graph& g, int source, int target,
                                 const Vec& costs);

}  // namespace bnl
