#pragma once

#include <cstdint>
#include <vector>

#include "bnl/graph.hpp"
#include "bnl/predopt.hpp"

// Minimum-cost vertex cover by exhaustive binary branching over vertices
// (take / skip), minimization; leaves with uncovered edges score +inf.
// Unknown parameters are the vertex costs. Edge direction is ignored.

namespace bnl {

struct McvcSkeleton {
  Graph graph;

  McvcSkeleton() = default;
  explicit McvcSkeleton(Graph g);
};

struct VertexCover {
  using Skeleton = McvcSkeleton;
  using Solution = std::uint64_t;  // chosen-vertex bitmask

  static constexpr Sense sense = Sense::minimize;
  static constexpr bool nonneg_params = true;

  struct Instance {
    const Skeleton* skeleton;
    Vec costs;
    int remaining;  // vertices [0, remaining) still undecided
    std::uint64_t chosen;
  };

  struct LearnInstance {
    const Skeleton* skeleton;
    std::vector<ParamFn> costs;
    int remaining;
    std::uint64_t chosen;
  };

  struct NoInfo {};
  using BranchInfo = NoInfo;
  using LearnBranchInfo = NoInfo;

  static Instance bind(const Skeleton& sk, const Vec& costs);
  static LearnInstance bind_line(const Skeleton& sk, std::vector<ParamFn> costs);
  static double objective(const Skeleton& sk, Solution chosen,
                          const Vec& costs);
  static bool covers(const Skeleton& sk, std::uint64_t chosen);

  static bool base_case(const Instance& p) { return p.remaining == 0; }
  static SolveOutcome<VertexCover> base_result(const Instance& p);
  static BranchInfo extract(const Instance&) { return {}; }
  static std::vector<Instance> branch(const Instance& p, BranchInfo);
  static SolveOutcome<VertexCover> reduce(SolveOutcome<VertexCover> a,
                                          SolveOutcome<VertexCover> b) {
    return b.objective < a.objective ? b : a;
  }

  static bool base_case_l(const LearnInstance& p) { return p.remaining == 0; }
  static PwlFunction base_result_l(const LearnInstance& p,
                                   const Interval& domain);
  static PiecewiseInfo<LearnBranchInfo> extract_l(const LearnInstance&,
                                                  const Interval& domain) {
    return PiecewiseInfo<LearnBranchInfo>{{{domain, NoInfo{}}}};
  }
  static std::vector<LearnInstance> branch_l(const LearnInstance& p,
                                             LearnBranchInfo, const Interval&);
  static PwlFunction reduce_l(const PwlFunction& a, const PwlFunction& b) {
    return combine(a, b, CombineOp::min);
  }
};

SolveOutcome<VertexCover> solve_vertex_cover(const McvcSkeleton& sk,
                                             const Vec& costs);
PwlFunction vertex_cover_profile(const McvcSkeleton& sk,
                                 std::vector<ParamFn> costs,
                                 const Interval& domain);

// Test oracle: subset iteration with a cover check, at most 16 vertices.
double brute_force_vertex_cover(const Graph& g, const Vec& costs);

}  // namespace bnl
