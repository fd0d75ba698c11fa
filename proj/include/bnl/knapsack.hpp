#pragma once

#include <cstdint>
#include <vector>

#include "bnl/predopt.hpp"

// 0-1 knapsack by binary branching over items (take / skip), maximization.
// Unknown parameters are the item profits.

namespace bnl {

struct KnapsackSkeleton {
  Vec costs;      // nonnegative item costs
  double budget;  // capacity
};

struct Knapsack {
  using Skeleton = KnapsackSkeleton;
  using Solution = std::uint32_t;  // chosen-item bitmask

  static constexpr Sense sense = Sense::maximize;
  static constexpr bool nonneg_params = true;

  struct Instance {
    const Skeleton* skeleton;
    Vec profits;
    int remaining;  // items [0, remaining) still undecided
    double budget;  // budget left after the chosen items
    std::uint32_t chosen;
  };

  struct LearnInstance {
    const Skeleton* skeleton;
    std::vector<ParamFn> profits;
    int remaining;
    double budget;
    std::uint32_t chosen;
  };

  struct NoInfo {};
  using BranchInfo = NoInfo;
  using LearnBranchInfo = NoInfo;

  static Instance bind(const Skeleton& sk, const Vec& profits);
  static LearnInstance bind_line(const Skeleton& sk,
                                 std::vector<ParamFn> profits);
  static double objective(const Skeleton& sk, Solution chosen,
                          const Vec& profits);

  static bool base_case(const Instance& p) {
    return p.remaining == 0 || p.budget <= 0.0;
  }
  static SolveOutcome<Knapsack> base_result(const Instance& p);
  static BranchInfo extract(const Instance&) { return {}; }
  static std::vector<Instance> branch(const Instance& p, BranchInfo);
  static SolveOutcome<Knapsack> reduce(SolveOutcome<Knapsack> a,
                                       SolveOutcome<Knapsack> b) {
    return b.objective > a.objective ? b : a;
  }

  static bool base_case_l(const LearnInstance& p) {
    return p.remaining == 0 || p.budget <= 0.0;
  }
  static PwlFunction base_result_l(const LearnInstance& p,
                                   const Interval& domain);
  static PiecewiseInfo<LearnBranchInfo> extract_l(const LearnInstance&,
                                                  const Interval& domain) {
    return PiecewiseInfo<LearnBranchInfo>{{{domain, NoInfo{}}}};
  }
  static std::vector<LearnInstance> branch_l(const LearnInstance& p,
                                             LearnBranchInfo, const Interval&);
  static PwlFunction reduce_l(const PwlFunction& a, const PwlFunction& b) {
    return combine(a, b, CombineOp::max);
  }
};

SolveOutcome<Knapsack> solve_knapsack(const KnapsackSkeleton& sk,
                                      const Vec& profits);
PwlFunction knapsack_profile(const KnapsackSkeleton& sk,
                             std::vector<ParamFn> profits,
                             const Interval& domain);

// Test oracle: exhaustive subset enumeration, at most 20 items.
double brute_force_knapsack(const Vec& profits, const Vec& costs,
                            double budget);

}  // namespace bnl
