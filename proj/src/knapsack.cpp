#include "bnl/knapsack.hpp"

#include <stdexcept>

namespace bnl {

namespace {

void check_skeleton(const KnapsackSkeleton& sk, std::size_t params) {
  if (sk.costs.size() != params) {
    throw std::invalid_argument("knapsack: profit/cost length mismatch");
  }
  if (sk.costs.size() > 30) {
    throw std::invalid_argument("knapsack: too many items for bitmask");
  }
  for (double c : sk.costs) {
    if (c < 0.0) throw std::invalid_argument("knapsack: negative cost");
  }
}

}  // namespace

Knapsack::Instance Knapsack::bind(const Skeleton& sk, const Vec& profits) {
  check_skeleton(sk, profits.size());
  return Instance{&sk, profits, static_cast<int>(profits.size()), sk.budget,
                  0u};
}

Knapsack::LearnInstance Knapsack::bind_line(const Skeleton& sk,
                                            std::vector<ParamFn> profits) {
  check_skeleton(sk, profits.size());
  const int n = static_cast<int>(profits.size());
  return LearnInstance{&sk, std::move(profits), n, sk.budget, 0u};
}

double Knapsack::objective(const Skeleton&, Solution chosen,
                           const Vec& profits) {
  double total = 0.0;
  for (std::size_t i = 0; i < profits.size(); ++i) {
    if (chosen & (1u << i)) total += profits[i];
  }
  return total;
}

SolveOutcome<Knapsack> Knapsack::base_result(const Instance& p) {
  if (p.budget < 0.0) return {p.chosen, 0.0};
  double total = 0.0;
  for (std::size_t i = 0; i < p.profits.size(); ++i) {
    if (p.chosen & (1u << i)) total += p.profits[i];
  }
  return {p.chosen, total};
}

std::vector<Knapsack::Instance> Knapsack::branch(const Instance& p,
                                                 BranchInfo) {
  const int item = p.remaining - 1;
  Instance skip = p;
  skip.remaining = item;
  Instance take = p;
  take.remaining = item;
  take.budget -= p.skeleton->costs[item];
  take.chosen |= (1u << item);
  return {skip, take};
}

PwlFunction Knapsack::base_result_l(const LearnInstance& p,
                                    const Interval& domain) {
  if (p.budget < 0.0) return PwlFunction::constant(0.0, domain, 0.0);
  LinearFn est{0.0, 0.0};
  double payload = 0.0;
  for (std::size_t i = 0; i < p.profits.size(); ++i) {
    if (p.chosen & (1u << i)) {
      est.slope += p.profits[i].est.slope;
      est.intercept += p.profits[i].est.intercept;
      payload += p.profits[i].truth;
    }
  }
  return PwlFunction::line(est, payload, domain);
}

std::vector<Knapsack::LearnInstance> Knapsack::branch_l(const LearnInstance& p,
                                                        LearnBranchInfo,
                                                        const Interval&) {
  const int item = p.remaining - 1;
  LearnInstance skip = p;
  skip.remaining = item;
  LearnInstance take = p;
  take.remaining = item;
  take.budget -= p.skeleton->costs[item];
  take.chosen |= (1u << item);
  return {skip, take};
}

SolveOutcome<Knapsack> solve_knapsack(const KnapsackSkeleton& sk,
                                      const Vec& profits) {
  return solve<Knapsack>(Knapsack::bind(sk, profits));
}

PwlFunction knapsack_profile(const KnapsackSkeleton& sk,
                             std::vector<ParamFn> profits,
                             const Interval& domain) {
  return learn_profile<Knapsack>(Knapsack::bind_line(sk, std::move(profits)),
                                 domain);
}

double brute_force_knapsack(const Vec& profits, const Vec& costs,
                            double budget) {
  if (profits.size() != costs.size()) {
    throw std::invalid_argument("brute_force_knapsack: length mismatch");
  }
  if (profits.size() > 20) {
    throw std::invalid_argument("brute_force_knapsack: too many items");
  }
  const std::uint32_t subsets = 1u << profits.size();
  double best = 0.0;
  for (std::uint32_t mask = 0; mask < subsets; ++mask) {
    double cost = 0.0;
    double value = 0.0;
    for (std::size_t i = 0; i < profits.size(); ++i) {
      if (mask & (1u << i)) {
        cost += costs[i];
        value += profits[i];
      }
    }
    if (cost <= budget && value > best) best = value;
  }
  return best;
}

}  // namespace bnl
