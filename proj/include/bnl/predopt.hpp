#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>
#include <vector>

#include "bnl/pwl.hpp"
#include "bnl/types.hpp"

// Core abstractions for optimization under predicted parameters.
//
// A problem family plugs into two recursion templates through a spec type S:
//
//   solve<S>          - recursive solving with known parameters: BaseCase /
//                       BaseResult / Extract / Branch and a commutative,
//                       associative Reduce.
//   learn_profile<S>  - the same recursion lifted to instances whose unknown
//                       parameters are linear functions of one free
//                       coefficient gamma; numeric values become
//                       PwlFunctions, Extract may partition the working
//                       interval, and Reduce becomes a PwlFunction combine.
//
// The profile returned by learn_profile<S> maps gamma to the estimated
// optimal value (est channel) and to the realized objective of the chosen
// solution under the true parameters (payload channel); the latter feeds
// the regret computation.

namespace bnl {

// One unknown parameter in gamma-parameterized form: the estimate line
// a*gamma + b plus the parameter's true value.
struct ParamFn {
  LinearFn est;
  double truth = 0.0;
};

// theta_hat(gamma) = slope * gamma + offset, componentwise.
struct ParamLine {
  Vec slope;
  Vec offset;
};

// Interval partition annotated with per-cell branching data.
template <typename T>
struct PiecewiseInfo {
  std::vector<std::pair<Interval, T>> cells;
};

template <typename S>
struct SolveOutcome {
  typename S::Solution solution;
  double objective;
};

template <typename S>
SolveOutcome<S> solve(const typename S::Instance& inst) {
  if (S::base_case(inst)) return S::base_result(inst);
  auto info = S::extract(inst);
  auto subproblems = S::branch(inst, info);
  std::optional<SolveOutcome<S>> acc;
  for (auto& sub : subproblems) {
    SolveOutcome<S> r = solve<S>(sub);
    acc = acc ? S::reduce(std::move(*acc), std::move(r)) : std::move(r);
  }
  return std::move(*acc);
}

template <typename S>
PwlFunction learn_profile(const typename S::LearnInstance& inst,
                          const Interval& domain) {
  if (S::base_case_l(inst)) return S::base_result_l(inst, domain);
  auto cells = S::extract_l(inst, domain);
  std::vector<Piece> pieces;
  for (auto& [cell, info] : cells.cells) {
    auto subproblems = S::branch_l(inst, info, cell);
    std::optional<PwlFunction> acc;
    for (auto& sub : subproblems) {
      PwlFunction r = learn_profile<S>(sub, cell);
      acc = acc ? simplify(S::reduce_l(*acc, r)) : std::move(r);
    }
    for (const Piece& p : acc->pieces()) pieces.push_back(p);
  }
  return PwlFunction(domain, std::move(pieces));
}

// theta_hat(gamma) when coordinate k of alpha is freed: slope = A e_k,
// offset = A (alpha - alpha_k e_k).
ParamLine make_param_line(int k, const Matrix& features,
                          const Coefficients& alpha);

// Largest interval on which every component of the line is nonnegative;
// nullopt when empty (the caller then skips the example).
std::optional<Interval> nonneg_domain(const ParamLine& line);

// Builds the gamma-parameterized instance for coordinate k of alpha plus its
// admissible interval. Returns nullopt when the nonnegativity domain is
// empty.
template <typename S>
std::optional<std::pair<typename S::LearnInstance, Interval>> parameterize(
    const typename S::Skeleton& skeleton, int k, const Matrix& features,
    const Coefficients& alpha, const Vec& truth) {
  ParamLine line = make_param_line(k, features, alpha);
  Interval domain = Interval::all();
  if (S::nonneg_params) {
    auto d = nonneg_domain(line);
    if (!d) return std::nullopt;
    domain = *d;
  }
  std::vector<ParamFn> params(line.slope.size());
  for (std::size_t j = 0; j < params.size(); ++j) {
    params[j] = ParamFn{LinearFn{line.slope[j], line.offset[j]}, truth[j]};
  }
  return std::make_pair(S::bind_line(skeleton, std::move(params)),
                        std::move(domain));
}

// Piecewise-constant regret over the full gamma axis: inside the admissible
// interval, sense-corrected payload minus the true optimum; outside (and on
// non-finite payloads), the big-M penalty.
PwlFunction regret_profile(const PwlFunction& profile, double true_opt,
                           Sense sense, double big_m);

// Solves twice (at theta_hat and theta) and evaluates the theta_hat solution
// under theta. Always nonnegative.
template <typename S>
double regret(const typename S::Skeleton& skeleton, const Vec& theta_hat,
              const Vec& theta) {
  auto est = solve<S>(S::bind(skeleton, theta_hat));
  auto opt = solve<S>(S::bind(skeleton, theta));
  const double est_under_true = S::objective(skeleton, est.solution, theta);
  const double value =
      sense_sign(S::sense) * ext_sub(est_under_true, opt.objective);
  if (value < -1e-6 * std::max(1.0, std::abs(opt.objective))) {
    throw std::logic_error("regret: negative regret indicates a solver bug");
  }
  return value < 0.0 ? 0.0 : value;
}

// True optimal value under theta.
template <typename S>
double true_optimum(const typename S::Skeleton& skeleton, const Vec& theta) {
  return solve<S>(S::bind(skeleton, theta)).objective;
}

}  // namespace bnl
