#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "bnl/least_squares.hpp"
#include "bnl/predopt.hpp"
#include "bnl/rng.hpp"

// Exact coordinate descent on the empirical regret. Coordinates cycle
// round-robin; for each coordinate the total regret over the training set is
// assembled as a piecewise-constant function of the free coefficient and
// minimized exactly, so the training regret never increases.

namespace bnl {

enum class InitKind { zeros, random, least_squares };

struct TrainConfig {
  int max_epochs = 5;
  double tol = 1e-6;       // relative regret improvement per epoch
  double big_m = 1e12;     // penalty outside the admissible interval
  InitKind init = InitKind::least_squares;
  std::uint64_t seed = 0;  // for random init
  std::optional<double> time_budget_s;
};

struct TrainReport {
  Coefficients alpha;
  std::vector<double> total_regret_trace;  // one entry per coordinate update
  std::vector<int> update_coordinates;     // coordinate of each update
  int epochs_run = 0;
  int skipped_examples = 0;  // example/coordinate pairs with empty domain
  int warnings = 0;          // coordinates left unchanged (all skipped)
};

// Prediction theta_hat = A alpha; negative entries are clamped to zero when
// the problem family requires nonnegative parameters (count reported through
// clamped, when given).
template <typename S>
Vec predict(const Coefficients& alpha, const Matrix& features,
            int* clamped = nullptr) {
  Vec theta = matvec(features, alpha);
  if (S::nonneg_params) {
    for (double& v : theta) {
      if (v < 0.0) {
        v = 0.0;
        if (clamped) ++*clamped;
      }
    }
  }
  return theta;
}

namespace detail {

inline Coefficients initial_alpha(const std::vector<TrainingExample>& data,
                                  const TrainConfig& cfg) {
  const int m = data.front().features.cols;
  switch (cfg.init) {
    case InitKind::zeros:
      return Coefficients(m, 0.0);
    case InitKind::random: {
      Rng rng(cfg.seed);
      Coefficients alpha(m);
      for (double& a : alpha) a = rng.uniform(-1.0, 1.0);
      return alpha;
    }
    case InitKind::least_squares:
    default:
      return fit_least_squares(data).alpha;
  }
}

}  // namespace detail

template <typename S>
TrainReport coordinate_descent(
    const std::vector<typename S::Skeleton>& skeletons,
    const std::vector<TrainingExample>& data, const TrainConfig& cfg) {
  if (data.empty()) {
    throw std::invalid_argument("coordinate_descent: no training data");
  }
  if (skeletons.size() != 1 && skeletons.size() != data.size()) {
    throw std::invalid_argument(
        "coordinate_descent: skeleton list must have size 1 or match data");
  }
  const int m = data.front().features.cols;
  for (const TrainingExample& ex : data) {
    check_example(ex);
    if (ex.features.cols != m) {
      throw std::invalid_argument("coordinate_descent: feature width mismatch");
    }
  }
  const auto skeleton_of = [&](std::size_t i) -> const typename S::Skeleton& {
    return skeletons.size() == 1 ? skeletons[0] : skeletons[i];
  };

  // True optima are gamma-independent; compute them once.
  Vec true_opt(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    true_opt[i] = true_optimum<S>(skeleton_of(i), data[i].truth);
  }

  TrainReport report;
  report.alpha = detail::initial_alpha(data, cfg);

  const auto started = std::chrono::steady_clock::now();
  const auto out_of_budget = [&]() {
    if (!cfg.time_budget_s) return false;
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - started;
    return elapsed.count() >= *cfg.time_budget_s;
  };

  double epoch_end_regret = kInf;
  for (int epoch = 0; epoch < cfg.max_epochs; ++epoch) {
    if (out_of_budget()) break;
    report.epochs_run = epoch + 1;
    for (int k = 0; k < m; ++k) {
      if (out_of_budget()) break;
      PwlFunction total =
          PwlFunction::constant(0.0, Interval::all(), 0.0);
      int used = 0;
      for (std::size_t i = 0; i < data.size(); ++i) {
        auto built = parameterize<S>(skeleton_of(i), k, data[i].features,
                                     report.alpha, data[i].truth);
        if (!built) {
          ++report.skipped_examples;
          continue;
        }
        auto& [inst, domain] = *built;
        const PwlFunction profile = learn_profile<S>(inst, domain);
        const PwlFunction loss =
            regret_profile(profile, true_opt[i], S::sense, cfg.big_m);
        total = simplify(combine(total, loss, CombineOp::add));
        ++used;
      }
      if (used == 0) {
        ++report.warnings;
        continue;
      }
      const ArgminResult best = argmin_piecewise(total);
      report.alpha[k] = best.arg;
      report.total_regret_trace.push_back(best.value);
      report.update_coordinates.push_back(k);
    }
    if (!report.total_regret_trace.empty()) {
      const double current = report.total_regret_trace.back();
      if (ext_finite(epoch_end_regret)) {
        const double gain = epoch_end_regret - current;
        if (gain < cfg.tol * std::max(1.0, std::fabs(epoch_end_regret))) {
          epoch_end_regret = current;
          break;
        }
      }
      epoch_end_regret = current;
    }
  }
  return report;
}

// Mean regret of the predictions of alpha over a dataset.
template <typename S>
double mean_regret(const std::vector<typename S::Skeleton>& skeletons,
                   const std::vector<TrainingExample>& data,
                   const Coefficients& alpha, int* clamped = nullptr) {
  if (data.empty()) {
    throw std::invalid_argument("mean_regret: no data");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& sk = skeletons.size() == 1 ? skeletons[0] : skeletons[i];
    const Vec theta_hat = predict<S>(alpha, data[i].features, clamped);
    total += regret<S>(sk, theta_hat, data[i].truth);
  }
  return total / static_cast<double>(data.size());
}

}  // namespace bnl
