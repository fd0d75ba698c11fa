#pragma once

#include <vector>

#include "bnl/types.hpp"

// Ordinary least squares over the stacked feature rows of all training
// examples, solved via the normal equations with a small ridge fallback on
// rank deficiency. Shares the linear prediction form with the regret-driven
// trainer and serves as the regression baseline.

namespace bnl {

struct LsFit {
  Coefficients alpha;
  double residual_norm;
};

LsFit fit_least_squares(const std::vector<TrainingExample>& data);

// Solves a (dense, symmetric) linear system by Gaussian elimination with
// partial pivoting; returns false on (near-)singularity.
bool solve_linear_system(Matrix a, Vec b, Vec& out);

}  // namespace bnl
