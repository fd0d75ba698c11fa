#include "bnl/least_squares.hpp"

#include <cmath>
#include <stdexcept>

#include "bnl/predopt.hpp"

namespace bnl {

bool solve_linear_system(Matrix a, Vec b, Vec& out) {
  const int n = a.rows;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::fabs(a.at(r, col)) > std::fabs(a.at(pivot, col))) pivot = r;
    }
    if (std::fabs(a.at(pivot, col)) < 1e-12) return false;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) std::swap(a.at(pivot, c), a.at(col, c));
      std::swap(b[pivot], b[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double factor = a.at(r, col) / a.at(col, col);
      if (factor == 0.0) continue;
      for (int c = col; c < n; ++c) a.at(r, c) -= factor * a.at(col, c);
      b[r] -= factor * b[col];
    }
  }
  out.assign(n, 0.0);
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a.at(r, c) * out[c];
    out[r] = s / a.at(r, r);
  }
  return true;
}

LsFit fit_least_squares(const std::vector<TrainingExample>& data) {
  if (data.empty()) {
    throw std::invalid_argument("fit_least_squares: no training data");
  }
  const int m = data.front().features.cols;
  Matrix gram(m, m);
  Vec rhs(m, 0.0);
  for (const TrainingExample& ex : data) {
    check_example(ex);
    if (ex.features.cols != m) {
      throw std::invalid_argument("fit_least_squares: feature width mismatch");
    }
    for (int r = 0; r < ex.features.rows; ++r) {
      for (int i = 0; i < m; ++i) {
        rhs[i] += ex.features.at(r, i) * ex.truth[r];
        for (int j = 0; j < m; ++j) {
          gram.at(i, j) += ex.features.at(r, i) * ex.features.at(r, j);
        }
      }
    }
  }

  Vec alpha;
  if (!solve_linear_system(gram, rhs, alpha)) {
    Matrix ridged = gram;
    for (int i = 0; i < m; ++i) ridged.at(i, i) += 1e-8;
    if (!solve_linear_system(ridged, rhs, alpha)) {
      throw std::runtime_error("fit_least_squares: singular normal equations");
    }
  }

  double rss = 0.0;
  for (const TrainingExample& ex : data) {
    const Vec pred = matvec(ex.features, alpha);
    for (std::size_t r = 0; r < pred.size(); ++r) {
      const double d = pred[r] - ex.truth[r];
      rss += d * d;
    }
  }
  return LsFit{std::move(alpha), std::sqrt(rss)};
}

}  // namespace bnl
