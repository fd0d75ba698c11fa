#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bnl {

using Vec = std::vector<double>;

// Dense row-major matrix; deliberately minimal (feature matrices here are
// a few hundred by a handful).
struct Matrix {
  int rows = 0;
  int cols = 0;
  Vec data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

  double& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  double at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
};

Vec matvec(const Matrix& a, const Vec& x);

enum class Sense { minimize, maximize };

inline double sense_sign(Sense s) { return s == Sense::minimize ? 1.0 : -1.0; }

using Coefficients = Vec;

// One observation: an m-feature row per unknown parameter, paired with the
// true parameter vector.
struct TrainingExample {
  Matrix features;  // t x m
  Vec truth;        // t
};

void check_example(const TrainingExample& ex);

}  // namespace bnl
