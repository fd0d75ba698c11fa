#include "bnl/predopt.hpp"

#include <cmath>
#include <stdexcept>

namespace bnl {

Vec matvec(const Matrix& a, const Vec& x) {
  if (static_cast<int>(x.size()) != a.cols) {
    throw std::invalid_argument("matvec: dimension mismatch");
  }
  Vec y(a.rows, 0.0);
  for (int r = 0; r < a.rows; ++r) {
    double s = 0.0;
    for (int c = 0; c < a.cols; ++c) s += a.at(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

void check_example(const TrainingExample& ex) {
  if (ex.features.rows <= 0 || ex.features.cols <= 0) {
    throw std::invalid_argument("TrainingExample: empty feature matrix");
  }
  if (static_cast<int>(ex.truth.size()) != ex.features.rows) {
    throw std::invalid_argument(
        "TrainingExample: truth length does not match feature rows");
  }
}

ParamLine make_param_line(int k, const Matrix& features,
                          const Coefficients& alpha) {
  if (k < 0 || k >= features.cols) {
    throw std::invalid_argument("make_param_line: coordinate out of range");
  }
  if (static_cast<int>(alpha.size()) != features.cols) {
    throw std::invalid_argument("make_param_line: alpha length mismatch");
  }
  ParamLine line;
  line.slope.resize(features.rows);
  line.offset.resize(features.rows);
  for (int r = 0; r < features.rows; ++r) {
    double off = 0.0;
    for (int c = 0; c < features.cols; ++c) {
      if (c == k) continue;
      off += features.at(r, c) * alpha[c];
    }
    line.slope[r] = features.at(r, k);
    line.offset[r] = off;
  }
  return line;
}

std::optional<Interval> nonneg_domain(const ParamLine& line) {
  double lo = -kInf;
  double hi = kInf;
  for (std::size_t j = 0; j < line.slope.size(); ++j) {
    const double a = line.slope[j];
    const double b = line.offset[j];
    if (a == 0.0) {
      if (b < 0.0) return std::nullopt;
      continue;
    }
    const double root = -b / a;
    if (a > 0.0) {
      lo = std::max(lo, root);
    } else {
      hi = std::min(hi, root);
    }
  }
  if (!(lo < hi)) return std::nullopt;
  return Interval{lo, hi};
}

PwlFunction regret_profile(const PwlFunction& profile, double true_opt,
                           Sense sense, double big_m) {
  const Interval inner = profile.domain();
  const double sign = sense_sign(sense);
  const double scale = std::max(1.0, std::fabs(true_opt));

  std::vector<Piece> pieces;
  pieces.reserve(profile.piece_count() + 2);
  if (ext_finite(inner.lo)) {
    pieces.push_back(Piece{Interval{-kInf, inner.lo},
                           LinearFn::constant(big_m), big_m});
  }
  for (const Piece& p : profile.pieces()) {
    double value;
    if (!ext_finite(p.payload)) {
      value = big_m;
    } else {
      value = sign * (p.payload - true_opt);
      if (value < -1e-6 * scale) {
        throw std::logic_error(
            "regret_profile: payload beats the true optimum");
      }
      if (value < 0.0) value = 0.0;
    }
    pieces.push_back(Piece{p.interval, LinearFn::constant(value), value});
  }
  if (ext_finite(inner.hi)) {
    // The admissible interval keeps its right endpoint; the penalty region
    // starts one ulp beyond it.
    const double start = std::nextafter(inner.hi, kInf);
    pieces.push_back(
        Piece{Interval{start, kInf}, LinearFn::constant(big_m), big_m});
    pieces[pieces.size() - 2].interval.hi = start;
  }
  return PwlFunction(Interval::all(), std::move(pieces));
}

}  // namespace bnl
