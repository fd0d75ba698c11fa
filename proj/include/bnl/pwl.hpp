#pragma once

#include <cstddef>
#include <limits>
#include <vector>

// Piecewise-linear functions of a single real variable, partitioned into
// half-open intervals [lo, hi) (the final piece of a partition is closed).
// Each piece carries two channels:
//   est     - a linear function of the variable (the estimated objective),
//   payload - a constant (the realized objective of the decision the piece
//             stands for, evaluated under the true parameters).
// Arithmetic combines both channels: add/sub act pointwise on each, min/max
// copy est and payload from whichever operand wins (ties go to the left).

namespace bnl {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

bool ext_finite(double v);

// Extended-real arithmetic. Opposite infinities in an addition (or equal
// infinities in a subtraction) raise std::domain_error.
double ext_add(double a, double b);
double ext_sub(double a, double b);

// c * v with the convention 0 * inf = 0, so scaling by zero always yields
// the zero function.
double ext_scale(double v, double c);

struct LinearFn {
  double slope = 0.0;
  double intercept = 0.0;  // may be +-inf; then slope must be 0

  double operator()(double x) const {
    return ext_finite(intercept) ? slope * x + intercept : intercept;
  }
  static LinearFn constant(double v) { return LinearFn{0.0, v}; }
};

bool nearly_equal(const LinearFn& a, const LinearFn& b, double tol = 1e-12);

struct Interval {
  double lo = -kInf;
  double hi = kInf;

  static Interval all() { return Interval{-kInf, kInf}; }

  bool valid() const { return lo < hi; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool bounded() const { return ext_finite(lo) && ext_finite(hi); }

  // A finite interior point: the midpoint when bounded, the finite endpoint
  // offset by 1 toward the interior when half-unbounded, 0 otherwise.
  double representative() const;
};

bool operator==(const Interval& a, const Interval& b);

struct Piece {
  Interval interval;
  LinearFn est;
  double payload = 0.0;
};

class PwlFunction {
 public:
  // Validates the partition: pieces sorted, contiguous (shared endpoints,
  // no gaps) and covering the domain exactly. Throws std::invalid_argument
  // on violation.
  PwlFunction(Interval domain, std::vector<Piece> pieces);

  static PwlFunction constant(double value, Interval domain, double payload);
  static PwlFunction line(LinearFn est, double payload, Interval domain);

  const Interval& domain() const { return domain_; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  std::size_t piece_count() const { return pieces_.size(); }

  struct Value {
    double est;
    double payload;
  };

  // Value of the unique piece whose half-open interval contains r; the last
  // piece also owns its right endpoint. r outside the domain raises
  // std::domain_error.
  Value operator()(double r) const;

  // Index of the piece owning r (same convention as operator()).
  std::size_t piece_index(double r) const;

  // Interior breakpoints (shared piece endpoints), in increasing order.
  std::vector<double> breakpoints() const;

 private:
  Interval domain_;
  std::vector<Piece> pieces_;
};

enum class CombineOp { add, sub, min, max };

// Pointwise combination of f and g, which must share a domain. For add/sub
// both channels combine pointwise; for min/max the partition is refined at
// all piece endpoints and est crossings, and each refined piece copies est
// and payload from the winning operand (f on ties).
PwlFunction combine(const PwlFunction& f, const PwlFunction& g, CombineOp op);

PwlFunction scale(const PwlFunction& f, double c);

// Clips f to window (which must overlap the domain).
PwlFunction restrict_to(const PwlFunction& f, const Interval& window);

// Merges adjacent pieces whose est coefficients agree within 1e-12 and whose
// payloads agree (payload distinctness is preserved).
PwlFunction simplify(const PwlFunction& f);

struct ArgminResult {
  double arg;
  double value;
};

// Minimizer of a piecewise-constant function: the representative point of
// the leftmost interval attaining the minimum est value. Requires all slopes
// to be exactly zero and at least one finite piece.
ArgminResult argmin_piecewise(const PwlFunction& f);

}  // namespace bnl
