#include "bnl/pwl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bnl {

namespace {

constexpr double kParallelTol = 1e-12;

[[noreturn]] void fail(const std::string& what) {
  throw std::invalid_argument(what);
}

bool payload_equal(double a, double b) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::fabs(a - b) <= 1e-12;
}

}  // namespace

bool ext_finite(double v) { return std::isfinite(v); }

double ext_add(double a, double b) {
  if (std::isinf(a) && std::isinf(b) && a != b) {
    throw std::domain_error("ext_add: opposite infinities");
  }
  return a + b;
}

double ext_sub(double a, double b) {
  if (std::isinf(a) && std::isinf(b) && a == b) {
    throw std::domain_error("ext_sub: indeterminate infinity difference");
  }
  return a - b;
}

double ext_scale(double v, double c) {
  if (c == 0.0) return 0.0;
  return v * c;
}

bool nearly_equal(const LinearFn& a, const LinearFn& b, double tol) {
  if (std::isinf(a.intercept) || std::isinf(b.intercept)) {
    return a.intercept == b.intercept;
  }
  return std::fabs(a.slope - b.slope) <= tol &&
         std::fabs(a.intercept - b.intercept) <= tol;
}

double Interval::representative() const {
  const bool lo_fin = ext_finite(lo);
  const bool hi_fin = ext_finite(hi);
  if (lo_fin && hi_fin) return 0.5 * (lo + hi);
  if (lo_fin) return lo + 1.0;
  if (hi_fin) return hi - 1.0;
  return 0.0;
}

bool operator==(const Interval& a, const Interval& b) {
  return a.lo == b.lo && a.hi == b.hi;
}

PwlFunction::PwlFunction(Interval domain, std::vector<Piece> pieces)
    : domain_(domain), pieces_(std::move(pieces)) {
  if (!domain_.valid()) fail("PwlFunction: invalid domain");
  if (pieces_.empty()) fail("PwlFunction: empty piece list");
  if (pieces_.front().interval.lo != domain_.lo ||
      pieces_.back().interval.hi != domain_.hi) {
    fail("PwlFunction: pieces do not span the domain");
  }
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    if (!p.interval.valid()) fail("PwlFunction: degenerate piece interval");
    if (!ext_finite(p.est.intercept) && p.est.slope != 0.0) {
      fail("PwlFunction: infinite piece must be constant");
    }
    if (i + 1 < pieces_.size() &&
        p.interval.hi != pieces_[i + 1].interval.lo) {
      fail("PwlFunction: gap or overlap between pieces");
    }
  }
}

PwlFunction PwlFunction::constant(double value, Interval domain,
                                  double payload) {
  return PwlFunction(domain,
                     {Piece{domain, LinearFn::constant(value), payload}});
}

PwlFunction PwlFunction::line(LinearFn est, double payload, Interval domain) {
  return PwlFunction(domain, {Piece{domain, est, payload}});
}

std::size_t PwlFunction::piece_index(double r) const {
  if (!domain_.contains(r)) {
    throw std::domain_error("PwlFunction: argument outside domain");
  }
  // First piece whose right endpoint lies strictly beyond r; the last piece
  // owns the domain's right endpoint.
  auto it = std::partition_point(
      pieces_.begin(), pieces_.end(),
      [r](const Piece& p) { return p.interval.hi <= r; });
  if (it == pieces_.end()) --it;
  return static_cast<std::size_t>(it - pieces_.begin());
}

PwlFunction::Value PwlFunction::operator()(double r) const {
  const Piece& p = pieces_[piece_index(r)];
  return Value{p.est(r), p.payload};
}

std::vector<double> PwlFunction::breakpoints() const {
  std::vector<double> cuts;
  cuts.reserve(pieces_.size() > 0 ? pieces_.size() - 1 : 0);
  for (std::size_t i = 0; i + 1 < pieces_.size(); ++i) {
    cuts.push_back(pieces_[i].interval.hi);
  }
  return cuts;
}

namespace {

LinearFn est_add(const LinearFn& a, const LinearFn& b, bool subtract) {
  const double bi = subtract ? -b.intercept : b.intercept;
  const double bs = subtract ? -b.slope : b.slope;
  if (!ext_finite(a.intercept) || !ext_finite(bi)) {
    return LinearFn{0.0, ext_add(a.intercept, bi)};
  }
  return LinearFn{a.slope + bs, a.intercept + bi};
}

}  // namespace

PwlFunction combine(const PwlFunction& f, const PwlFunction& g, CombineOp op) {
  if (!(f.domain() == g.domain())) {
    fail("combine: domain mismatch");
  }
  const auto& fp = f.pieces();
  const auto& gp = g.pieces();

  // Refined boundary set: every piece endpoint of both operands.
  std::vector<double> cuts;
  cuts.reserve(fp.size() + gp.size() + 1);
  cuts.push_back(f.domain().lo);
  for (const Piece& p : fp) cuts.push_back(p.interval.hi);
  for (const Piece& p : gp) cuts.push_back(p.interval.hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const bool extremum = (op == CombineOp::min || op == CombineOp::max);
  std::vector<Piece> out;
  out.reserve(extremum ? 2 * (fp.size() + gp.size()) : fp.size() + gp.size());

  std::size_t fi = 0;
  std::size_t gi = 0;
  for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
    const double lo = cuts[c];
    const double hi = cuts[c + 1];
    while (fi + 1 < fp.size() && fp[fi].interval.hi <= lo) ++fi;
    while (gi + 1 < gp.size() && gp[gi].interval.hi <= lo) ++gi;
    const Piece& a = fp[fi];
    const Piece& b = gp[gi];

    if (op == CombineOp::add || op == CombineOp::sub) {
      const bool sub = (op == CombineOp::sub);
      out.push_back(Piece{Interval{lo, hi}, est_add(a.est, b.est, sub),
                          sub ? ext_sub(a.payload, b.payload)
                              : ext_add(a.payload, b.payload)});
      continue;
    }

    // min/max: split at the est crossing when it falls strictly inside.
    double split = kInf;
    if (ext_finite(a.est.intercept) && ext_finite(b.est.intercept) &&
        std::fabs(a.est.slope - b.est.slope) > kParallelTol) {
      const double x =
          (b.est.intercept - a.est.intercept) / (a.est.slope - b.est.slope);
      if (lo < x && x < hi) split = x;
    }
    const auto emit = [&](double l, double h) {
      const double r = Interval{l, h}.representative();
      const double va = a.est(r);
      const double vb = b.est(r);
      const bool b_wins = (op == CombineOp::min) ? (vb < va) : (vb > va);
      const Piece& w = b_wins ? b : a;
      out.push_back(Piece{Interval{l, h}, w.est, w.payload});
    };
    if (ext_finite(split)) {
      emit(lo, split);
      emit(split, hi);
    } else {
      emit(lo, hi);
    }
  }
  return PwlFunction(f.domain(), std::move(out));
}

PwlFunction scale(const PwlFunction& f, double c) {
  if (!ext_finite(c)) fail("scale: factor must be finite");
  std::vector<Piece> out;
  out.reserve(f.piece_count());
  for (const Piece& p : f.pieces()) {
    LinearFn est{p.est.slope * c, ext_scale(p.est.intercept, c)};
    if (!ext_finite(est.intercept)) est.slope = 0.0;
    out.push_back(Piece{p.interval, est, ext_scale(p.payload, c)});
  }
  return PwlFunction(f.domain(), std::move(out));
}

PwlFunction restrict_to(const PwlFunction& f, const Interval& window) {
  const Interval cut{std::max(f.domain().lo, window.lo),
                     std::min(f.domain().hi, window.hi)};
  if (!cut.valid()) fail("restrict_to: empty intersection");
  std::vector<Piece> out;
  for (const Piece& p : f.pieces()) {
    const Interval iv{std::max(p.interval.lo, cut.lo),
                      std::min(p.interval.hi, cut.hi)};
    if (!iv.valid()) continue;
    out.push_back(Piece{iv, p.est, p.payload});
  }
  return PwlFunction(cut, std::move(out));
}

PwlFunction simplify(const PwlFunction& f) {
  std::vector<Piece> out;
  out.reserve(f.piece_count());
  for (const Piece& p : f.pieces()) {
    if (!out.empty() && nearly_equal(out.back().est, p.est) &&
        payload_equal(out.back().payload, p.payload)) {
      out.back().interval.hi = p.interval.hi;
    } else {
      out.push_back(p);
    }
  }
  return PwlFunction(f.domain(), std::move(out));
}

ArgminResult argmin_piecewise(const PwlFunction& f) {
  const Piece* best = nullptr;
  for (const Piece& p : f.pieces()) {
    if (ext_finite(p.est.intercept) && p.est.slope != 0.0) {
      throw std::invalid_argument("argmin_piecewise: non-constant piece");
    }
    if (!ext_finite(p.est.intercept)) continue;
    if (best == nullptr || p.est.intercept < best->est.intercept) {
      best = &p;
    }
  }
  if (best == nullptr) {
    throw std::domain_error("argmin_piecewise: no finite piece");
  }
  return ArgminResult{best->interval.representative(), best->est.intercept};
}

}  // namespace bnl
