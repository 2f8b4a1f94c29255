#include "rst/intervals.hpp"

#include <algorithm>

namespace rst {
namespace {

// {t : c0 + c1*t >= 0}
ParamInterval solve_ge(double c0, double c1) {
  if (c1 > 0.0) return {-c0 / c1, kInf};
  if (c1 < 0.0) return {-kInf, -c0 / c1};
  return c0 >= 0.0 ? ParamInterval{-kInf, kInf} : ParamInterval{};
}

// {t : c0 + c1*t < 0}
ParamInterval solve_lt(double c0, double c1) {
  if (c1 > 0.0) return {-kInf, -c0 / c1};
  if (c1 < 0.0) return {-c0 / c1, kInf};
  return c0 < 0.0 ? ParamInterval{-kInf, kInf} : ParamInterval{};
}

ParamInterval intersect(const ParamInterval& a, const ParamInterval& b) {
  if (a.empty() || b.empty()) return {};
  ParamInterval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  return r.empty() ? ParamInterval{} : r;
}

ParamInterval visibility_on_support_line(const Point& p, int cone, const Gamma& gamma) {
  // gamma(t) sees p in `cone`  <=>  gamma(t) - p lies in the reflected cone.
  const int j = (cone + 3) % kConeCount;
  const Point u0 = cone_boundary_dir(j);
  const Point u1 = cone_boundary_dir((j + 1) % kConeCount);
  const Point w = gamma.origin() - p;
  const Point& d = gamma.direction();
  return intersect(solve_ge(cross2(u0, w), cross2(u0, d)),
                   solve_lt(cross2(u1, w), cross2(u1, d)));
}

// One envelope piece: the active label on (previous hi, hi].
struct Piece {
  double hi;
  ConeLabel lab;
};
using Envelope = std::vector<Piece>;

// Coefficients of the squared distance t^2 - 2 b t + c from gamma(t) to a point.
struct DistCoef {
  double b;
  double c;
};

ConeLabel union_label(const ConeLabel& x, const ConeLabel& y) {
  int ids[4] = {x.a, x.b, y.a, y.b};
  std::sort(std::begin(ids), std::end(ids));
  ConeLabel out;
  for (int id : ids) {
    if (id < 0 || id == out.a || id == out.b) continue;
    if (out.a < 0)
      out.a = id;
    else if (out.b < 0)
      out.b = id;
    // More than two distinct labels can only arise from chained near-ties;
    // keep the two lowest.
  }
  return out;
}

class EnvelopeMerger {
 public:
  explicit EnvelopeMerger(const std::vector<DistCoef>& coef) : coef_(coef) {}

  Envelope merge(const Envelope& A, const Envelope& B) {
    out_.clear();
    size_t ia = 0, ib = 0;
    double lo = -kInf;
    while (ia < A.size() && ib < B.size()) {
      double hi = std::min(A[ia].hi, B[ib].hi);
      emit_competition(lo, hi, A[ia].lab, B[ib].lab);
      if (A[ia].hi == hi) ++ia;
      if (B[ib].hi == hi) ++ib;
      lo = hi;
    }
    coalesce();
    return std::move(out_);
  }

 private:
  const std::vector<DistCoef>& coef_;
  Envelope out_;

  void push(double hi, const ConeLabel& lab) { out_.push_back({hi, lab}); }

  void coalesce() {
    size_t w = 0;
    for (size_t i = 0; i < out_.size(); ++i) {
      if (w > 0 && out_[w - 1].lab == out_[i].lab)
        out_[w - 1].hi = out_[i].hi;
      else
        out_[w++] = out_[i];
    }
    out_.resize(w);
  }

  void emit_competition(double lo, double hi, const ConeLabel& la, const ConeLabel& lb) {
    if (lo == hi) return;
    if (la.empty()) return push(hi, lb);
    if (lb.empty()) return push(hi, la);

    const DistCoef p = coef_[la.a];
    const DistCoef q = coef_[lb.a];
    // d_p^2 - d_q^2 = alpha*t + beta on this stretch.
    const double alpha = 2.0 * (q.b - p.b);
    const double beta = p.c - q.c;

    const bool slope_tie = std::abs(p.b - q.b) <= 1e-10 * std::max({1.0, std::abs(p.b), std::abs(q.b)});
    const bool offset_tie = std::abs(beta) <= 1e-10 * std::max({1.0, p.c, q.c});
    if (slope_tie && offset_tie) return push(hi, union_label(la, lb));

    const int slo = sign_at(lo, alpha, beta);
    const int shi = sign_at(hi, alpha, beta);
    if (slo == 0 && shi == 0) return push(hi, union_label(la, lb));
    if (slo <= 0 && shi <= 0) return push(hi, la);
    if (slo >= 0 && shi >= 0) return push(hi, lb);

    double split = -beta / alpha;
    if (!(split > lo && split < hi)) split = std::clamp(split, lo, hi);
    if (slo < 0) {
      push(split, la);
      push(hi, lb);
    } else {
      push(split, lb);
      push(hi, la);
    }
  }

  static int sign_at(double t, double alpha, double beta) {
    double v;
    if (t == kInf)
      v = alpha != 0.0 ? alpha : beta;
    else if (t == -kInf)
      v = alpha != 0.0 ? -alpha : beta;
    else
      v = alpha * t + beta;
    return (v > 0.0) - (v < 0.0);
  }
};

Envelope cone_envelope(const PointList& points, const Gamma& line, int cone,
                       const std::vector<DistCoef>& coef) {
  std::vector<Envelope> work;
  work.reserve(points.size());
  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    ParamInterval dom = visibility_on_support_line(points[i], cone, line);
    if (dom.empty()) continue;
    Envelope e;
    if (dom.lo > -kInf) e.push_back({dom.lo, ConeLabel{}});
    e.push_back({dom.hi, ConeLabel{i, -1}});
    if (dom.hi < kInf) e.push_back({kInf, ConeLabel{}});
    work.push_back(std::move(e));
  }
  if (work.empty()) return {{kInf, ConeLabel{}}};

  EnvelopeMerger merger(coef);
  while (work.size() > 1) {
    std::vector<Envelope> next;
    next.reserve((work.size() + 1) / 2);
    for (size_t i = 0; i + 1 < work.size(); i += 2)
      next.push_back(merger.merge(work[i], work[i + 1]));
    if (work.size() % 2 == 1) next.push_back(std::move(work.back()));
    work.swap(next);
  }
  return std::move(work.front());
}

}  // namespace

void LabelledInterval::collect_labels(std::vector<int>& out) const {
  out.clear();
  for (const ConeLabel& l : labels) {
    for (int id : {l.a, l.b}) {
      if (id < 0) continue;
      auto it = std::lower_bound(out.begin(), out.end(), id);
      if (it == out.end() || *it != id) out.insert(it, id);
    }
  }
}

ParamInterval cone_visibility_range(const Point& p, int cone, const Gamma& gamma) {
  if (cone < 0 || cone >= kConeCount)
    throw std::invalid_argument("cone_visibility_range: cone index out of range");
  ParamInterval v = visibility_on_support_line(p, cone, gamma);
  return intersect(v, {gamma.t_lo(), gamma.t_hi()});
}

std::vector<LabelledInterval> labelled_intervals(const PointList& points, const Gamma& gamma) {
  if (points.empty()) throw std::invalid_argument("labelled_intervals: empty point set");
  const Gamma line = gamma.support_line();

  std::vector<DistCoef> coef(points.size());
  for (size_t i = 0; i < points.size(); ++i) {
    coef[i].b = line.project(points[i]);
    coef[i].c = (points[i] - line.origin()).squaredNorm();
  }

  std::array<Envelope, kConeCount> env;
  for (int c = 0; c < kConeCount; ++c) env[c] = cone_envelope(points, line, c, coef);

  // Interval endpoints: envelope breakpoints inside gamma's range.
  std::vector<double> cuts;
  for (const Envelope& e : env)
    for (const Piece& p : e)
      if (p.hi > gamma.t_lo() && p.hi < gamma.t_hi()) cuts.push_back(p.hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::vector<LabelledInterval> out;
  out.reserve(cuts.size() + 1);
  std::array<size_t, kConeCount> cursor{};
  double lo = gamma.t_lo();
  for (size_t k = 0; k <= cuts.size(); ++k) {
    double hi = k < cuts.size() ? cuts[k] : gamma.t_hi();
    LabelledInterval iv{lo, hi, {}};
    for (int c = 0; c < kConeCount; ++c) {
      while (env[c][cursor[c]].hi <= lo) ++cursor[c];
      iv.labels[c] = env[c][cursor[c]].lab;
    }
    if (!out.empty() && out.back().labels == iv.labels)
      out.back().t_hi = hi;  // delimiting point with unchanged labels
    else
      out.push_back(iv);
    lo = hi;
  }
  return out;
}

}  // namespace rst
