#include "rst/steiner1.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <thread>

namespace rst {
namespace {

constexpr double kGoldenRatio = 0.61803398874989485;
constexpr double kParamTol = 1e-10;
constexpr double kTerminalSnap = 1e-9;

double clamp_infinite(double value, double fallback) {
  return std::isinf(value) ? fallback : value;
}

struct SubsetScratch {
  std::array<Point, 4> pts;
  std::array<int, 4> ids;
  int size = 0;
};

// Distances from each of P's members to the segment gamma([lo, hi]),
// using the projection/perpendicular decomposition d^2 = (t-b)^2 + perp2.
double seg_distance(double proj, double perp2, double lo, double hi) {
  double t = std::clamp(proj, lo, hi);
  double dt = t - proj;
  return std::sqrt(dt * dt + perp2);
}

}  // namespace

double sum_dist(const Gamma& gamma, double t, std::span<const Point> terminals) {
  const Point x = gamma.origin() + t * gamma.direction();
  double s = 0.0;
  for (const Point& p : terminals) s += (x - p).norm();
  return s;
}

MinResult minimize_on_interval(const Gamma& gamma, double t_lo, double t_hi,
                               std::span<const Point> terminals) {
  if (terminals.empty())
    throw std::invalid_argument("minimize_on_interval: empty terminal set");
  if (!(t_lo <= t_hi))
    throw std::invalid_argument("minimize_on_interval: empty interval");

  if (std::isinf(t_lo) || std::isinf(t_hi)) {
    double c_min = kInf, c_max = -kInf;
    double x_min = kInf, x_max = -kInf, y_min = kInf, y_max = -kInf;
    for (const Point& p : terminals) {
      double c = gamma.project(p);
      c_min = std::min(c_min, c);
      c_max = std::max(c_max, c);
      x_min = std::min(x_min, p.x());
      x_max = std::max(x_max, p.x());
      y_min = std::min(y_min, p.y());
      y_max = std::max(y_max, p.y());
    }
    double diag = std::hypot(x_max - x_min, y_max - y_min);
    t_lo = clamp_infinite(t_lo, std::min(c_min - diag, t_hi));
    t_hi = clamp_infinite(t_hi, std::max(c_max + diag, t_lo));
  }

  auto eval = [&](double t) { return sum_dist(gamma, t, terminals); };

  double a = t_lo, b = t_hi;
  if (a == b) return {a, eval(a)};

  double x1 = b - kGoldenRatio * (b - a);
  double x2 = a + kGoldenRatio * (b - a);
  double f1 = eval(x1), f2 = eval(x2);
  for (int it = 0; it < 80; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGoldenRatio * (b - a);
      f1 = eval(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGoldenRatio * (b - a);
      f2 = eval(x2);
    }
  }
  double best_t = f1 <= f2 ? x1 : x2;
  double best_f = std::min(f1, f2);

  // Newton polish on the derivative; steps are clamped into the interval
  // and a step that fails to descend falls back to the bracketed result.
  double t = best_t;
  for (int it = 0; it < 5; ++it) {
    double fp = 0.0, fpp = 0.0;
    bool kink = false;
    const Point x = gamma.origin() + t * gamma.direction();
    for (const Point& p : terminals) {
      double proj = gamma.project(p);
      double dt = t - proj;
      double d2 = (x - p).squaredNorm();
      double d = std::sqrt(d2);
      if (d < 1e-150) {
        kink = true;
        break;
      }
      fp += dt / d;
      fpp += (d2 - dt * dt) / (d2 * d);
    }
    if (kink || fpp <= 0.0) break;
    double next = std::clamp(t - fp / fpp, t_lo, t_hi);
    double f_next = eval(next);
    if (f_next < best_f) {
      best_f = f_next;
      best_t = next;
    }
    if (std::abs(next - t) < kParamTol) break;
    t = next;
  }
  return {best_t, best_f};
}

DeltaResult savings_delta(const BottleneckTree& aux, std::span<const int> terminals) {
  const size_t m = terminals.size();
  if (m != 3 && m != 4)
    throw std::invalid_argument("savings_delta: neighbor set must have size 3 or 4");
  DeltaResult r;
  r.removed.reserve(m - 1);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      EdgeRef e = aux.bottleneck_edge(terminals[i], terminals[j]);
      bool seen = false;
      for (const EdgeRef& f : r.removed) seen = seen || f.index == e.index;
      if (!seen) r.removed.push_back(e);
    }
  }
  if (r.removed.size() != m - 1)
    throw std::logic_error("savings_delta: bottleneck ultrametric violated");
  for (const EdgeRef& e : r.removed) r.delta += e.w;
  return r;
}

ParamInterval search_window(const PointList& points, const Gamma& gamma) {
  double c_min = kInf, c_max = -kInf;
  double x_min = kInf, x_max = -kInf, y_min = kInf, y_max = -kInf;
  for (const Point& p : points) {
    double c = gamma.project(p);
    c_min = std::min(c_min, c);
    c_max = std::max(c_max, c);
    x_min = std::min(x_min, p.x());
    x_max = std::max(x_max, p.x());
    y_min = std::min(y_min, p.y());
    y_max = std::max(y_max, p.y());
  }
  double diag = std::hypot(x_max - x_min, y_max - y_min);
  return {c_min - diag, c_max + diag};
}

namespace detail {

bool candidate_improves(const Candidate& challenger, const Candidate& best) {
  double s1 = challenger.savings(), s2 = best.savings();
  if (s1 != s2) return s1 > s2;
  if (challenger.line != best.line) return challenger.line < best.line;
  if (challenger.interval != best.interval) return challenger.interval < best.interval;
  return challenger.t < best.t;
}

namespace {

long subset_count(int m) {
  auto c3 = [](long x) { return x * (x - 1) * (x - 2) / 6; };
  auto c4 = [](long x) { return x * (x - 1) * (x - 2) * (x - 3) / 24; };
  return m >= 3 ? c3(m) + c4(m) : 0;
}

class IntervalScanner {
 public:
  IntervalScanner(const PointList& points, const Gamma& gamma, int line_index,
                  const BottleneckTree& aux,
                  const std::vector<LabelledInterval>& intervals, ParamInterval window)
      : pts_(points), gamma_(gamma), line_(line_index), aux_(aux),
        intervals_(intervals), window_(window) {
    proj_.resize(points.size());
    perp2_.resize(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
      proj_[i] = gamma.project(points[i]);
      double d2 = (points[i] - gamma.origin()).squaredNorm();
      perp2_[i] = std::max(0.0, d2 - proj_[i] * proj_[i]);
    }
  }

  // Scans intervals [first, last); returns the best candidate and the count
  // of enumerated subsets.
  std::pair<std::optional<Candidate>, long> run(size_t first, size_t last) {
    std::optional<Candidate> best;
    long enumerated = 0;
    std::vector<int> labels;
    for (size_t i = first; i < last; ++i) {
      const LabelledInterval& iv = intervals_[i];
      double lo = std::max(iv.t_lo, window_.lo);
      double hi = std::min(iv.t_hi, window_.hi);
      if (!(lo <= hi)) continue;
      iv.collect_labels(labels);
      const int m = static_cast<int>(labels.size());
      enumerated += subset_count(m);
      if (m < 3) continue;
      scan_interval(static_cast<int>(i), labels, lo, hi, best);
    }
    return {std::move(best), enumerated};
  }

 private:
  const PointList& pts_;
  const Gamma& gamma_;
  int line_;
  const BottleneckTree& aux_;
  const std::vector<LabelledInterval>& intervals_;
  ParamInterval window_;
  std::vector<double> proj_;
  std::vector<double> perp2_;

  void scan_interval(int iv_index, const std::vector<int>& labels, double lo, double hi,
                     std::optional<Candidate>& best) {
    const int m = static_cast<int>(labels.size());
    const double floor_gain = best ? std::max(kMinGain, best->savings()) : kMinGain;

    // Pairwise bottleneck edges once per interval; their distinct union
    // bounds any subset's delta from above.
    std::array<std::array<EdgeRef, 12>, 12> pair_edge;
    std::array<double, 12> dist_to_seg;
    double delta_all = 0.0;
    std::array<int, 11> distinct_idx;
    int distinct_count = 0;
    for (int i = 0; i < m; ++i) {
      dist_to_seg[i] = seg_distance(proj_[labels[i]], perp2_[labels[i]], lo, hi);
      for (int j = i + 1; j < m; ++j) {
        EdgeRef e = aux_.bottleneck_edge(labels[i], labels[j]);
        pair_edge[i][j] = e;
        bool seen = false;
        for (int k = 0; k < distinct_count; ++k) seen = seen || distinct_idx[k] == e.index;
        if (!seen && distinct_count < 11) {
          distinct_idx[distinct_count++] = e.index;
          delta_all += e.w;
        }
      }
    }

    std::array<double, 12> sorted_dist;
    std::copy_n(dist_to_seg.begin(), m, sorted_dist.begin());
    std::sort(sorted_dist.begin(), sorted_dist.begin() + m);
    double sigma_lb3 = sorted_dist[0] + sorted_dist[1] + sorted_dist[2];
    if (delta_all - sigma_lb3 <= floor_gain) return;

    std::array<int, 4> pick{};
    for (int size = 3; size <= 4 && size <= m; ++size) {
      enumerate_subsets(iv_index, labels, pair_edge, dist_to_seg, lo, hi, size, 0, 0,
                        pick, best);
    }
  }

  void enumerate_subsets(int iv_index, const std::vector<int>& labels,
                         const std::array<std::array<EdgeRef, 12>, 12>& pair_edge,
                         const std::array<double, 12>& dist_to_seg, double lo, double hi,
                         int size, int depth, int start, std::array<int, 4>& pick,
                         std::optional<Candidate>& best) {
    if (depth == size) {
      evaluate_subset(iv_index, labels, pair_edge, dist_to_seg, lo, hi, size, pick, best);
      return;
    }
    for (int i = start; i < static_cast<int>(labels.size()) - (size - depth - 1); ++i) {
      pick[depth] = i;
      enumerate_subsets(iv_index, labels, pair_edge, dist_to_seg, lo, hi, size, depth + 1,
                        i + 1, pick, best);
    }
  }

  void evaluate_subset(int iv_index, const std::vector<int>& labels,
                       const std::array<std::array<EdgeRef, 12>, 12>& pair_edge,
                       const std::array<double, 12>& dist_to_seg, double lo, double hi,
                       int size, const std::array<int, 4>& pick,
                       std::optional<Candidate>& best) {
    const double floor_gain = best ? std::max(kMinGain, best->savings()) : kMinGain;

    std::array<EdgeRef, 3> removed;
    int removed_count = 0;
    double delta = 0.0;
    double sigma_lb = 0.0;
    for (int i = 0; i < size; ++i) {
      sigma_lb += dist_to_seg[pick[i]];
      for (int j = i + 1; j < size; ++j) {
        const EdgeRef& e = pair_edge[pick[i]][pick[j]];
        bool seen = false;
        for (int k = 0; k < removed_count; ++k) seen = seen || removed[k].index == e.index;
        if (!seen) {
          if (removed_count == 3) return;  // cannot happen; guard the buffer
          removed[removed_count++] = e;
          delta += e.w;
        }
      }
    }
    if (delta - sigma_lb <= floor_gain) return;

    SubsetScratch sc;
    sc.size = size;
    for (int i = 0; i < size; ++i) {
      sc.ids[i] = labels[pick[i]];
      sc.pts[i] = pts_[sc.ids[i]];
    }
    MinResult mr = minimize_on_interval(gamma_, lo, hi,
                                        std::span<const Point>(sc.pts.data(), size));
    double savings = delta - mr.sigma;
    if (savings <= floor_gain) return;

    const Point s = gamma_.origin() + mr.t * gamma_.direction();
    for (int id : labels)
      if ((s - pts_[id]).norm() < kTerminalSnap) return;

    Candidate c;
    c.t = mr.t;
    c.point = s;
    c.neighbors.assign(sc.ids.begin(), sc.ids.begin() + size);
    c.sigma = mr.sigma;
    c.delta = delta;
    c.removed.assign(removed.begin(), removed.begin() + removed_count);
    c.line = line_;
    c.interval = iv_index;
    if (!best || candidate_improves(c, *best)) best = std::move(c);
  }
};

}  // namespace

ScanResult scan_line(const PointList& points, const Gamma& gamma, int line_index,
                     const BottleneckTree& aux, int threads) {
  ScanResult res;
  std::vector<LabelledInterval> intervals = labelled_intervals(points, gamma);
  res.interval_count = static_cast<long>(intervals.size());
  ParamInterval window = search_window(points, gamma);
  IntervalScanner scanner(points, gamma, line_index, aux, intervals, window);

  const size_t n_iv = intervals.size();
  if (threads <= 1 || n_iv < 64) {
    auto [best, count] = scanner.run(0, n_iv);
    res.best = std::move(best);
    res.candidates_evaluated = count;
    return res;
  }

  const int t = std::min<int>(threads, 64);
  std::vector<std::pair<std::optional<Candidate>, long>> parts(t);
  std::vector<std::thread> workers;
  workers.reserve(t);
  for (int k = 0; k < t; ++k) {
    size_t first = n_iv * k / t, last = n_iv * (k + 1) / t;
    workers.emplace_back([&, k, first, last] { parts[k] = scanner.run(first, last); });
  }
  for (auto& w : workers) w.join();
  for (auto& [cand, count] : parts) {
    res.candidates_evaluated += count;
    if (cand && (!res.best || candidate_improves(*cand, *res.best)))
      res.best = std::move(cand);
  }
  return res;
}

}  // namespace detail

namespace {

Solution assemble(const PointList& points, Tree&& mst,
                  std::optional<Candidate>&& winner, SolveStats stats) {
  Solution sol;
  sol.baseline_mst_weight = mst.total_weight;
  sol.stats = stats;
  sol.stats.n = static_cast<int>(points.size());

  bool keep = winner.has_value() && winner->savings() > kMinGain;
  if (keep) {
    for (const Point& p : points)
      if ((winner->point - p).norm() < kTerminalSnap) keep = false;
  }
  if (!keep) {
    sol.tree = std::move(mst);
    sol.total_weight = sol.baseline_mst_weight;
    sol.savings = 0.0;
    return sol;
  }

  PointList all = points;
  all.push_back(winner->point);
  Tree final_tree = emst(all);
  final_tree.n_terminals = static_cast<int>(points.size());
  double claimed = sol.baseline_mst_weight - winner->savings();
  if (std::abs(final_tree.total_weight - claimed) > 1e-9)
    throw std::logic_error("solve: savings identity violated on recompute");

  sol.tree = std::move(final_tree);
  sol.steiner_points = {winner->point};
  sol.total_weight = sol.tree.total_weight;
  sol.savings = sol.baseline_mst_weight - sol.total_weight;
  for (const EdgeRef& e : winner->removed)
    sol.removed_mst_edges.push_back({e.u, e.v, e.w});
  sol.winners.push_back(std::move(*winner));
  return sol;
}

}  // namespace

Solution solve_multi_lines(const PointList& points, const std::vector<Gamma>& lines,
                           const SolveOptions& options) {
  if (points.size() < 2)
    throw std::invalid_argument("solve: need at least two points");
  if (lines.empty()) throw std::invalid_argument("solve: need at least one line");
  for (const Point& p : points)
    if (!is_finite(p)) throw std::invalid_argument("solve: non-finite coordinate");

  auto t0 = std::chrono::steady_clock::now();
  Tree mst = emst(points);
  BottleneckTree aux(mst);

  SolveStats stats;
  std::optional<Candidate> best;
  for (int li = 0; li < static_cast<int>(lines.size()); ++li) {
    detail::ScanResult r = detail::scan_line(points, lines[li], li, aux, options.threads);
    stats.interval_count += r.interval_count;
    stats.candidates_evaluated += r.candidates_evaluated;
    if (r.best && (!best || detail::candidate_improves(*r.best, *best)))
      best = std::move(r.best);
  }

  Solution sol = assemble(points, std::move(mst), std::move(best), stats);
  sol.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return sol;
}

Solution solve_one_line(const PointList& points, const Gamma& gamma,
                        const SolveOptions& options) {
  return solve_multi_lines(points, {gamma}, options);
}

}  // namespace rst
