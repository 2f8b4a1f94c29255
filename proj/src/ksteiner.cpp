#include "rst/ksteiner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

namespace rst {
namespace {

constexpr double kCoordTol = 1e-10;
constexpr double kTerminalSnap = 1e-9;

void collect_sorted_labels(const LabelledInterval& iv, std::vector<int>& out) {
  iv.collect_labels(out);
}

void combinations(const std::vector<int>& items, int size, std::vector<std::vector<int>>& out) {
  std::vector<int> pick(size);
  auto rec = [&](auto&& self, int depth, int start) -> void {
    if (depth == size) {
      out.emplace_back(pick.begin(), pick.end());
      return;
    }
    for (int i = start; i <= static_cast<int>(items.size()) - (size - depth); ++i) {
      pick[depth] = items[i];
      self(self, depth + 1, i + 1);
    }
  };
  if (size <= static_cast<int>(items.size())) rec(rec, 0, 0);
}

int shared_count(const std::vector<int>& a, const std::vector<int>& b) {
  int c = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++c;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return c;
}

double point_seg_dist(const Point& p, const Point& a, const Point& b) {
  Point ab = b - a;
  double len2 = ab.squaredNorm();
  if (len2 == 0.0) return (p - a).norm();
  double t = std::clamp(ab.dot(p - a) / len2, 0.0, 1.0);
  return (p - (a + t * ab)).norm();
}

double seg_seg_dist(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
  auto side = [](const Point& p, const Point& q, const Point& r) {
    double c = cross2(q - p, r - p);
    return (c > 0.0) - (c < 0.0);
  };
  int s1 = side(a1, a2, b1), s2 = side(a1, a2, b2);
  int s3 = side(b1, b2, a1), s4 = side(b1, b2, a2);
  if (s1 * s2 < 0 && s3 * s4 < 0) return 0.0;
  return std::min(std::min(point_seg_dist(b1, a1, a2), point_seg_dist(b2, a1, a2)),
                  std::min(point_seg_dist(a1, b1, b2), point_seg_dist(a2, b1, b2)));
}

double star_length(const Point& s, const std::vector<int>& leaves, const PointList& pts) {
  double total = 0.0;
  for (int a : leaves) total += (s - pts[a]).norm();
  return total;
}

}  // namespace

std::vector<ViableForest> enumerate_topologies(std::span<const BoundInterval> intervals,
                                               const EnumOptions& options) {
  if (intervals.empty() || intervals.size() > 2)
    throw std::invalid_argument("enumerate_topologies: one or two intervals");
  if (options.max_degree < 3 || options.max_degree > 6)
    throw std::invalid_argument("enumerate_topologies: max_degree must be in [3, 6]");

  std::vector<ViableForest> out;
  std::vector<int> labels0, labels1;
  collect_sorted_labels(*intervals[0].interval, labels0);

  if (intervals.size() == 1) {
    std::vector<std::vector<int>> combos;
    for (int size = 3; size <= options.max_degree; ++size) combinations(labels0, size, combos);
    for (auto& c : combos) {
      ViableForest f;
      f.k = 1;
      f.node[0] = {intervals[0].gamma, intervals[0].t_lo, intervals[0].t_hi, std::move(c)};
      out.push_back(std::move(f));
    }
    return out;
  }

  collect_sorted_labels(*intervals[1].interval, labels1);
  for (int ss = 0; ss <= 1; ++ss) {
    std::vector<std::vector<int>> combos0, combos1;
    for (int size = std::max(2, 3 - ss); size + ss <= options.max_degree; ++size) {
      if (size + ss >= 3) combinations(labels0, size, combos0);
    }
    for (int size = std::max(2, 3 - ss); size + ss <= options.max_degree; ++size) {
      if (size + ss >= 3) combinations(labels1, size, combos1);
    }
    for (const auto& n1 : combos0) {
      for (const auto& n2 : combos1) {
        if (shared_count(n1, n2) + ss > 1) continue;  // would close a cycle
        ViableForest f;
        f.k = 2;
        f.ss_edge = ss != 0;
        f.node[0] = {intervals[0].gamma, intervals[0].t_lo, intervals[0].t_hi, n1};
        f.node[1] = {intervals[1].gamma, intervals[1].t_lo, intervals[1].t_hi, n2};
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

FixedTopologySolution fixed_topology_solve(const ViableForest& forest,
                                           const PointList& points) {
  if (forest.k < 1 || forest.k > 2)
    throw std::invalid_argument("fixed_topology_solve: k must be 1 or 2");
  for (int i = 0; i < forest.k; ++i)
    if (forest.node[i].gamma == nullptr)
      throw std::invalid_argument("fixed_topology_solve: node not bound to a line");

  std::array<std::vector<Point>, 2> leaf_pts;
  for (int i = 0; i < forest.k; ++i) {
    for (int a : forest.node[i].leaves) leaf_pts[i].push_back(points[a]);
    if (leaf_pts[i].empty())
      throw std::invalid_argument("fixed_topology_solve: node without leaves");
  }

  FixedTopologySolution sol;
  if (forest.k == 1) {
    MinResult m = minimize_on_interval(*forest.node[0].gamma, forest.node[0].t_lo,
                                       forest.node[0].t_hi, leaf_pts[0]);
    sol.t[0] = m.t;
    sol.length = m.sigma;
    return sol;
  }

  if (!forest.ss_edge) {
    double total = 0.0;
    for (int i = 0; i < 2; ++i) {
      MinResult m = minimize_on_interval(*forest.node[i].gamma, forest.node[i].t_lo,
                                         forest.node[i].t_hi, leaf_pts[i]);
      sol.t[i] = m.t;
      total += m.sigma;
    }
    sol.length = total;
    return sol;
  }

  // Coupled case: cyclic coordinate descent, each sweep re-solving one node
  // with the other's position as an extra fixed terminal.
  const Gamma* g[2] = {forest.node[0].gamma, forest.node[1].gamma};
  double lo[2] = {forest.node[0].t_lo, forest.node[1].t_lo};
  double hi[2] = {forest.node[0].t_hi, forest.node[1].t_hi};

  for (int i = 0; i < 2; ++i)
    sol.t[i] = minimize_on_interval(*g[i], lo[i], hi[i], leaf_pts[i]).t;

  auto node_pos = [&](int i, double t) { return g[i]->origin() + t * g[i]->direction(); };
  auto total_len = [&](double t0, double t1) {
    Point s0 = node_pos(0, t0), s1 = node_pos(1, t1);
    return star_length(s0, forest.node[0].leaves, points) +
           star_length(s1, forest.node[1].leaves, points) + (s0 - s1).norm();
  };

  std::array<std::vector<Point>, 2> ext = leaf_pts;
  ext[0].push_back(Point::Zero());
  ext[1].push_back(Point::Zero());

  for (int round = 0; round < 3; ++round) {
    for (int sweep = 0; sweep < 200; ++sweep) {
      double moved = 0.0;
      for (int i = 0; i < 2; ++i) {
        ext[i].back() = node_pos(1 - i, sol.t[1 - i]);
        MinResult m = minimize_on_interval(*g[i], lo[i], hi[i], ext[i]);
        moved += std::abs(m.t - sol.t[i]);
        sol.t[i] = m.t;
      }
      if (moved < kCoordTol) break;
    }
    // Local grid polish: certify no descent direction remains.
    double cur = total_len(sol.t[0], sol.t[1]);
    double h0 = std::max(1e-7, 1e-6 * (std::abs(sol.t[0]) + 1.0));
    double h1 = std::max(1e-7, 1e-6 * (std::abs(sol.t[1]) + 1.0));
    double best = cur;
    double bt0 = sol.t[0], bt1 = sol.t[1];
    for (int i = -5; i <= 5; ++i) {
      for (int j = -5; j <= 5; ++j) {
        double t0 = std::clamp(sol.t[0] + i * h0 / 5.0, lo[0], hi[0]);
        double t1 = std::clamp(sol.t[1] + j * h1 / 5.0, lo[1], hi[1]);
        double v = total_len(t0, t1);
        if (v < best - 1e-12) {
          best = v;
          bt0 = t0;
          bt1 = t1;
        }
      }
    }
    if (best >= cur - 1e-12) break;
    sol.t[0] = bt0;
    sol.t[1] = bt1;
  }
  sol.length = total_len(sol.t[0], sol.t[1]);
  return sol;
}

FFixedResult min_F_fixed_tree(const Tree& mst, const BottleneckTree& aux,
                              const ViableForest& forest,
                              std::span<const Point> steiner_positions) {
  if (static_cast<int>(steiner_positions.size()) != forest.k)
    throw std::invalid_argument("min_F_fixed_tree: one position per Steiner node");
  const PointList& pts = mst.vertices;
  const int n = mst.n_vertices();

  double sigma = 0.0;
  for (int i = 0; i < forest.k; ++i)
    sigma += star_length(steiner_positions[i], forest.node[i].leaves, pts);
  if (forest.k == 2 && forest.ss_edge)
    sigma += (steiner_positions[0] - steiner_positions[1]).norm();

  int shared = 0;
  if (forest.k == 2)
    shared = shared_count(forest.node[0].leaves, forest.node[1].leaves);
  if (forest.k == 2 && shared + (forest.ss_edge ? 1 : 0) > 1)
    throw std::invalid_argument("min_F_fixed_tree: forest edges close a cycle");

  auto star_size_ok = [&](int i) {
    size_t m = forest.node[i].leaves.size();
    return m == 3 || m == 4;
  };

  FFixedResult out;
  if (forest.k == 1 && star_size_ok(0)) {
    DeltaResult d = savings_delta(aux, forest.node[0].leaves);
    out.weight = mst.total_weight + sigma - d.delta;
    out.removed = std::move(d.removed);
    return out;
  }

  if (forest.k == 2 && !forest.ss_edge && shared == 0 && star_size_ok(0) && star_size_ok(1)) {
    DeltaResult d1 = savings_delta(aux, forest.node[0].leaves);
    DeltaResult d2 = savings_delta(aux, forest.node[1].leaves);
    bool interacting = false;
    auto crosses = [&](const std::vector<EdgeRef>& removed, const std::vector<int>& other) {
      for (const EdgeRef& e : removed)
        for (size_t i = 0; i < other.size() && !interacting; ++i)
          for (size_t j = i + 1; j < other.size(); ++j)
            if (aux.edge_on_path(e.index, other[i], other[j])) {
              interacting = true;
              return;
            }
    };
    crosses(d1.removed, forest.node[1].leaves);
    if (!interacting) crosses(d2.removed, forest.node[0].leaves);
    if (!interacting) {
      out.weight = mst.total_weight + sigma - d1.delta - d2.delta;
      out.removed = std::move(d1.removed);
      out.removed.insert(out.removed.end(), d2.removed.begin(), d2.removed.end());
      return out;
    }
  }

  // Forced-edge Kruskal over the MST edges plus the forest's star edges.
  std::vector<int> parent(n + forest.k);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  };
  for (int i = 0; i < forest.k; ++i)
    for (int a : forest.node[i].leaves)
      if (!unite(n + i, a))
        throw std::invalid_argument("min_F_fixed_tree: forest edges close a cycle");
  if (forest.k == 2 && forest.ss_edge && !unite(n, n + 1))
    throw std::invalid_argument("min_F_fixed_tree: forest edges close a cycle");

  std::vector<int> order(mst.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    const TreeEdge &a = mst.edges[i], &b = mst.edges[j];
    if (a.w != b.w) return a.w < b.w;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  double kept = 0.0;
  for (int idx : order) {
    const TreeEdge& e = mst.edges[idx];
    if (unite(e.u, e.v))
      kept += e.w;
    else
      out.removed.push_back({idx, e.u, e.v, e.w});
  }
  out.weight = sigma + kept;
  return out;
}

namespace {

struct PairInterval {
  const Gamma* gamma;
  const LabelledInterval* interval;
  int line;
  int index;  // interval index within its line
  double lo, hi;
  std::vector<int> labels;
  std::vector<double> dist;  // label distance to the clipped segment
  Point seg_a, seg_b;
  double max_bottleneck = 0.0;
  double s2 = kInf, s3 = kInf;  // sums of the 2 / 3 smallest label distances

  double label_dist(int id) const {
    for (size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == id) return dist[i];
    return 0.0;
  }
};

double forest_sigma_lb(const ViableForest& f, const PairInterval& A, const PairInterval& B,
                       double seg_gap) {
  double lb = f.ss_edge ? seg_gap : 0.0;
  for (int a : f.node[0].leaves) lb += A.label_dist(a);
  for (int b : f.node[1].leaves) lb += B.label_dist(b);
  return lb;
}

struct Best2 {
  double value = kInf;
  ViableForest forest;
  Point s0, s1;
  std::vector<EdgeRef> removed;
};

}  // namespace

Solution solve_k(const PointList& points, const std::vector<Gamma>& lines, int k,
                 const SolveOptions& options) {
  if (k != 1 && k != 2) throw std::invalid_argument("solve_k: k must be 1 or 2");
  if (k == 1) return solve_multi_lines(points, lines, options);
  if (points.size() < 2) throw std::invalid_argument("solve_k: need at least two points");
  if (lines.empty()) throw std::invalid_argument("solve_k: need at least one line");

  auto t0 = std::chrono::steady_clock::now();
  Tree mst = emst(points);
  BottleneckTree aux(mst);
  const double W0 = mst.total_weight;

  SolveStats stats;
  stats.n = static_cast<int>(points.size());

  // k' = 1 pass (shared with solve_multi_lines).
  std::optional<Candidate> best1;
  for (int li = 0; li < static_cast<int>(lines.size()); ++li) {
    detail::ScanResult r = detail::scan_line(points, lines[li], li, aux, options.threads);
    stats.interval_count += r.interval_count;
    stats.candidates_evaluated += r.candidates_evaluated;
    if (r.best && (!best1 || detail::candidate_improves(*r.best, *best1)))
      best1 = std::move(r.best);
  }
  if (best1 && best1->savings() > kMinGain) {
    for (const Point& p : points)
      if ((best1->point - p).norm() < kTerminalSnap) {
        best1.reset();
        break;
      }
  }
  double best_value = W0;
  if (best1 && best1->savings() > kMinGain) best_value = W0 - best1->savings();

  // k' = 2: interval pairs across all lines. The window is padded further
  // than for a single point: a node beyond 4 diameters contributes at least
  // 8 diameters of star length against at most 7 removable edges.
  std::vector<std::vector<LabelledInterval>> per_line(lines.size());
  std::vector<PairInterval> ivs;
  for (int li = 0; li < static_cast<int>(lines.size()); ++li) {
    const Gamma& g = lines[li];
    ParamInterval w = search_window(points, g);
    double pad = (w.hi - w.lo);  // window already spans hull +- diag
    double wlo = w.lo - 1.5 * pad, whi = w.hi + 1.5 * pad;
    per_line[li] = labelled_intervals(points, g);
    std::vector<int> labels;
    for (int ii = 0; ii < static_cast<int>(per_line[li].size()); ++ii) {
      const LabelledInterval& iv = per_line[li][ii];
      double lo = std::max(iv.t_lo, wlo);
      double hi = std::min(iv.t_hi, whi);
      if (!(lo <= hi)) continue;
      iv.collect_labels(labels);
      if (labels.size() < 2) continue;
      PairInterval pi;
      pi.gamma = &g;
      pi.interval = &iv;
      pi.line = li;
      pi.index = ii;
      pi.lo = lo;
      pi.hi = hi;
      pi.labels = labels;
      pi.seg_a = g.origin() + lo * g.direction();
      pi.seg_b = g.origin() + hi * g.direction();
      for (int a : labels)
        pi.dist.push_back(point_seg_dist(points[a], pi.seg_a, pi.seg_b));
      for (size_t i = 0; i < labels.size(); ++i)
        for (size_t j = i + 1; j < labels.size(); ++j)
          pi.max_bottleneck =
              std::max(pi.max_bottleneck, aux.bottleneck_edge(labels[i], labels[j]).w);
      std::vector<double> d = pi.dist;
      std::sort(d.begin(), d.end());
      pi.s2 = d.size() >= 2 ? d[0] + d[1] : kInf;
      pi.s3 = d.size() >= 3 ? d[0] + d[1] + d[2] : kInf;
      ivs.push_back(std::move(pi));
    }
  }

  Best2 best2;
  const EnumOptions enum_opts;
  std::vector<ViableForest> forests;
  for (size_t a = 0; a < ivs.size(); ++a) {
    for (size_t b = a; b < ivs.size(); ++b) {
      const PairInterval &A = ivs[a], &B = ivs[b];
      double max_b = std::max(A.max_bottleneck, B.max_bottleneck);
      double d_ab = seg_seg_dist(A.seg_a, A.seg_b, B.seg_a, B.seg_b);
      double gain_no_edge = 6.0 * max_b - (A.s3 + B.s3);
      double gain_ss_edge = 7.0 * max_b - (A.s2 + B.s2 + d_ab);
      if (W0 - std::max(gain_no_edge, gain_ss_edge) >= best_value - kMinGain) continue;

      const BoundInterval bound[2] = {{A.gamma, A.interval, A.lo, A.hi},
                                      {B.gamma, B.interval, B.lo, B.hi}};
      forests = enumerate_topologies(bound, enum_opts);
      stats.candidates_evaluated += static_cast<long>(forests.size());
      for (ViableForest& f : forests) {
        int removal_count = static_cast<int>(f.node[0].leaves.size() +
                                             f.node[1].leaves.size()) -
                            2 + (f.ss_edge ? 1 : 0);
        double sigma_lb = forest_sigma_lb(f, A, B, f.ss_edge ? d_ab : 0.0);
        if (W0 + sigma_lb - removal_count * max_b >= best_value - kMinGain) continue;

        FixedTopologySolution fts = fixed_topology_solve(f, points);
        Point s0 = f.node[0].gamma->origin() + fts.t[0] * f.node[0].gamma->direction();
        Point s1 = f.node[1].gamma->origin() + fts.t[1] * f.node[1].gamma->direction();
        if ((s0 - s1).norm() < kTerminalSnap) continue;
        bool snapped = false;
        for (int id : A.labels) snapped = snapped || (s0 - points[id]).norm() < kTerminalSnap;
        for (int id : B.labels) snapped = snapped || (s1 - points[id]).norm() < kTerminalSnap;
        if (snapped) continue;

        Point spos[2] = {s0, s1};
        FFixedResult ffr = min_F_fixed_tree(mst, aux, f, spos);
        if (ffr.weight < best_value - kMinGain && ffr.weight < best2.value - kMinGain) {
          best2.value = ffr.weight;
          best2.forest = f;
          best2.s0 = s0;
          best2.s1 = s1;
          best2.removed = std::move(ffr.removed);
        }
      }
    }
  }

  // Assemble: prefer the k'=2 configuration only on strict improvement.
  Solution sol;
  sol.baseline_mst_weight = W0;
  sol.stats = stats;
  bool use2 = best2.value < best_value - kMinGain;
  if (use2) {
    for (const Point& p : points)
      if ((best2.s0 - p).norm() < kTerminalSnap || (best2.s1 - p).norm() < kTerminalSnap)
        use2 = false;
  }
  if (use2) {
    PointList all = points;
    all.push_back(best2.s0);
    all.push_back(best2.s1);
    Tree final_tree = emst(all);
    final_tree.n_terminals = static_cast<int>(points.size());
    if (final_tree.total_weight > best2.value + 1e-9)
      throw std::logic_error("solve_k: recomputed tree exceeds the claimed weight");
    sol.tree = std::move(final_tree);
    sol.steiner_points = {best2.s0, best2.s1};
    sol.total_weight = sol.tree.total_weight;
    sol.savings = W0 - sol.total_weight;
    for (const EdgeRef& e : best2.removed)
      sol.removed_mst_edges.push_back({e.u, e.v, e.w});
  } else if (best1 && best1->savings() > kMinGain) {
    PointList all = points;
    all.push_back(best1->point);
    Tree final_tree = emst(all);
    final_tree.n_terminals = static_cast<int>(points.size());
    if (std::abs(final_tree.total_weight - (W0 - best1->savings())) > 1e-9)
      throw std::logic_error("solve_k: savings identity violated on recompute");
    sol.tree = std::move(final_tree);
    sol.steiner_points = {best1->point};
    sol.total_weight = sol.tree.total_weight;
    sol.savings = W0 - sol.total_weight;
    for (const EdgeRef& e : best1->removed)
      sol.removed_mst_edges.push_back({e.u, e.v, e.w});
    sol.winners.push_back(std::move(*best1));
  } else {
    sol.tree = std::move(mst);
    sol.total_weight = W0;
    sol.savings = 0.0;
  }
  sol.stats.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
          .count();
  return sol;
}

}  // namespace rst
