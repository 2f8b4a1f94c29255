#include "rst/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rst::oracle {
namespace {

double prim_weight(const std::vector<double>& xs, const std::vector<double>& ys) {
  const int n = static_cast<int>(xs.size());
  std::vector<double> dist(n, kInf);
  std::vector<char> used(n, 0);
  dist[0] = 0.0;
  double total = 0.0;
  for (int it = 0; it < n; ++it) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!used[v] && (best == -1 || dist[v] < dist[best])) best = v;
    used[best] = 1;
    total += dist[best];
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      double dx = xs[v] - xs[best], dy = ys[v] - ys[best];
      double d = std::sqrt(dx * dx + dy * dy);
      if (d < dist[v]) dist[v] = d;
    }
  }
  return total;
}

}  // namespace

Tree prim_mst(const PointList& points) {
  const int n = static_cast<int>(points.size());
  if (n < 1) throw std::invalid_argument("prim_mst: empty point set");
  std::vector<double> dist(n, kInf);
  std::vector<int> from(n, -1);
  std::vector<char> used(n, 0);
  dist[0] = 0.0;

  Tree t;
  t.n_terminals = n;
  t.vertices = points;
  for (int it = 0; it < n; ++it) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!used[v] && (best == -1 || dist[v] < dist[best])) best = v;
    used[best] = 1;
    if (from[best] >= 0) {
      int u = std::min(from[best], best), v = std::max(from[best], best);
      double w = distance(points[u], points[v]);
      t.edges.push_back({u, v, w});
      t.total_weight += w;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      double d = distance(points[v], points[best]);
      if (d < dist[v]) {
        dist[v] = d;
        from[v] = best;
      }
    }
  }
  return t;
}

SampledBest sampled_best_steiner(const PointList& points, const Gamma& gamma, int samples) {
  if (samples < 2) throw std::invalid_argument("sampled_best_steiner: need >= 2 samples");
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
  double lo = std::max(c_min - diag, gamma.t_lo());
  double hi = std::min(c_max + diag, gamma.t_hi());
  if (lo > hi) {
    // The window misses gamma's range entirely; probe the nearest end.
    lo = hi = (c_min - diag > gamma.t_hi()) ? gamma.t_hi() : gamma.t_lo();
  }

  std::vector<double> xs(points.size() + 1), ys(points.size() + 1);
  for (size_t i = 0; i < points.size(); ++i) {
    xs[i] = points[i].x();
    ys[i] = points[i].y();
  }
  SampledBest best{lo, kInf};
  for (int i = 0; i < samples; ++i) {
    double t = lo + (hi - lo) * i / (samples - 1);
    Point s = gamma.at(t);
    xs.back() = s.x();
    ys.back() = s.y();
    double w = prim_weight(xs, ys);
    if (w < best.weight) best = {t, w};
  }
  return best;
}

int nearest_in_cone(const PointList& points, const Point& apex, int cone) {
  int best = -1;
  double best_d = kInf;
  for (int i = 0; i < static_cast<int>(points.size()); ++i) {
    if (points[i] == apex) continue;
    if (!cone_contains(apex, cone, points[i])) continue;
    double d = distance(apex, points[i]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

double forced_star_mst(const Tree& tree, const Point& s, std::span<const int> star) {
  const int n = tree.n_vertices();
  std::vector<int> parent(n + 1);
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

  double total = 0.0;
  for (int a : star) {
    unite(n, a);
    total += distance(s, tree.vertices[a]);
  }
  std::vector<int> order(tree.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    const TreeEdge &a = tree.edges[i], &b = tree.edges[j];
    if (a.w != b.w) return a.w < b.w;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });
  for (int idx : order) {
    const TreeEdge& e = tree.edges[idx];
    if (unite(e.u, e.v)) total += e.w;
  }
  return total;
}

}  // namespace rst::oracle
