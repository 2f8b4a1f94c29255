#include "rst/mst.hpp"

#include "rst/delaunay.hpp"

#include <algorithm>
#include <numeric>

namespace rst {
namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

Tree emst(const PointList& points) {
  const int n = static_cast<int>(points.size());
  Triangulation tri = delaunay(points);

  std::vector<TreeEdge> cand;
  cand.reserve(tri.edges.size());
  for (auto [u, v] : tri.edges) cand.push_back({u, v, distance(points[u], points[v])});
  std::sort(cand.begin(), cand.end(), [](const TreeEdge& a, const TreeEdge& b) {
    if (a.w != b.w) return a.w < b.w;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });

  Tree t;
  t.n_terminals = n;
  t.vertices = points;
  t.edges.reserve(n > 0 ? n - 1 : 0);
  Dsu dsu(n);
  for (const TreeEdge& e : cand) {
    if (dsu.unite(e.u, e.v)) {
      t.edges.push_back(e);
      t.total_weight += e.w;
      if (static_cast<int>(t.edges.size()) == n - 1) break;
    }
  }
  if (static_cast<int>(t.edges.size()) != n - 1)
    throw std::logic_error("emst: triangulation not connected");
  return t;
}

}  // namespace rst
