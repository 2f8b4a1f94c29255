#include "rst/bottleneck.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rst {

namespace detail {

void EulerLca::build(const std::vector<std::vector<int>>& children, int root) {
  const int n = static_cast<int>(children.size());
  first_.assign(n, -1);
  euler_node_.clear();
  euler_depth_.clear();
  euler_node_.reserve(2 * n);
  euler_depth_.reserve(2 * n);

  // Iterative Euler tour; merge trees can be deep, so no recursion.
  struct Frame {
    int node;
    int child;
    int depth;
  };
  auto emit = [&](int node, int depth) {
    euler_node_.push_back(node);
    euler_depth_.push_back(depth);
  };
  std::vector<Frame> stack;
  stack.push_back({root, 0, 0});
  first_[root] = 0;
  emit(root, 0);
  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.child < static_cast<int>(children[f.node].size())) {
      int c = children[f.node][f.child++];
      first_[c] = static_cast<int32_t>(euler_node_.size());
      emit(c, f.depth + 1);
      stack.push_back({c, 0, f.depth + 1});
    } else {
      stack.pop_back();
      if (!stack.empty()) emit(stack.back().node, stack.back().depth);
    }
  }

  m_ = static_cast<int>(euler_node_.size());
  levels_ = 1;
  while ((1 << levels_) <= m_) ++levels_;
  table_.assign(static_cast<size_t>(levels_) * m_, 0);
  for (int i = 0; i < m_; ++i) table_[i] = i;
  for (int k = 1; k < levels_; ++k) {
    int span = 1 << k;
    int32_t* cur = table_.data() + static_cast<size_t>(k) * m_;
    const int32_t* prev = table_.data() + static_cast<size_t>(k - 1) * m_;
    for (int i = 0; i + span <= m_; ++i)
      cur[i] = arg_min(prev[i], prev[i + span / 2]);
  }
}

int EulerLca::lca(int a, int b) const {
  int l = first_[a], r = first_[b];
  if (l > r) std::swap(l, r);
  int k = 31 - __builtin_clz(r - l + 1);
  const int32_t* row = table_.data() + static_cast<size_t>(k) * m_;
  return euler_node_[arg_min(row[l], row[r - (1 << k) + 1])];
}

}  // namespace detail

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
};

}  // namespace

BottleneckTree::BottleneckTree(const Tree& tree) : edges_(tree.edges) {
  n_ = tree.n_vertices();
  if (static_cast<int>(edges_.size()) != n_ - 1)
    throw std::invalid_argument("BottleneckTree: input is not a spanning tree");

  // Kruskal merge order under the deterministic tie-break.
  std::vector<int> order(edges_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    const TreeEdge &a = edges_[i], &b = edges_[j];
    if (a.w != b.w) return a.w < b.w;
    if (a.u != b.u) return a.u < b.u;
    return a.v < b.v;
  });

  // Merge tree: leaves 0..n-1, internal node n-1+k for the k-th accepted edge.
  const int total = 2 * n_ - 1;
  std::vector<std::vector<int>> children(total);
  merge_edge_.assign(total, -1);
  Dsu dsu(n_);
  std::vector<int> comp_root(n_);
  std::iota(comp_root.begin(), comp_root.end(), 0);
  int next_node = n_;
  for (int idx : order) {
    const TreeEdge& e = edges_[idx];
    int ra = dsu.find(e.u), rb = dsu.find(e.v);
    if (ra == rb)
      throw std::invalid_argument("BottleneckTree: input contains a cycle");
    int m = next_node++;
    children[m] = {comp_root[ra], comp_root[rb]};
    merge_edge_[m] = idx;
    dsu.parent[rb] = ra;
    comp_root[dsu.find(ra)] = m;
  }
  if (next_node != total)
    throw std::invalid_argument("BottleneckTree: disconnected input");
  merge_lca_.build(children, total - 1);

  // Rooted copy of the tree itself for path-membership queries.
  std::vector<std::vector<std::pair<int, int>>> adj(n_);
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    adj[edges_[i].u].push_back({edges_[i].v, i});
    adj[edges_[i].v].push_back({edges_[i].u, i});
  }
  std::vector<std::vector<int>> vchildren(n_);
  std::vector<int> bfs{0};
  std::vector<char> seen(n_, 0);
  seen[0] = 1;
  bfs.reserve(n_);
  for (size_t i = 0; i < bfs.size(); ++i) {
    int v = bfs[i];
    for (auto [w, _] : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        vchildren[v].push_back(w);
        bfs.push_back(w);
      }
    }
  }
  path_lca_.build(vchildren, 0);
}

EdgeRef BottleneckTree::bottleneck_edge(int u, int v) const {
  if (u == v) throw std::invalid_argument("bottleneck_edge: identical vertices");
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("bottleneck_edge: vertex out of range");
  int node = merge_lca_.lca(u, v);
  int idx = merge_edge_[node];
  const TreeEdge& e = edges_[idx];
  return {idx, e.u, e.v, e.w};
}

bool BottleneckTree::is_ancestor(int p, int q) const {
  return path_lca_.lca(p, q) == p;
}

bool BottleneckTree::edge_on_path(int edge_index, int y, int z) const {
  if (edge_index < 0 || edge_index >= static_cast<int>(edges_.size()))
    throw std::invalid_argument("edge_on_path: unknown edge");
  if (y < 0 || z < 0 || y >= n_ || z >= n_)
    throw std::invalid_argument("edge_on_path: vertex out of range");
  const int a = edges_[edge_index].u;
  const int b = edges_[edge_index].v;
  const int r = path_lca_.lca(y, z);
  if (r == z) {
    return is_ancestor(a, y) && is_ancestor(b, y) && is_ancestor(z, a) &&
           is_ancestor(z, b);
  }
  if (r == y) {
    return is_ancestor(a, z) && is_ancestor(b, z) && is_ancestor(y, a) &&
           is_ancestor(y, b);
  }
  const bool z_side = path_lca_.lca(y, a) == r && path_lca_.lca(y, b) == r &&
                      is_ancestor(a, z) && is_ancestor(b, z);
  const bool y_side = path_lca_.lca(z, a) == r && path_lca_.lca(z, b) == r &&
                      is_ancestor(a, y) && is_ancestor(b, y);
  return z_side || y_side;
}

}  // namespace rst
