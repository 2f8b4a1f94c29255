#pragma once

#include "rst/mst.hpp"

#include <cstdint>
#include <vector>

namespace rst {

namespace detail {

/// Constant-time LCA on a static rooted tree (Euler tour + sparse-table RMQ).
class EulerLca {
 public:
  EulerLca() = default;

  /// children[v] lists the children of node v; the tree may be any size.
  void build(const std::vector<std::vector<int>>& children, int root);

  int lca(int a, int b) const;

 private:
  std::vector<int32_t> first_;
  std::vector<int32_t> euler_node_;
  std::vector<int32_t> euler_depth_;
  std::vector<int32_t> table_;  // levels * m argmin indices, flattened
  int m_ = 0;
  int levels_ = 0;

  int32_t arg_min(int32_t a, int32_t b) const {
    return euler_depth_[a] <= euler_depth_[b] ? a : b;
  }
};

}  // namespace detail

/// Identity of a tree edge (index into the source tree's edge list).
struct EdgeRef {
  int index;
  int u;
  int v;
  double w;
};

/// Longest-edge auxiliary structure over a spanning tree: the binary
/// Kruskal merge tree (leaf pair LCA = maximum-weight edge on the tree path)
/// plus a rooted copy of the tree for path-membership queries. Queries run
/// in O(1) after an O(n log n) build. Immutable once built; safe for
/// concurrent reads.
class BottleneckTree {
 public:
  explicit BottleneckTree(const Tree& tree);

  int n_vertices() const { return n_; }
  const std::vector<TreeEdge>& edges() const { return edges_; }

  /// The maximum-weight edge on the tree path u -> v (identity and weight).
  /// Ties among equal weights resolve by the (weight, u, v) order used in
  /// the build. Throws std::invalid_argument if u == v or out of range.
  EdgeRef bottleneck_edge(int u, int v) const;

  /// True iff tree edge `edge_index` lies on the path y -> z, decided by
  /// LCA conditions on the rooted tree. Throws std::invalid_argument for an
  /// unknown edge.
  bool edge_on_path(int edge_index, int y, int z) const;

 private:
  int n_ = 0;
  std::vector<TreeEdge> edges_;
  std::vector<int> merge_edge_;  // internal merge node -> edge index
  detail::EulerLca merge_lca_;
  detail::EulerLca path_lca_;

  bool is_ancestor(int p, int q) const;  // p ancestor of (or equal to) q
};

}  // namespace rst
