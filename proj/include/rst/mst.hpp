#pragma once

#include "rst/geometry.hpp"

#include <vector>

namespace rst {

struct TreeEdge {
  int u;  // canonical: u < v
  int v;
  double w;
};

/// A spanning tree. Vertices [0, n_terminals) are the input points;
/// any further vertices are Steiner points.
struct Tree {
  int n_terminals = 0;
  PointList vertices;
  std::vector<TreeEdge> edges;
  double total_weight = 0.0;

  int n_vertices() const { return static_cast<int>(vertices.size()); }
};

/// Euclidean minimum spanning tree: Kruskal over the Delaunay edges with the
/// deterministic tie-break (weight, min endpoint, max endpoint). Edges come
/// out in the Kruskal acceptance order.
Tree emst(const PointList& points);

}  // namespace rst
