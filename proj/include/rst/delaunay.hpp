#pragma once

#include "rst/geometry.hpp"

#include <array>
#include <utility>
#include <vector>

namespace rst {

/// Result of a Delaunay triangulation: undirected edges (u < v, sorted) and
/// the triangle list. Degenerate inputs (all collinear) have no triangles.
struct Triangulation {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::array<int, 3>> triangles;  // counterclockwise
};

/// Delaunay triangulation by divide and conquer with exact predicates.
/// Cocircular ties resolve deterministically (no flip on a zero incircle
/// sign), so any returned triangulation satisfies the non-strict
/// empty-circumcircle property. Throws std::invalid_argument on duplicate
/// points or an empty input.
Triangulation delaunay(const PointList& points);

}  // namespace rst
