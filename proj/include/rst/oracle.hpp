#pragma once

#include "rst/geometry.hpp"
#include "rst/mst.hpp"

#include <span>
#include <utility>

namespace rst::oracle {

// Deliberately naive reference implementations, sharing nothing with the
// fast paths beyond the geometric kernel. Used by tests and `verify`.

/// O(n^2) Prim over the complete graph; lowest-index tie-break.
Tree prim_mst(const PointList& points);

struct SampledBest {
  double t;
  double weight;
};

/// Minimum of |prim_mst(P + gamma(t))| over m uniform samples of t across
/// the clamped search window (projection hull of P padded by its bounding
/// box diagonal, intersected with gamma's parameter range).
SampledBest sampled_best_steiner(const PointList& points, const Gamma& gamma, int samples);

/// Index of the nearest point of P strictly visible in the given cone from
/// apex, or -1 when the cone is empty. Points coinciding with the apex do
/// not compete.
int nearest_in_cone(const PointList& points, const Point& apex, int cone);

/// Weight of the spanning tree of P + {s} obtained by forcing the star
/// edges s-a for a in N and completing with Kruskal over the tree edges.
double forced_star_mst(const Tree& tree, const Point& s, std::span<const int> star);

}  // namespace rst::oracle
