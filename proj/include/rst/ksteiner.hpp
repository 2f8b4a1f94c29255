#pragma once

#include "rst/steiner1.hpp"

#include <array>
#include <span>

namespace rst {

/// One free Steiner node: the line and closed parameter interval it is
/// bound to, plus its terminal leaves.
struct SteinerNodeSpec {
  const Gamma* gamma = nullptr;
  double t_lo = -kInf;
  double t_hi = kInf;
  std::vector<int> leaves;
};

/// An internal topology over one or two Steiner nodes: per-node leaf sets
/// and an optional Steiner-Steiner edge. Viability: each node's degree
/// (leaves plus the optional edge) lies within [3, max_degree], and the
/// structure is acyclic (at most one shared terminal, none with the edge).
struct ViableForest {
  int k = 1;
  std::array<SteinerNodeSpec, 2> node;
  bool ss_edge = false;
};

struct EnumOptions {
  int max_degree = 4;  // 4 under the Euclidean pruning; 6 for the raw bound
};

struct BoundInterval {
  const Gamma* gamma;
  const LabelledInterval* interval;
  double t_lo;  // interval bounds, possibly clipped to a search window
  double t_hi;
};

/// All viable forests over the supergraph of the given interval tuple
/// (one or two intervals; two may repeat the same interval).
std::vector<ViableForest> enumerate_topologies(std::span<const BoundInterval> intervals,
                                               const EnumOptions& options = {});

struct FixedTopologySolution {
  std::array<double, 2> t{0.0, 0.0};
  double length = 0.0;  // embedded forest length (stars + optional edge)
};

/// Positions the forest's Steiner nodes on their lines to minimize the
/// embedded forest length (jointly convex). One node reduces to
/// minimize_on_interval; two coupled nodes use cyclic coordinate descent
/// with a local grid polish.
FixedTopologySolution fixed_topology_solve(const ViableForest& forest,
                                           const PointList& points);

struct FFixedResult {
  double weight = 0.0;           // weight of the minimum F-fixed spanning tree
  std::vector<EdgeRef> removed;  // MST edges it drops
};

/// Weight of the shortest spanning tree on P plus the embedded Steiner
/// nodes whose Steiner adjacencies equal the forest's. Independent stars
/// are composed from bottleneck queries; interacting stars (shared or
/// crossing removal paths, Steiner-Steiner edge, shared terminal) fall
/// back to a forced-edge Kruskal over the MST edges.
FFixedResult min_F_fixed_tree(const Tree& mst, const BottleneckTree& aux,
                              const ViableForest& forest,
                              std::span<const Point> steiner_positions);

/// Restricted k-Steiner solver, k in {1, 2}. k = 1 is exactly
/// solve_multi_lines; k = 2 additionally scans interval pairs across all
/// lines with viable-forest enumeration.
Solution solve_k(const PointList& points, const std::vector<Gamma>& lines, int k,
                 const SolveOptions& options = {});

}  // namespace rst
