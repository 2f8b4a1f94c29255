#pragma once

#include "rst/bottleneck.hpp"
#include "rst/intervals.hpp"
#include "rst/mst.hpp"

#include <optional>
#include <span>
#include <vector>

namespace rst {

/// A prospective Steiner point: parameter on a line, the terminal subset it
/// would connect to, the star length sigma, and the removable MST weight
/// delta. savings = delta - sigma.
struct Candidate {
  double t = 0.0;
  Point point{0.0, 0.0};
  std::vector<int> neighbors;      // 3 or 4 terminal indices
  double sigma = 0.0;
  double delta = 0.0;
  std::vector<EdgeRef> removed;    // |neighbors| - 1 MST edges
  int line = 0;
  int interval = 0;

  double savings() const { return delta - sigma; }
};

struct SolveStats {
  int n = 0;
  long interval_count = 0;
  long candidates_evaluated = 0;
  double wall_ms = 0.0;
};

struct Solution {
  Tree tree;                        // spanning tree of P plus the Steiner set
  PointList steiner_points;
  double baseline_mst_weight = 0.0;
  double total_weight = 0.0;
  double savings = 0.0;
  std::vector<TreeEdge> removed_mst_edges;
  std::vector<Candidate> winners;   // adopted candidates (diagnostics)
  SolveStats stats;
};

struct SolveOptions {
  int threads = 1;
};

/// Candidates are adopted only above this savings threshold.
inline constexpr double kMinGain = 1e-9;

/// Sum of distances from gamma(t) to the given terminals.
double sum_dist(const Gamma& gamma, double t, std::span<const Point> terminals);

struct MinResult {
  double t;
  double sigma;
};

/// Constrained minimizer of sum_dist over [t_lo, t_hi] (convex objective;
/// golden-section bracketing plus Newton polish). Infinite bounds are
/// clamped to the terminals' projection hull padded by their diameter.
MinResult minimize_on_interval(const Gamma& gamma, double t_lo, double t_hi,
                               std::span<const Point> terminals);

struct DeltaResult {
  double delta = 0.0;
  std::vector<EdgeRef> removed;
};

/// Distinct bottleneck edges over all pairs of the given terminals (3 or 4
/// of them); their count is always |terminals| - 1 and their weights sum to
/// the MST length freed by a star on the terminals.
DeltaResult savings_delta(const BottleneckTree& aux, std::span<const int> terminals);

/// Search window on gamma: the projection hull of P padded by the bounding
/// box diagonal. No Steiner point outside it can save anything.
ParamInterval search_window(const PointList& points, const Gamma& gamma);

/// Minimum-weight tree on P using at most one extra point on gamma.
Solution solve_one_line(const PointList& points, const Gamma& gamma,
                        const SolveOptions& options = {});

/// Minimum over the lines of solve_one_line, with the MST and bottleneck
/// structure built once. Ties resolve to the lowest line index.
Solution solve_multi_lines(const PointList& points, const std::vector<Gamma>& lines,
                           const SolveOptions& options = {});

namespace detail {

/// Candidate order: higher savings first, then earlier line, interval, t.
bool candidate_improves(const Candidate& challenger, const Candidate& best);

struct ScanResult {
  std::optional<Candidate> best;
  long interval_count = 0;
  long candidates_evaluated = 0;
};

/// Candidate scan of one line against a prebuilt MST/bottleneck structure.
ScanResult scan_line(const PointList& points, const Gamma& gamma, int line_index,
                     const BottleneckTree& aux, int threads);

}  // namespace detail

}  // namespace rst
