#pragma once

#include "rst/geometry.hpp"

#include <array>
#include <vector>

namespace rst {

/// Nearest-terminal label of one cone over one interval. The second slot is
/// populated only on degenerate stretches where two terminals stay exactly
/// equidistant along gamma (mirror pairs); then both compete downstream.
struct ConeLabel {
  int a = -1;
  int b = -1;
  bool empty() const { return a < 0; }
  bool operator==(const ConeLabel&) const = default;
};

/// Maximal parameter range of gamma on which all six nearest-in-cone
/// assignments are constant.
struct LabelledInterval {
  double t_lo;
  double t_hi;
  std::array<ConeLabel, kConeCount> labels;

  /// Distinct terminal indices across the six cones, ascending.
  void collect_labels(std::vector<int>& out) const;
};

struct ParamInterval {
  double lo = kInf;
  double hi = -kInf;
  bool empty() const { return !(lo <= hi); }
};

/// Parameter range {t : cone_contains(gamma(t), cone, p)} -- the reflected
/// cone apexed at p intersected with gamma -- clipped to gamma's range.
/// One contiguous interval, possibly empty or unbounded.
ParamInterval cone_visibility_range(const Point& p, int cone, const Gamma& gamma);

/// The decomposition of gamma's parameter range induced by the six oriented
/// nearest-in-cone diagrams, computed as per-cone lower envelopes of the
/// partial distance functions. Consecutive intervals share endpoints and
/// tile [t_lo, t_hi] exactly.
std::vector<LabelledInterval> labelled_intervals(const PointList& points, const Gamma& gamma);

}  // namespace rst
