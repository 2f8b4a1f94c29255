#pragma once

#include "rst/mst.hpp"

#include <string>
#include <vector>

namespace rst {

/// Symmetric tree-cost function: sum of edge weights raised to power p
/// (p > 0), or the maximum edge weight.
struct CostSpec {
  enum class Kind { PowerP, MaxEdge };
  Kind kind = Kind::PowerP;
  double p = 1.0;

  static CostSpec power(double p);
  static CostSpec max_edge();
  /// Parses "power_<p>" or "max_edge".
  static CostSpec parse(const std::string& name);
  std::string name() const;
};

/// Evaluates the cost function on a tree's edge-length vector.
/// Throws std::invalid_argument on an empty edge set.
double evaluate_cost(const Tree& tree, const CostSpec& spec);

struct CostReport {
  std::vector<std::pair<std::string, double>> values;
  std::string basis;  // why evaluating on the minimum-length tree suffices
};

CostReport cost_report(const Tree& tree, const std::vector<CostSpec>& specs);

}  // namespace rst
