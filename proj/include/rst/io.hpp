#pragma once

#include "rst/costs.hpp"
#include "rst/steiner1.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace rst::io {

/// A solver instance: terminals, constraint lines/rays/segments, the
/// Steiner budget, and the cost functions to report.
struct Instance {
  PointList points;
  std::vector<Gamma> constraints;
  int k = 1;
  std::vector<CostSpec> costs;
};

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance parse_instance(const nlohmann::json& j);
Instance load_instance(const std::string& path);  // IoError / ParseError

nlohmann::json solution_json(const Instance& instance, const Solution& solution,
                             const CostReport& report);

/// Figure with the terminals, each constraint with interval tick marks, the
/// tree edges, and the Steiner star edges.
void write_svg(const std::string& path, const Instance& instance, const Solution& solution);

}  // namespace rst::io
