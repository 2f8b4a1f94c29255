#include "rst/costs.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rst {

CostSpec CostSpec::power(double p) {
  if (!(p > 0.0) || !std::isfinite(p))
    throw std::invalid_argument("CostSpec: power exponent must be finite and > 0");
  return {Kind::PowerP, p};
}

CostSpec CostSpec::max_edge() { return {Kind::MaxEdge, 0.0}; }

CostSpec CostSpec::parse(const std::string& name) {
  if (name == "max_edge") return max_edge();
  if (name.rfind("power_", 0) == 0) {
    std::istringstream in(name.substr(6));
    double p;
    if (in >> p && in.eof()) return power(p);
  }
  throw std::invalid_argument("CostSpec: unknown cost function '" + name + "'");
}

std::string CostSpec::name() const {
  if (kind == Kind::MaxEdge) return "max_edge";
  std::ostringstream out;
  out << "power_" << p;
  return out.str();
}

double evaluate_cost(const Tree& tree, const CostSpec& spec) {
  if (tree.edges.empty())
    throw std::invalid_argument("evaluate_cost: tree has no edges");
  if (spec.kind == CostSpec::Kind::MaxEdge) {
    double m = 0.0;
    for (const TreeEdge& e : tree.edges) m = std::max(m, e.w);
    return m;
  }
  double s = 0.0;
  for (const TreeEdge& e : tree.edges) s += std::pow(e.w, spec.p);
  return s;
}

CostReport cost_report(const Tree& tree, const std::vector<CostSpec>& specs) {
  CostReport r;
  r.basis =
      "evaluated on the minimum-total-length tree; for symmetric "
      "l1-optimizable cost functions (power_p, max_edge) that tree is also "
      "cost-optimal, since every minimum spanning tree on the same vertex "
      "set attains the optimum";
  for (const CostSpec& s : specs) r.values.emplace_back(s.name(), evaluate_cost(tree, s));
  return r;
}

}  // namespace rst
