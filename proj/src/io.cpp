#include "rst/io.hpp"

#include "rst/intervals.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace rst::io {

using nlohmann::json;

namespace {

Point parse_point(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ParseError(std::string(what) + ": expected [x, y]");
  Point p{j[0].get<double>(), j[1].get<double>()};
  if (!is_finite(p)) throw ParseError(std::string(what) + ": coordinates must be finite");
  return p;
}

Gamma parse_constraint(const json& j) {
  if (!j.is_object()) throw ParseError("constraints: expected an object");
  std::string kind = j.value("kind", "line");
  Point origin = parse_point(j.at("origin"), "constraint origin");
  Point dir = parse_point(j.at("direction"), "constraint direction");
  double norm = dir.norm();
  if (!(norm > 0.0)) throw ParseError("constraint direction must be nonzero");
  dir /= norm;

  double lo, hi;
  GammaKind gk;
  if (kind == "line") {
    gk = GammaKind::Line;
    lo = -kInf;
    hi = kInf;
  } else if (kind == "ray") {
    gk = GammaKind::Ray;
    lo = 0.0;
    hi = kInf;
  } else if (kind == "segment") {
    gk = GammaKind::Segment;
    if (!j.contains("range")) throw ParseError("segment constraint requires a range");
    lo = 0.0;
    hi = 1.0;
  } else {
    throw ParseError("constraint kind must be line, ray, or segment");
  }
  if (j.contains("range")) {
    const json& r = j.at("range");
    if (!r.is_array() || r.size() != 2) throw ParseError("constraint range: expected [lo, hi]");
    lo = r[0].is_null() ? lo : r[0].get<double>();
    hi = r[1].is_null() ? hi : r[1].get<double>();
  }
  try {
    return Gamma(origin, dir, gk, lo, hi);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid constraint: ") + e.what());
  }
}

}  // namespace

Instance parse_instance(const json& j) {
  if (!j.is_object()) throw ParseError("instance: expected a JSON object");
  Instance inst;

  if (!j.contains("points") || !j.at("points").is_array())
    throw ParseError("instance: missing points array");
  for (const json& jp : j.at("points")) inst.points.push_back(parse_point(jp, "point"));
  if (inst.points.size() < 2) throw ParseError("instance: need at least 2 points");
  {
    PointList sorted = inst.points;
    std::sort(sorted.begin(), sorted.end(), [](const Point& a, const Point& b) {
      return a.x() != b.x() ? a.x() < b.x() : a.y() < b.y();
    });
    for (size_t i = 0; i + 1 < sorted.size(); ++i)
      if (sorted[i] == sorted[i + 1]) throw ParseError("instance: duplicate points");
  }

  if (!j.contains("constraints") || !j.at("constraints").is_array() ||
      j.at("constraints").empty())
    throw ParseError("instance: missing constraints array");
  for (const json& jc : j.at("constraints")) inst.constraints.push_back(parse_constraint(jc));

  inst.k = j.value("k", 1);
  if (inst.k != 1 && inst.k != 2) throw ParseError("instance: k must be 1 or 2");

  if (j.contains("costs")) {
    for (const json& jc : j.at("costs")) {
      if (!jc.is_string()) throw ParseError("instance: cost specs are strings");
      try {
        inst.costs.push_back(CostSpec::parse(jc.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
  }
  if (inst.costs.empty()) inst.costs.push_back(CostSpec::power(1.0));
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open input file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_instance(j);
}

json solution_json(const Instance& instance, const Solution& solution,
                   const CostReport& report) {
  json out;
  out["mst_weight"] = solution.baseline_mst_weight;
  out["total_weight"] = solution.total_weight;
  out["savings"] = solution.savings;

  json sp = json::array();
  for (const Point& p : solution.steiner_points) sp.push_back({p.x(), p.y()});
  out["steiner_points"] = sp;

  json edges = json::array();
  for (const TreeEdge& e : solution.tree.edges) edges.push_back({e.u, e.v, e.w});
  out["edges"] = edges;

  json removed = json::array();
  for (const TreeEdge& e : solution.removed_mst_edges) removed.push_back({e.u, e.v, e.w});
  out["removed_mst_edges"] = removed;

  json costs;
  for (const auto& [name, value] : report.values) costs[name] = value;
  costs["basis"] = report.basis;
  out["cost_report"] = costs;

  out["stats"] = {{"n", solution.stats.n},
                  {"interval_count", solution.stats.interval_count},
                  {"candidates_evaluated", solution.stats.candidates_evaluated},
                  {"wall_time_ms", solution.stats.wall_ms}};
  (void)instance;
  return out;
}

namespace {

struct ViewBox {
  double x0, y0, x1, y1;
  double scale, height;

  double sx(double x) const { return (x - x0) * scale + 20.0; }
  double sy(double y) const { return height - ((y - y0) * scale + 20.0); }
};

void clip_line_to_box(const Gamma& g, double lo, double hi, const ViewBox& vb,
                      double& a, double& b) {
  // Intersect the parameter range with the world-space box.
  a = std::max(lo, -1e9);
  b = std::min(hi, 1e9);
  for (int axis = 0; axis < 2; ++axis) {
    double o = axis == 0 ? g.origin().x() : g.origin().y();
    double d = axis == 0 ? g.direction().x() : g.direction().y();
    double mn = axis == 0 ? vb.x0 : vb.y0;
    double mx = axis == 0 ? vb.x1 : vb.y1;
    if (std::abs(d) < 1e-15) continue;
    double t1 = (mn - o) / d, t2 = (mx - o) / d;
    if (t1 > t2) std::swap(t1, t2);
    a = std::max(a, t1);
    b = std::min(b, t2);
  }
  if (a > b) a = b = lo;
}

}  // namespace

void write_svg(const std::string& path, const Instance& instance, const Solution& solution) {
  const PointList& pts = solution.tree.vertices;
  ViewBox vb{kInf, kInf, -kInf, -kInf, 1.0, 0.0};
  for (const Point& p : pts) {
    vb.x0 = std::min(vb.x0, p.x());
    vb.y0 = std::min(vb.y0, p.y());
    vb.x1 = std::max(vb.x1, p.x());
    vb.y1 = std::max(vb.y1, p.y());
  }
  double span = std::max({vb.x1 - vb.x0, vb.y1 - vb.y0, 1e-9});
  vb.x0 -= 0.05 * span;
  vb.y0 -= 0.05 * span;
  vb.x1 += 0.05 * span;
  vb.y1 += 0.05 * span;
  vb.scale = 760.0 / (vb.x1 - vb.x0);
  vb.height = (vb.y1 - vb.y0) * vb.scale + 40.0;

  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\""
      << vb.height << "\" viewBox=\"0 0 800 " << vb.height << "\">\n";

  const int n_terminals = solution.tree.n_terminals;
  for (const Gamma& g : instance.constraints) {
    double a, b;
    clip_line_to_box(g, g.t_lo(), g.t_hi(), vb, a, b);
    Point pa = g.origin() + a * g.direction();
    Point pb = g.origin() + b * g.direction();
    svg << "  <line class=\"gamma\" x1=\"" << vb.sx(pa.x()) << "\" y1=\"" << vb.sy(pa.y())
        << "\" x2=\"" << vb.sx(pb.x()) << "\" y2=\"" << vb.sy(pb.y())
        << "\" stroke=\"#888\" stroke-width=\"1\"/>\n";
    // Interval tick marks.
    PointList terminals(pts.begin(), pts.begin() + n_terminals);
    auto ivs = labelled_intervals(terminals, g);
    Point nrm{-g.direction().y(), g.direction().x()};
    for (size_t i = 0; i + 1 < ivs.size(); ++i) {
      double t = ivs[i].t_hi;
      if (t < a || t > b) continue;
      Point c = g.origin() + t * g.direction();
      Point u = c + nrm * (3.0 / vb.scale);
      Point v = c - nrm * (3.0 / vb.scale);
      svg << "  <line class=\"tick\" x1=\"" << vb.sx(u.x()) << "\" y1=\"" << vb.sy(u.y())
          << "\" x2=\"" << vb.sx(v.x()) << "\" y2=\"" << vb.sy(v.y())
          << "\" stroke=\"#bbb\" stroke-width=\"0.7\"/>\n";
    }
  }

  for (const TreeEdge& e : solution.tree.edges) {
    bool steiner = e.u >= n_terminals || e.v >= n_terminals;
    svg << "  <line class=\"" << (steiner ? "edge-steiner" : "edge-mst") << "\" x1=\""
        << vb.sx(pts[e.u].x()) << "\" y1=\"" << vb.sy(pts[e.u].y()) << "\" x2=\""
        << vb.sx(pts[e.v].x()) << "\" y2=\"" << vb.sy(pts[e.v].y()) << "\" stroke=\""
        << (steiner ? "#d62728" : "#1f77b4") << "\" stroke-width=\"1.5\"/>\n";
  }

  for (int i = 0; i < n_terminals; ++i)
    svg << "  <circle class=\"terminal\" cx=\"" << vb.sx(pts[i].x()) << "\" cy=\""
        << vb.sy(pts[i].y()) << "\" r=\"3\" fill=\"#1f77b4\"/>\n";
  for (int i = n_terminals; i < solution.tree.n_vertices(); ++i)
    svg << "  <circle class=\"steiner\" cx=\"" << vb.sx(pts[i].x()) << "\" cy=\""
        << vb.sy(pts[i].y()) << "\" r=\"4\" fill=\"#d62728\"/>\n";

  svg << "</svg>\n";

  std::ofstream out(path);
  if (!out) throw IoError("cannot open output file: " + path);
  out << svg.str();
  if (!out) throw IoError("failed writing: " + path);
}

}  // namespace rst::io
