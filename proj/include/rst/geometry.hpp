#pragma once

#include <Eigen/Core>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace rst {

using Point = Eigen::Vector2d;
using PointList = std::vector<Point>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// z-component of the 2-D cross product a x b.
inline double cross2(const Point& a, const Point& b) {
  return a.x() * b.y() - a.y() * b.x();
}

inline bool is_finite(const Point& p) {
  return std::isfinite(p.x()) && std::isfinite(p.y());
}

/// Euclidean distance.
inline double distance(const Point& p, const Point& q) { return (p - q).norm(); }

/// Sign of the signed area of triangle (a, b, c): +1 counterclockwise,
/// -1 clockwise, 0 collinear. Exact (filtered adaptive evaluation).
int orient2d(const Point& a, const Point& b, const Point& c);

/// Sign of the incircle determinant: +1 if d lies strictly inside the
/// circle through (a, b, c) when they are in counterclockwise order,
/// -1 strictly outside, 0 cocircular. Exact (filtered adaptive evaluation).
int incircle(const Point& a, const Point& b, const Point& c, const Point& d);

// --- Cones -------------------------------------------------------------
//
// The plane around any apex is partitioned into six half-open angular
// sectors of width pi/3: sector i covers [i*pi/3, (i+1)*pi/3). A point on
// a sector boundary belongs to the lower-indexed sector.

inline constexpr int kConeCount = 6;

/// Index in 0..5 of the sector containing the direction p - apex.
/// Throws std::invalid_argument if p == apex (membership undefined there).
int cone_index(const Point& apex, const Point& p);

/// True iff p lies in sector `cone` apexed at `apex`.
bool cone_contains(const Point& apex, int cone, const Point& p);

/// Unit vector of the lower boundary ray of sector `cone` (angle cone*pi/3).
Point cone_boundary_dir(int cone);

// --- Gamma: the Steiner constraint set ----------------------------------

enum class GammaKind { Line, Ray, Segment };

/// A parameterized line, ray, or segment: point(t) = origin + t * direction,
/// with t restricted to [t_lo, t_hi] (infinite bounds for lines/rays).
/// The direction is kept at unit length so t is an arc-length parameter.
class Gamma {
 public:
  Gamma(Point origin, Point direction, GammaKind kind, double t_lo, double t_hi);

  static Gamma line(const Point& origin, const Point& direction);
  static Gamma ray(const Point& origin, const Point& direction);
  static Gamma segment(const Point& a, const Point& b);

  const Point& origin() const { return origin_; }
  const Point& direction() const { return dir_; }
  GammaKind kind() const { return kind_; }
  double t_lo() const { return t_lo_; }
  double t_hi() const { return t_hi_; }

  bool contains_param(double t) const { return t >= t_lo_ && t <= t_hi_; }

  /// point(t); throws std::out_of_range if t is outside [t_lo, t_hi].
  Point at(double t) const;

  /// Parameter of the orthogonal projection of p onto the supporting line.
  double project(const Point& p) const { return dir_.dot(p - origin_); }

  /// The same line with an unbounded parameter range.
  Gamma support_line() const { return Gamma(origin_, dir_, GammaKind::Line, -kInf, kInf); }

 private:
  Point origin_;
  Point dir_;
  GammaKind kind_;
  double t_lo_;
  double t_hi_;
};

}  // namespace rst
