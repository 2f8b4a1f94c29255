#include "rst/geometry.hpp"

#include "rst/predicates.hpp"

namespace rst {

int orient2d(const Point& a, const Point& b, const Point& c) {
  return detail::orient2d_sign(a.x(), a.y(), b.x(), b.y(), c.x(), c.y());
}

int incircle(const Point& a, const Point& b, const Point& c, const Point& d) {
  return detail::incircle_sign(a.x(), a.y(), b.x(), b.y(), c.x(), c.y(), d.x(), d.y());
}

int cone_index(const Point& apex, const Point& p) {
  double dx = p.x() - apex.x();
  double dy = p.y() - apex.y();
  if (dx == 0.0 && dy == 0.0)
    throw std::invalid_argument("cone_index: point coincides with apex");
  double ang = std::atan2(dy, dx);
  if (ang < 0.0) ang += 2.0 * kPi;
  int i = static_cast<int>(ang / (kPi / 3.0));
  // atan2 returns < 2*pi, but the division may round up to exactly 6.
  return i > 5 ? 5 : i;
}

bool cone_contains(const Point& apex, int cone, const Point& p) {
  if (cone < 0 || cone >= kConeCount)
    throw std::invalid_argument("cone_contains: cone index out of range");
  return cone_index(apex, p) == cone;
}

Point cone_boundary_dir(int cone) {
  static const double s = std::sqrt(3.0) / 2.0;
  static const Point dirs[kConeCount] = {
      {1.0, 0.0}, {0.5, s}, {-0.5, s}, {-1.0, 0.0}, {-0.5, -s}, {0.5, -s}};
  if (cone < 0 || cone >= kConeCount)
    throw std::invalid_argument("cone_boundary_dir: cone index out of range");
  return dirs[cone];
}

Gamma::Gamma(Point origin, Point direction, GammaKind kind, double t_lo, double t_hi)
    : origin_(std::move(origin)), dir_(std::move(direction)), kind_(kind),
      t_lo_(t_lo), t_hi_(t_hi) {
  if (!is_finite(origin_)) throw std::invalid_argument("Gamma: origin must be finite");
  if (!is_finite(dir_) || std::abs(dir_.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("Gamma: direction must be a unit vector");
  if (!(t_lo_ < t_hi_)) throw std::invalid_argument("Gamma: requires t_lo < t_hi");
  if (kind_ == GammaKind::Segment && !(std::isfinite(t_lo_) && std::isfinite(t_hi_)))
    throw std::invalid_argument("Gamma: segment requires finite parameter bounds");
}

Gamma Gamma::line(const Point& origin, const Point& direction) {
  double n = direction.norm();
  if (!(n > 0.0)) throw std::invalid_argument("Gamma: zero direction");
  return Gamma(origin, direction / n, GammaKind::Line, -kInf, kInf);
}

Gamma Gamma::ray(const Point& origin, const Point& direction) {
  double n = direction.norm();
  if (!(n > 0.0)) throw std::invalid_argument("Gamma: zero direction");
  return Gamma(origin, direction / n, GammaKind::Ray, 0.0, kInf);
}

Gamma Gamma::segment(const Point& a, const Point& b) {
  double n = (b - a).norm();
  if (!(n > 0.0)) throw std::invalid_argument("Gamma: degenerate segment");
  return Gamma(a, (b - a) / n, GammaKind::Segment, 0.0, n);
}

Point Gamma::at(double t) const {
  if (!contains_param(t)) throw std::out_of_range("Gamma::at: parameter outside range");
  return origin_ + t * dir_;
}

}  // namespace rst
