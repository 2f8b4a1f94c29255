#include "rst/delaunay.hpp"

#include <algorithm>
#include <numeric>

namespace rst {
namespace {

// Quad-edge subdivision (Guibas-Stolfi). A quad q owns four directed edge
// slots with ids 4q..4q+3; slot^2 is the symmetric edge, slot+1 (mod 4 within
// the quad) is the dual rotated a quarter turn. Only onext pointers and
// origin vertices are stored.
class QuadEdge {
 public:
  explicit QuadEdge(const PointList& pts) : pts_(&pts) {
    next_.reserve(pts.size() * 12);
    org_.reserve(pts.size() * 12);
  }

  static int rot(int e) { return (e & ~3) | ((e + 1) & 3); }
  static int rot_inv(int e) { return (e & ~3) | ((e + 3) & 3); }
  static int sym(int e) { return e ^ 2; }

  int onext(int e) const { return next_[e]; }
  int oprev(int e) const { return rot(next_[rot(e)]); }
  int lnext(int e) const { return rot(next_[rot_inv(e)]); }
  int rprev(int e) const { return next_[sym(e)]; }

  int org(int e) const { return org_[e]; }
  int dest(int e) const { return org_[sym(e)]; }
  const Point& org_pt(int e) const { return (*pts_)[org_[e]]; }
  const Point& dest_pt(int e) const { return (*pts_)[org_[sym(e)]]; }

  int make_edge(int a, int b) {
    int base;
    if (!free_.empty()) {
      base = free_.back();
      free_.pop_back();
    } else {
      base = static_cast<int>(next_.size());
      next_.resize(base + 4);
      org_.resize(base + 4, -1);
      alive_.resize(base / 4 + 1, false);
    }
    next_[base] = base;
    next_[base + 1] = base + 3;
    next_[base + 2] = base + 2;
    next_[base + 3] = base + 1;
    org_[base] = a;
    org_[base + 2] = b;
    org_[base + 1] = org_[base + 3] = -1;
    alive_[base / 4] = true;
    return base;
  }

  void splice(int a, int b) {
    int alpha = rot(next_[a]);
    int beta = rot(next_[b]);
    std::swap(next_[a], next_[b]);
    std::swap(next_[alpha], next_[beta]);
  }

  int connect(int a, int b) {
    int e = make_edge(dest(a), org(b));
    splice(e, lnext(a));
    splice(sym(e), b);
    return e;
  }

  void delete_edge(int e) {
    splice(e, oprev(e));
    splice(sym(e), oprev(sym(e)));
    alive_[e / 4] = false;
    free_.push_back(e & ~3);
  }

  template <typename F>
  void for_each_quad(F&& f) const {
    for (int q = 0; q < static_cast<int>(alive_.size()); ++q)
      if (alive_[q]) f(4 * q);
  }

 private:
  const PointList* pts_;
  std::vector<int> next_;
  std::vector<int> org_;
  std::vector<bool> alive_;
  std::vector<int> free_;
};

struct Builder {
  QuadEdge qe;
  const PointList& pts;
  const std::vector<int>& order;  // indices sorted lexicographically

  Builder(const PointList& p, const std::vector<int>& o) : qe(p), pts(p), order(o) {}

  bool ccw(int a, int b, int c) const { return orient2d(pts[a], pts[b], pts[c]) > 0; }
  bool right_of(int p, int e) const { return ccw(p, qe.dest(e), qe.org(e)); }
  bool left_of(int p, int e) const { return ccw(p, qe.org(e), qe.dest(e)); }
  bool in_circle(int a, int b, int c, int d) const {
    return incircle(pts[a], pts[b], pts[c], pts[d]) > 0;
  }

  // Triangulates order[lo..hi) (>= 2 points); returns the ccw hull edge out
  // of the leftmost vertex and the cw hull edge out of the rightmost.
  std::pair<int, int> build(int lo, int hi) {
    const int n = hi - lo;
    if (n == 2) {
      int a = qe.make_edge(order[lo], order[lo + 1]);
      return {a, QuadEdge::sym(a)};
    }
    if (n == 3) {
      int p1 = order[lo], p2 = order[lo + 1], p3 = order[lo + 2];
      int a = qe.make_edge(p1, p2);
      int b = qe.make_edge(p2, p3);
      qe.splice(QuadEdge::sym(a), b);
      if (ccw(p1, p2, p3)) {
        qe.connect(b, a);
        return {a, QuadEdge::sym(b)};
      }
      if (ccw(p1, p3, p2)) {
        int c = qe.connect(b, a);
        return {QuadEdge::sym(c), c};
      }
      return {a, QuadEdge::sym(b)};  // collinear
    }

    int mid = lo + n / 2;
    auto [ldo, ldi] = build(lo, mid);
    auto [rdi, rdo] = build(mid, hi);

    // Find the lower common tangent of the two hulls.
    while (true) {
      if (left_of(qe.org(rdi), ldi)) {
        ldi = qe.lnext(ldi);
      } else if (right_of(qe.org(ldi), rdi)) {
        rdi = qe.rprev(rdi);
      } else {
        break;
      }
    }
    int basel = qe.connect(QuadEdge::sym(rdi), ldi);
    if (qe.org(ldi) == qe.org(ldo)) ldo = QuadEdge::sym(basel);
    if (qe.org(rdi) == qe.org(rdo)) rdo = basel;

    while (true) {
      int lcand = qe.onext(QuadEdge::sym(basel));
      if (right_of(qe.dest(lcand), basel)) {
        while (in_circle(qe.dest(basel), qe.org(basel), qe.dest(lcand),
                         qe.dest(qe.onext(lcand)))) {
          int t = qe.onext(lcand);
          qe.delete_edge(lcand);
          lcand = t;
        }
      }
      int rcand = qe.oprev(basel);
      if (right_of(qe.dest(rcand), basel)) {
        while (in_circle(qe.dest(basel), qe.org(basel), qe.dest(rcand),
                         qe.dest(qe.oprev(rcand)))) {
          int t = qe.oprev(rcand);
          qe.delete_edge(rcand);
          rcand = t;
        }
      }
      bool lvalid = right_of(qe.dest(lcand), basel);
      bool rvalid = right_of(qe.dest(rcand), basel);
      if (!lvalid && !rvalid) break;
      if (!lvalid || (rvalid && in_circle(qe.dest(lcand), qe.org(lcand), qe.org(rcand),
                                          qe.dest(rcand)))) {
        basel = qe.connect(rcand, QuadEdge::sym(basel));
      } else {
        basel = qe.connect(QuadEdge::sym(basel), QuadEdge::sym(lcand));
      }
    }
    return {ldo, rdo};
  }
};

}  // namespace

Triangulation delaunay(const PointList& points) {
  const int n = static_cast<int>(points.size());
  if (n < 1) throw std::invalid_argument("delaunay: empty point set");
  for (const Point& p : points)
    if (!is_finite(p)) throw std::invalid_argument("delaunay: non-finite coordinate");

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (points[i].x() != points[j].x()) return points[i].x() < points[j].x();
    return points[i].y() < points[j].y();
  });
  for (int i = 0; i + 1 < n; ++i) {
    if (points[order[i]] == points[order[i + 1]])
      throw std::invalid_argument("delaunay: duplicate points");
  }

  Triangulation out;
  if (n == 1) return out;

  Builder b(points, order);
  b.build(0, n);

  b.qe.for_each_quad([&](int e) {
    int u = b.qe.org(e), v = b.qe.dest(e);
    out.edges.emplace_back(std::min(u, v), std::max(u, v));
  });
  std::sort(out.edges.begin(), out.edges.end());

  // Left-face walk from every directed edge; interior faces are ccw triangles.
  b.qe.for_each_quad([&](int e) {
    for (int d : {e, QuadEdge::sym(e)}) {
      int a = d, bb = b.qe.lnext(a), c = b.qe.lnext(bb);
      if (b.qe.lnext(c) != a) continue;
      int va = b.qe.org(a), vb = b.qe.org(bb), vc = b.qe.org(c);
      if (va < vb && va < vc && b.ccw(va, vb, vc))
        out.triangles.push_back({va, vb, vc});
    }
  });
  std::sort(out.triangles.begin(), out.triangles.end());
  return out;
}

}  // namespace rst
