#include "rst/predicates.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace rst::detail {
namespace {

// Round-off unit u = 2^-53 and the static filter bounds derived from it.
const double kEps = std::numeric_limits<double>::epsilon() / 2.0;
const double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;
const double kIccErrBound = (10.0 + 96.0 * kEps) * kEps;

inline int sgn(double x) { return (x > 0.0) - (x < 0.0); }

// Error-free transformations. x carries the rounded result, y the exact
// round-off so that a op b == x + y exactly.
inline void two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  double bvirt = x - a;
  double avirt = x - bvirt;
  double bround = b - bvirt;
  double around = a - avirt;
  y = around + bround;
}

// Requires |a| >= |b|.
inline void fast_two_sum(double a, double b, double& x, double& y) {
  x = a + b;
  double bvirt = x - a;
  y = b - bvirt;
}

inline void two_diff(double a, double b, double& x, double& y) {
  x = a - b;
  double bvirt = a - x;
  double avirt = x + bvirt;
  double bround = bvirt - b;
  double around = a - avirt;
  y = around + bround;
}

inline void two_prod(double a, double b, double& x, double& y) {
  x = a * b;
  y = std::fma(a, b, -x);
}

// An expansion: components of increasing magnitude, nonoverlapping,
// zero-eliminated (a single 0.0 represents zero).
using Exp = std::vector<double>;

Exp make_exp(double tail, double head) {
  Exp e;
  if (tail != 0.0) e.push_back(tail);
  if (head != 0.0) e.push_back(head);
  if (e.empty()) e.push_back(0.0);
  return e;
}

// h = e + f (exact merge of two expansions).
Exp exp_sum(const Exp& e, const Exp& f) {
  const int elen = static_cast<int>(e.size());
  const int flen = static_cast<int>(f.size());
  Exp h;
  h.reserve(e.size() + f.size());
  double Q, Qnew, hh;
  double enow = e[0];
  double fnow = f[0];
  int eindex = 0, findex = 0;
  if ((fnow > enow) == (fnow > -enow)) {
    Q = enow;
    if (++eindex < elen) enow = e[eindex];
  } else {
    Q = fnow;
    if (++findex < flen) fnow = f[findex];
  }
  if ((eindex < elen) && (findex < flen)) {
    if ((fnow > enow) == (fnow > -enow)) {
      fast_two_sum(enow, Q, Qnew, hh);
      if (++eindex < elen) enow = e[eindex];
    } else {
      fast_two_sum(fnow, Q, Qnew, hh);
      if (++findex < flen) fnow = f[findex];
    }
    Q = Qnew;
    if (hh != 0.0) h.push_back(hh);
    while ((eindex < elen) && (findex < flen)) {
      if ((fnow > enow) == (fnow > -enow)) {
        two_sum(Q, enow, Qnew, hh);
        if (++eindex < elen) enow = e[eindex];
      } else {
        two_sum(Q, fnow, Qnew, hh);
        if (++findex < flen) fnow = f[findex];
      }
      Q = Qnew;
      if (hh != 0.0) h.push_back(hh);
    }
  }
  while (eindex < elen) {
    two_sum(Q, enow, Qnew, hh);
    if (++eindex < elen) enow = e[eindex];
    Q = Qnew;
    if (hh != 0.0) h.push_back(hh);
  }
  while (findex < flen) {
    two_sum(Q, fnow, Qnew, hh);
    if (++findex < flen) fnow = f[findex];
    Q = Qnew;
    if (hh != 0.0) h.push_back(hh);
  }
  if (Q != 0.0 || h.empty()) h.push_back(Q);
  return h;
}

// h = e * b for a scalar b.
Exp exp_scale(const Exp& e, double b) {
  const int elen = static_cast<int>(e.size());
  Exp h;
  h.reserve(2 * e.size());
  double Q, hh;
  two_prod(e[0], b, Q, hh);
  if (hh != 0.0) h.push_back(hh);
  for (int i = 1; i < elen; ++i) {
    double p1, p0, sum;
    two_prod(e[i], b, p1, p0);
    two_sum(Q, p0, sum, hh);
    if (hh != 0.0) h.push_back(hh);
    fast_two_sum(p1, sum, Q, hh);
    if (hh != 0.0) h.push_back(hh);
  }
  if (Q != 0.0 || h.empty()) h.push_back(Q);
  return h;
}

Exp exp_neg(Exp e) {
  for (double& v : e) v = -v;
  return e;
}

Exp exp_mul(const Exp& a, const Exp& b) {
  Exp acc(1, 0.0);
  for (double bi : b) acc = exp_sum(acc, exp_scale(a, bi));
  return acc;
}

Exp exp_sub(const Exp& a, const Exp& b) { return exp_sum(a, exp_neg(b)); }

int exp_sign(const Exp& e) { return sgn(e.back()); }

int orient2d_exact(double ax, double ay, double bx, double by, double cx, double cy) {
  double h, t;
  two_diff(ax, cx, h, t);
  Exp acx = make_exp(t, h);
  two_diff(by, cy, h, t);
  Exp bcy = make_exp(t, h);
  two_diff(ay, cy, h, t);
  Exp acy = make_exp(t, h);
  two_diff(bx, cx, h, t);
  Exp bcx = make_exp(t, h);
  return exp_sign(exp_sub(exp_mul(acx, bcy), exp_mul(acy, bcx)));
}

int incircle_exact(double ax, double ay, double bx, double by, double cx, double cy,
                   double dx, double dy) {
  double h, t;
  two_diff(ax, dx, h, t);
  Exp adx = make_exp(t, h);
  two_diff(ay, dy, h, t);
  Exp ady = make_exp(t, h);
  two_diff(bx, dx, h, t);
  Exp bdx = make_exp(t, h);
  two_diff(by, dy, h, t);
  Exp bdy = make_exp(t, h);
  two_diff(cx, dx, h, t);
  Exp cdx = make_exp(t, h);
  two_diff(cy, dy, h, t);
  Exp cdy = make_exp(t, h);

  Exp bc = exp_sub(exp_mul(bdx, cdy), exp_mul(cdx, bdy));
  Exp ca = exp_sub(exp_mul(cdx, ady), exp_mul(adx, cdy));
  Exp ab = exp_sub(exp_mul(adx, bdy), exp_mul(bdx, ady));
  Exp alift = exp_sum(exp_mul(adx, adx), exp_mul(ady, ady));
  Exp blift = exp_sum(exp_mul(bdx, bdx), exp_mul(bdy, bdy));
  Exp clift = exp_sum(exp_mul(cdx, cdx), exp_mul(cdy, cdy));

  Exp det = exp_sum(exp_sum(exp_mul(alift, bc), exp_mul(blift, ca)), exp_mul(clift, ab));
  return exp_sign(det);
}

}  // namespace

int orient2d_sign(double ax, double ay, double bx, double by, double cx, double cy) {
  double detleft = (ax - cx) * (by - cy);
  double detright = (ay - cy) * (bx - cx);
  double det = detleft - detright;
  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return sgn(det);
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return sgn(det);
    detsum = -detleft - detright;
  } else {
    return sgn(det);
  }
  double errbound = kCcwErrBound * detsum;
  if (det >= errbound || -det >= errbound) return sgn(det);
  return orient2d_exact(ax, ay, bx, by, cx, cy);
}

int incircle_sign(double ax, double ay, double bx, double by, double cx, double cy,
                  double dx, double dy) {
  double adx = ax - dx, ady = ay - dy;
  double bdx = bx - dx, bdy = by - dy;
  double cdx = cx - dx, cdy = cy - dy;

  double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
  double cdxady = cdx * ady, adxcdy = adx * cdy;
  double adxbdy = adx * bdy, bdxady = bdx * ady;
  double alift = adx * adx + ady * ady;
  double blift = bdx * bdx + bdy * bdy;
  double clift = cdx * cdx + cdy * cdy;

  double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
               clift * (adxbdy - bdxady);
  double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                     (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                     (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
  double errbound = kIccErrBound * permanent;
  if (det > errbound || -det > errbound) return sgn(det);
  return incircle_exact(ax, ay, bx, by, cx, cy, dx, dy);
}

}  // namespace rst::detail
