#pragma once

// Exact sign evaluation of the orientation and incircle determinants on
// raw coordinates. Two-stage scheme: a floating-point filter with a static
// relative error bound decides the common case; near-degenerate inputs fall
// back to exact expansion arithmetic (error-free transformations).
//
// Requires round-to-nearest IEEE doubles; compile without -ffast-math and
// with -ffp-contract=off.

namespace rst::detail {

int orient2d_sign(double ax, double ay, double bx, double by, double cx, double cy);

int incircle_sign(double ax, double ay, double bx, double by, double cx, double cy,
                  double dx, double dy);

}  // namespace rst::detail
