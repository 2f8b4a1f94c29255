#include "rst/geometry.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace rst;

namespace {

int orient_int64(long long ax, long long ay, long long bx, long long by, long long cx,
                 long long cy) {
  long long det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
  return (det > 0) - (det < 0);
}

int incircle_int128(long long ax, long long ay, long long bx, long long by, long long cx,
                    long long cy, long long dx, long long dy) {
  using I = __int128;
  I adx = ax - dx, ady = ay - dy;
  I bdx = bx - dx, bdy = by - dy;
  I cdx = cx - dx, cdy = cy - dy;
  I alift = adx * adx + ady * ady;
  I blift = bdx * bdx + bdy * bdy;
  I clift = cdx * cdx + cdy * cdy;
  I det = alift * (bdx * cdy - cdx * bdy) + blift * (cdx * ady - adx * cdy) +
          clift * (adx * bdy - bdx * ady);
  return (det > 0) - (det < 0);
}

}  // namespace

TEST_CASE("orient2d basic signs") {
  CHECK(orient2d({0, 0}, {1, 0}, {0, 1}) == 1);
  CHECK(orient2d({0, 0}, {1, 0}, {2, 0}) == 0);
  CHECK(orient2d({0, 0}, {0, 1}, {1, 0}) == -1);
}

TEST_CASE("orient2d agrees with integer arithmetic, including degeneracies") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> coord(-1000, 1000);
  const double scale = std::ldexp(1.0, -30);  // exact power-of-two scaling
  for (int it = 0; it < 20000; ++it) {
    long long ax = coord(rng), ay = coord(rng);
    long long bx = coord(rng), by = coord(rng);
    long long cx, cy;
    if (it % 3 == 0) {  // force collinear or near-collinear cases
      long long k = coord(rng) % 7;
      cx = ax + k * (bx - ax);
      cy = ay + k * (by - ay);
      if (it % 6 == 0) cy += coord(rng) % 2;
    } else {
      cx = coord(rng);
      cy = coord(rng);
    }
    int expect = orient_int64(ax, ay, bx, by, cx, cy);
    CHECK(orient2d({ax * 1.0, ay * 1.0}, {bx * 1.0, by * 1.0}, {cx * 1.0, cy * 1.0}) ==
          expect);
    CHECK(orient2d({ax * scale, ay * scale}, {bx * scale, by * scale},
                   {cx * scale, cy * scale}) == expect);
  }
}

TEST_CASE("orient2d resolves one-ulp perturbations off a long collinear run") {
  const Point a{0.5, 0.5};
  const Point b{17.0, 17.0};
  double y = 9.25;
  const Point on{9.25, y};
  CHECK(orient2d(a, b, on) == 0);
  const Point above{9.25, std::nextafter(y, 10.0)};
  const Point below{9.25, std::nextafter(y, 0.0)};
  CHECK(orient2d(a, b, above) == 1);
  CHECK(orient2d(a, b, below) == -1);
}

TEST_CASE("incircle agrees with 128-bit integer arithmetic") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> coord(-300, 300);
  int checked = 0;
  for (int it = 0; it < 20000; ++it) {
    long long ax = coord(rng), ay = coord(rng), bx = coord(rng), by = coord(rng);
    long long cx = coord(rng), cy = coord(rng), dx = coord(rng), dy = coord(rng);
    if (orient_int64(ax, ay, bx, by, cx, cy) <= 0) continue;  // keep abc ccw
    ++checked;
    int expect = incircle_int128(ax, ay, bx, by, cx, cy, dx, dy);
    CHECK(incircle({ax * 1.0, ay * 1.0}, {bx * 1.0, by * 1.0}, {cx * 1.0, cy * 1.0},
                   {dx * 1.0, dy * 1.0}) == expect);
  }
  CHECK(checked > 5000);
}

TEST_CASE("incircle reports exact cocircularity") {
  // Integer points on the circle x^2 + y^2 = 25.
  CHECK(incircle({5, 0}, {0, 5}, {-5, 0}, {3, -4}) == 0);
  CHECK(incircle({5, 0}, {0, 5}, {-5, 0}, {3, 4}) == 0);
  CHECK(incircle({5, 0}, {0, 5}, {-5, 0}, {0, 0}) == 1);
  CHECK(incircle({5, 0}, {0, 5}, {-5, 0}, {6, 0}) == -1);
}

TEST_CASE("distance") {
  CHECK(distance({0, 0}, {3, 4}) == doctest::Approx(5.0));
  CHECK(distance({1, 1}, {1, 1}) == 0.0);
  CHECK(distance({0, 0}, {1, 1}) == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("distance symmetry and triangle inequality") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> uni(-50.0, 50.0);
  for (int it = 0; it < 5000; ++it) {
    Point a{uni(rng), uni(rng)}, b{uni(rng), uni(rng)}, c{uni(rng), uni(rng)};
    CHECK(distance(a, b) == doctest::Approx(distance(b, a)).epsilon(1e-12));
    CHECK(distance(a, c) <= distance(a, b) + distance(b, c) + 1e-12);
  }
}

TEST_CASE("cone membership on known directions") {
  CHECK(cone_contains({0, 0}, 0, {1, 0.1}));
  CHECK_FALSE(cone_contains({0, 0}, 0, {0, 1}));
  CHECK(cone_contains({0, 0}, 1, {0, 1}));
}

TEST_CASE("cone boundary ownership is half-open at the lower angle") {
  CHECK(cone_index({0, 0}, {1, 0}) == 0);    // 0 degrees
  CHECK(cone_index({0, 0}, {1, 1}) == 0);    // 45
  CHECK(cone_index({0, 0}, {0, 1}) == 1);    // 90
  CHECK(cone_index({0, 0}, {-1, 1}) == 2);   // 135
  CHECK(cone_index({0, 0}, {-1, 0}) == 3);   // 180
  CHECK(cone_index({0, 0}, {-1, -1}) == 3);  // 225
  CHECK(cone_index({0, 0}, {0, -1}) == 4);   // 270
  CHECK(cone_index({0, 0}, {1, -1}) == 5);   // 315
}

TEST_CASE("exactly one cone contains any point distinct from the apex") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> uni(-10.0, 10.0);
  for (int it = 0; it < 20000; ++it) {
    Point apex{uni(rng), uni(rng)}, p{uni(rng), uni(rng)};
    if (p == apex) continue;
    int hits = 0;
    for (int c = 0; c < kConeCount; ++c) hits += cone_contains(apex, c, p) ? 1 : 0;
    CHECK(hits == 1);
  }
}

TEST_CASE("cone membership is translation invariant") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> uni(-10.0, 10.0);
  for (int it = 0; it < 5000; ++it) {
    Point apex{uni(rng), uni(rng)}, p{uni(rng), uni(rng)};
    if (p == apex) continue;
    Point v{uni(rng), uni(rng)};
    CHECK(cone_index(apex, p) == cone_index(apex + v, p + v));
  }
}

TEST_CASE("cone membership at the apex is an error") {
  CHECK_THROWS_AS(cone_index({1, 2}, {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(cone_contains({1, 2}, 7, {3, 4}), std::invalid_argument);
}

TEST_CASE("gamma parameterization") {
  Gamma x_axis = Gamma::line({0, 0}, {1, 0});
  Point p = x_axis.at(2.0);
  CHECK(p.x() == doctest::Approx(2.0));
  CHECK(p.y() == doctest::Approx(0.0));

  Gamma vertical = Gamma::line({0.5, 0.0}, {0.0, 1.0});
  Point q = vertical.at(std::sqrt(3.0) / 6.0);
  CHECK(q.x() == doctest::Approx(0.5));
  CHECK(q.y() == doctest::Approx(0.28867513459481287));

  Gamma seg = Gamma::segment({0, 0}, {1, 0});
  CHECK_THROWS_AS(seg.at(1.5), std::out_of_range);
  CHECK_THROWS_AS(Gamma::line({0, 0}, {0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Gamma({0, 0}, {2, 0}, GammaKind::Line, -kInf, kInf),
                  std::invalid_argument);
}

TEST_CASE("gamma rays and segments expose their parameter ranges") {
  Gamma ray = Gamma::ray({1, 1}, {0, 2});
  CHECK(ray.t_lo() == 0.0);
  CHECK(ray.t_hi() == kInf);
  CHECK(ray.direction().y() == doctest::Approx(1.0));

  Gamma seg = Gamma::segment({0, 0}, {3, 4});
  CHECK(seg.t_hi() == doctest::Approx(5.0));
  CHECK(seg.at(5.0).y() == doctest::Approx(4.0));
}
