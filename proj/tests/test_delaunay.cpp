#include "rst/delaunay.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace rst;

TEST_CASE("three non-collinear points give the single triangle") {
  Triangulation t = delaunay({{0, 0}, {1, 0}, {0, 1}});
  CHECK(t.edges.size() == 3);
  REQUIRE(t.triangles.size() == 1);
  CHECK(t.triangles[0] == std::array<int, 3>{0, 2, 1});
}

TEST_CASE("unit square: hull plus one diagonal") {
  Triangulation t = delaunay({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(t.edges.size() == 5);
  CHECK(t.triangles.size() == 2);
  // Either diagonal is a valid resolution of the cocircular tie.
  bool d02 = std::count(t.edges.begin(), t.edges.end(), std::pair<int, int>{0, 2}) == 1;
  bool d13 = std::count(t.edges.begin(), t.edges.end(), std::pair<int, int>{1, 3}) == 1;
  CHECK(d02 != d13);
}

TEST_CASE("collinear input degenerates to a path with no triangles") {
  Triangulation t = delaunay({{0, 0}, {3, 0}, {1, 0}, {2, 0}});
  CHECK(t.triangles.empty());
  REQUIRE(t.edges.size() == 3);
  CHECK(t.edges[0] == std::pair<int, int>{0, 2});
  CHECK(t.edges[1] == std::pair<int, int>{1, 3});
  CHECK(t.edges[2] == std::pair<int, int>{2, 3});
}

TEST_CASE("duplicate points are rejected at ingestion") {
  CHECK_THROWS_AS(delaunay({{0, 0}, {1, 1}, {0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(delaunay({}), std::invalid_argument);
}

TEST_CASE("single point and pair") {
  CHECK(delaunay({{1, 2}}).edges.empty());
  Triangulation t = delaunay({{1, 2}, {0, 0}});
  REQUIRE(t.edges.size() == 1);
  CHECK(t.edges[0] == std::pair<int, int>{0, 1});
}

TEST_CASE("empty-circumcircle audit on random points") {
  std::mt19937_64 rng(101);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  PointList pts(1000);
  for (Point& p : pts) p = Point{uni(rng), uni(rng)};

  Triangulation t = delaunay(pts);
  CHECK(t.triangles.size() > 0);
  for (const auto& tri : t.triangles) {
    REQUIRE(orient2d(pts[tri[0]], pts[tri[1]], pts[tri[2]]) == 1);
    for (int p = 0; p < static_cast<int>(pts.size()); ++p) {
      if (p == tri[0] || p == tri[1] || p == tri[2]) continue;
      // Non-strict emptiness: cocircular points are acceptable.
      REQUIRE(incircle(pts[tri[0]], pts[tri[1]], pts[tri[2]], pts[p]) <= 0);
    }
  }
}

TEST_CASE("structured grids triangulate cleanly despite massive degeneracy") {
  PointList pts;
  for (int x = 0; x < 15; ++x)
    for (int y = 0; y < 15; ++y) pts.push_back({double(x), double(y)});
  Triangulation t = delaunay(pts);
  // Euler: every interior face a triangle, 2n - 2 - h triangles for h hull vertices.
  const int n = 225, h = 4 * 14;
  CHECK(static_cast<int>(t.triangles.size()) == 2 * n - 2 - h);
  for (const auto& tri : t.triangles)
    for (int p = 0; p < n; ++p) {
      if (p == tri[0] || p == tri[1] || p == tri[2]) continue;
      REQUIRE(incircle(pts[tri[0]], pts[tri[1]], pts[tri[2]], pts[p]) <= 0);
    }
}
