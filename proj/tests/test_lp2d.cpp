#include <doctest.h>

#include <cmath>
#include <vector>

#include "planeguard/lp2d.hpp"

using namespace planeguard;

TEST_CASE("chebyshev center of a square") {
  // 0 <= x <= 2, 0 <= y <= 2.
  std::vector<HalfPlane> rows{{-1, 0, 0}, {1, 0, 2}, {0, -1, 0}, {0, 1, 2}};
  const ChebyshevResult r = chebyshev_center(rows, 100.0);
  REQUIRE(r.found);
  CHECK(r.slack == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.x == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.y == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("infeasible strips report non-positive slack") {
  // x <= -1 and x >= 1 cannot hold together.
  std::vector<HalfPlane> rows{{1, 0, -1}, {-1, 0, -1}};
  const ChebyshevResult r = chebyshev_center(rows, 50.0);
  REQUIRE(r.found);
  CHECK(r.slack < 0.0);
  CHECK(r.slack == doctest::Approx(-1.0).epsilon(1e-9));
}

TEST_CASE("unbounded half-plane: depth set by the box inscribed ball") {
  std::vector<HalfPlane> rows{{-1, 0, 0}};  // x >= 0
  const ChebyshevResult r = chebyshev_center(rows, 10.0);
  REQUIRE(r.found);
  // Deepest point of [0,10] x [-10,10] sits at (5, 0) with depth 5.
  CHECK(r.slack == doctest::Approx(5.0).epsilon(1e-9));
  CHECK(r.x == doctest::Approx(5.0).epsilon(1e-9));
}

TEST_CASE("thin slab keeps its half-width as depth") {
  // 4.99 <= y <= 5.01.
  std::vector<HalfPlane> rows{{0, 1, 5.01}, {0, -1, -4.99}};
  const ChebyshevResult r = chebyshev_center(rows, 1000.0);
  REQUIRE(r.found);
  CHECK(r.slack == doctest::Approx(0.01).epsilon(1e-6));
  CHECK(r.y == doctest::Approx(5.0).epsilon(1e-6));
}

TEST_CASE("feasible point satisfies every constraint") {
  std::vector<HalfPlane> rows{
      {1, 2, 4}, {-3, 1, 5}, {0.5, -1, 2}, {-1, -1, 3}, {2, 0.1, 7}};
  const ChebyshevResult r = chebyshev_center(rows, 40.0);
  REQUIRE(r.found);
  CHECK(r.slack > 0.0);
  for (const HalfPlane& h : rows) {
    const double len = std::hypot(h.a, h.b);
    CHECK(h.a * r.x + h.b * r.y <= h.c - r.slack * len + 1e-7);
  }
}
