//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "corpus.hpp"
#include "simplexgeom/error.hpp"
#include "simplexgeom/metrics.hpp"
#include "simplexgeom/oracle.hpp"
#include "worked.hpp"

using namespace simplexgeom;
using namespace simplexgeom::testing;

namespace {

constexpr double kUnit[] = {0.0, -1.0, 1.0};

ErrorKind kind_of(auto &&fn) {
  try {
    fn();
  } catch (const GeometryError &e) {
    return e.kind();
  }
  FAIL("no GeometryError thrown");
  return ErrorKind::InternalInconsistency;
}

}  // namespace

TEST_CASE("worked simplex distances") {
  const EdgeLengths e = worked_edges();
  CHECK(std::abs(distance(e, Curvature::euclidean(), worked_p(), worked_q()) - 11.0 / 12) <=
        1e-12);
  const double dh = distance(e, Curvature::hyperbolic(), worked_p(), worked_q());
  CHECK(dh == doctest::Approx(0.639969).epsilon(1e-6));
  CHECK(dh < 11.0 / 12);

  const GramMatrix h = curved_gram(e, Curvature::hyperbolic());
  CHECK(hull_inner_product(h, worked_p(), worked_q()) == doctest::Approx(-16.40517).epsilon(1e-6));
  CHECK(hull_inner_product(h, worked_p(), worked_p()) == doctest::Approx(-19.34049).epsilon(1e-6));
  CHECK(hull_inner_product(h, worked_q(), worked_q()) == doctest::Approx(-9.47513).epsilon(1e-6));
}

TEST_CASE("equilateral spherical triangle") {
  const double t = std::numbers::pi / 3;
  const EdgeLengths e{{0, t, t}, {t, 0, t}, {t, t, 0}};
  // Vertex to the midpoint of the opposite side: arccos(1/sqrt3) by hand.
  const double d = distance(e, Curvature::spherical(), BarycentricPoint{1, 0, 0},
                            BarycentricPoint{0, 0.5, 0.5});
  CHECK(d == doctest::Approx(std::acos(1.0 / std::sqrt(3.0))).epsilon(1e-14));
}

TEST_CASE("right triangle") {
  const EdgeLengths e{{0, 3, 4}, {3, 0, 5}, {4, 5, 0}};
  CHECK(distance(e, Curvature::euclidean(), BarycentricPoint{1, 0, 0},
                 BarycentricPoint{0, 0.5, 0.5}) == doctest::Approx(2.5).epsilon(1e-15));
}

TEST_CASE("errors") {
  const EdgeLengths bad{{0, 1, 1}, {1, 0, 3}, {1, 3, 0}};
  const BarycentricPoint c = BarycentricPoint::centroid(3);
  CHECK(kind_of([&] { (void)distance(bad, Curvature::euclidean(), c, c); }) ==
        ErrorKind::NotRealizableInput);
  CHECK(kind_of([&] { (void)distance(bad, Curvature::hyperbolic(), c, c); }) ==
        ErrorKind::NotRealizableInput);
  const GramMatrix h = curved_gram(worked_edges(), Curvature::hyperbolic());
  CHECK(kind_of([&] { (void)spherical_distance(h, worked_p(), worked_q()); }) ==
        ErrorKind::WrongModel);
  CHECK(kind_of([&] { (void)euclidean_distance(h, worked_p(), worked_q()); }) ==
        ErrorKind::WrongModel);
  const double spacelike[] = {1.0, -1.0, 0.0, 0.0};
  const double centre[] = {0.25, 0.25, 0.25, 0.25};
  CHECK(kind_of([&] { (void)hyperbolic_distance(h, spacelike, centre); }) ==
        ErrorKind::OutsideLightCone);
  CHECK_THROWS_AS((void)distance(worked_edges(), Curvature::euclidean(), c, c), GeometryError);
}

TEST_CASE("degenerate simplices still measure distances") {
  const EdgeLengths line{{0, 1, 2}, {1, 0, 3}, {2, 3, 0}};
  // Vertex 1 sits between vertices 2 and 3 on a line.
  CHECK(distance(line, Curvature::euclidean(), BarycentricPoint{0, 1, 0},
                 BarycentricPoint{0, 0, 1}) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("outside points are accepted") {
  const EdgeLengths e{{0, 3, 4}, {3, 0, 5}, {4, 5, 0}};
  const BarycentricPoint out{2.0, -1.0, 0.0};
  CHECK(out.outside());
  // 2 v1 - v2 reflects v2 through v1.
  CHECK(distance(e, Curvature::euclidean(), out, BarycentricPoint{0, 1, 0}) ==
        doctest::Approx(6.0).epsilon(1e-14));
}

TEST_CASE("property: symmetry, identity, edge recovery") {
  Rng rng(41);
  for (double kappa : kUnit) {
    for (const Sample &s : corpus(kappa, 100, 42)) {
      const std::size_t m = s.edges.vertex_count();
      for (int k = 0; k < 10; ++k) {
        const auto x = random_interior(rng, m), y = random_interior(rng, m);
        CHECK(distance(s.edges, s.curvature, x, y) == distance(s.edges, s.curvature, y, x));
        CHECK(distance(s.edges, s.curvature, x, x) == 0.0);
      }
      for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = i + 1; j <= m; ++j) {
          const double d = distance(s.edges, s.curvature, BarycentricPoint::vertex(m, i),
                                    BarycentricPoint::vertex(m, j));
          CHECK(std::abs(d - s.edges(i - 1, j - 1)) <= 1e-10);
        }
    }
  }
}

TEST_CASE("property: triangle inequality") {
  Rng rng(43);
  for (double kappa : kUnit) {
    for (const Sample &s : corpus(kappa, 20, 44)) {
      const std::size_t m = s.edges.vertex_count();
      for (int k = 0; k < 200; ++k) {
        const auto x = random_interior(rng, m), y = random_interior(rng, m),
                   z = random_interior(rng, m);
        const double xz = distance(s.edges, s.curvature, x, z);
        const double xy = distance(s.edges, s.curvature, x, y);
        const double yz = distance(s.edges, s.curvature, y, z);
        CHECK(xz <= xy + yz + 1e-9);
      }
    }
  }
}

TEST_CASE("property: synthetic distance matches coordinates") {
  Rng rng(45);
  for (double kappa : kUnit) {
    for (const Sample &s : corpus(kappa, 100, 46)) {
      const oracle::Embedding emb = oracle::embed(s.edges, s.curvature);
      for (int k = 0; k < 20; ++k) {
        const auto x = random_interior(rng, s.edges.vertex_count());
        const auto y = random_interior(rng, s.edges.vertex_count());
        const double d = distance(s.edges, s.curvature, x, y);
        CHECK(std::abs(d - oracle::brute_distance(emb, x, y)) <= 1e-8);
        CHECK(std::abs(d - coordinate_distance(s, x, y)) <= 1e-8);
      }
    }
  }
}
