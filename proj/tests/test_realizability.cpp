//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "corpus.hpp"
#include "simplexgeom/oracle.hpp"
#include "simplexgeom/realizability.hpp"
#include "worked.hpp"

using namespace simplexgeom;
using namespace simplexgeom::testing;

namespace {

// Collinear points on the hyperboloid: arccosh sqrt2, arccosh(sqrt10 - 2),
// arccosh sqrt5 (the third is the sum of the other two).
EdgeLengths collinear_hyperbolic() {
  const double a = std::acosh(std::sqrt(2.0));
  const double b = std::acosh(std::sqrt(10.0) - 2.0);
  const double c = std::acosh(std::sqrt(5.0));
  return EdgeLengths{{0, a, c}, {a, 0, b}, {c, b, 0}};
}

std::vector<std::size_t> shuffled(Rng &rng, std::size_t m) {
  std::vector<std::size_t> p(m);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

// Random edge sets with no guarantee of realizability: uniform lengths.
EdgeLengths random_edges(Rng &rng, std::size_t m, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  std::vector<std::vector<double>> g(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) g[i][j] = g[j][i] = u(rng);
  return EdgeLengths(g);
}

}  // namespace

TEST_CASE("worked simplex") {
  const EdgeLengths e = worked_edges();
  const auto eu = check_euclidean(e);
  CHECK(eu.verdict == Verdict::Realizable);
  CHECK(eu.signature == Signature{3, 0, 0});
  const auto hy = check_hyperbolic(e);
  CHECK(hy.verdict == Verdict::Realizable);
  CHECK(hy.signature == Signature{3, 1, 0});
  REQUIRE(hy.eigenvalues.size() == 4);
  CHECK(hy.eigenvalues[0] == doctest::Approx(-90.1277).epsilon(1e-5));
  CHECK(hy.eigenvalues[3] == doctest::Approx(79.2466).epsilon(1e-5));
  // Edges of 2..5 radians exceed a quarter circle.
  CHECK(check_spherical(e).verdict == Verdict::NotRealizable);
}

TEST_CASE("euclidean degenerate and impossible triangles") {
  CHECK(check_euclidean(EdgeLengths{{0, 1, 2}, {1, 0, 3}, {2, 3, 0}}).verdict ==
        Verdict::Degenerate);
  CHECK(check_euclidean(EdgeLengths{{0, 1, 1}, {1, 0, 3}, {1, 3, 0}}).verdict ==
        Verdict::NotRealizable);
  CHECK(check_euclidean(EdgeLengths{{0, 1}, {1, 0}}).verdict == Verdict::Realizable);
}

TEST_CASE("hyperbolic collinear triple is degenerate") {
  const auto r = check_hyperbolic(collinear_hyperbolic());
  CHECK(r.verdict == Verdict::Degenerate);
  CHECK(r.signature.n_zero == 1);
  CHECK(check_hyperbolic(EdgeLengths{{0, 1, 1}, {1, 0, 3}, {1, 3, 0}}).verdict ==
        Verdict::NotRealizable);
}

TEST_CASE("spherical gate and equilateral triangles") {
  const double t = std::numbers::pi / 3;
  CHECK(check_spherical(EdgeLengths{{0, t, t}, {t, 0, t}, {t, t, 0}}).verdict ==
        Verdict::Realizable);
  const double r = std::numbers::pi / 2;
  const auto gate = check_spherical(EdgeLengths{{0, r, 1}, {r, 0, 1}, {1, 1, 0}});
  CHECK(gate.verdict == Verdict::NotRealizable);
  CHECK(gate.detail.find("π/2") != std::string::npos);
}

TEST_CASE("general curvature dispatch") {
  const EdgeLengths e = worked_edges();
  CHECK(check(e.scaled(0.5), Curvature{-4.0}).verdict == Verdict::Realizable);
  CHECK(check(e.scaled(0.1), Curvature{4.0}).verdict == Verdict::Realizable);
  CHECK(check(e, Curvature{0.0}).verdict == Verdict::Realizable);
}

TEST_CASE("property: apex independence of the euclidean verdict") {
  Rng rng(31);
  for (int k = 0; k < 100; ++k) {
    const std::size_t m = 3 + k % 5;
    const EdgeLengths e = random_edges(rng, m, 0.5, 1.5);
    const Verdict ref = check_euclidean(e).verdict;
    for (std::size_t apex = 1; apex <= m; ++apex) {
      CHECK(is_positive_definite(euclidean_gram(e, apex).matrix) ==
            (ref == Verdict::Realizable));
    }
  }
}

TEST_CASE("property: relabeling never changes a verdict") {
  Rng rng(32);
  for (int k = 0; k < 200; ++k) {
    const std::size_t m = 3 + k % 5;
    const EdgeLengths e = random_edges(rng, m, 0.3, 1.4);
    const auto p = shuffled(rng, m);
    for (double kappa : {0.0, -1.0, 1.0}) {
      CHECK(check(e, Curvature{kappa}).verdict == check(e.permuted(p), Curvature{kappa}).verdict);
    }
  }
}

TEST_CASE("property: small euclidean simplices are hyperbolic") {
  // Large scales may leave the hyperbolic cone, and below roughly 1e-4 the
  // curvature signal in -cosh drowns in round-off; both are reported only.
  std::size_t large = 0, breakdown = 0;
  for (const Sample &s : corpus(0.0, 200, 33)) {
    REQUIRE(check_euclidean(s.edges).verdict == Verdict::Realizable);
    for (double eps : {1e-2, 3e-3}) {
      CHECK(check_hyperbolic(s.edges.scaled(eps)).verdict == Verdict::Realizable);
    }
    if (check_hyperbolic(s.edges.scaled(1e-1)).verdict != Verdict::Realizable) ++large;
    if (check_hyperbolic(s.edges.scaled(1e-5)).verdict != Verdict::Realizable) ++breakdown;
  }
  MESSAGE("scale 1e-1: " << large << " of 200 not hyperbolic; scale 1e-5: " << breakdown
                         << " of 200 lost to round-off");
}

TEST_CASE("property: realizable iff the embedding oracle reproduces the edges") {
  Rng rng(34);
  for (double kappa : {0.0, -1.0, 1.0}) {
    std::size_t realizable = 0, rejected = 0;
    for (int k = 0; k < 150; ++k) {
      const std::size_t m = 3 + k % 4;
      const EdgeLengths e = random_edges(rng, m, 0.2, kappa > 0 ? 1.5 : 2.0);
      const Curvature c{kappa};
      if (check(e, c).verdict == Verdict::Realizable) {
        ++realizable;
        const oracle::Embedding emb = oracle::embed(e, c);
        CHECK(oracle::max_edge_error(emb, e) <= 1e-8);
      } else {
        ++rejected;
        CHECK_THROWS(oracle::embed(e, c));
      }
    }
    // The random family must exercise both branches.
    CHECK(realizable > 10);
    CHECK(rejected > 10);
  }
}
