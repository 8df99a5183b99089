//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "simplexgeom/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "simplexgeom/error.hpp"
#include "simplexgeom/realizability.hpp"

namespace simplexgeom {

namespace {

void require_size(std::size_t expected, std::size_t a, std::size_t b) {
  if (a != expected || b != expected) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "point has " + std::to_string(a == expected ? b : a) +
                            " coordinates, simplex has " + std::to_string(expected) +
                            " vertices");
  }
}

void require_curved(const GramMatrix &q, bool negative) {
  if (q.kind != GramKind::CurvedFull || (negative ? !(q.curvature.kappa < 0)
                                                  : !(q.curvature.kappa > 0))) {
    throw GeometryError(ErrorKind::WrongModel,
                        negative ? "hyperbolic distance needs a negatively curved Gram matrix"
                                 : "spherical distance needs a positively curved Gram matrix");
  }
}

}  // namespace

double euclidean_distance(const GramMatrix &q, const BarycentricPoint &x,
                          const BarycentricPoint &y) {
  if (q.kind != GramKind::EuclideanApex) {
    throw GeometryError(ErrorKind::WrongModel,
                        "euclidean distance needs an apex Gram matrix");
  }
  require_size(q.vertex_count(), x.size(), y.size());
  const auto rows = vertices_without(q.vertex_count(), q.apex);
  std::vector<double> diff(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) diff[i] = x[rows[i]] - y[rows[i]];

  double value = 0.0;
  double magnitude = 0.0;
  for (std::size_t i = 0; i < diff.size(); ++i) {
    for (std::size_t j = 0; j < diff.size(); ++j) {
      const double term = diff[i] * q.matrix(i, j) * diff[j];
      value += term;
      magnitude += std::abs(term);
    }
  }
  if (value < 0.0) {
    if (value < -kClampBand * std::max(1.0, magnitude)) {
      throw GeometryError(ErrorKind::NotRealizableInput,
                          "quadratic form is negative; the Gram matrix is not "
                          "positive semidefinite");
    }
    value = 0.0;
  }
  return std::sqrt(value);
}

double hyperbolic_distance(const GramMatrix &q, std::span<const double> x,
                           std::span<const double> y) {
  require_curved(q, true);
  require_size(q.matrix.dim(), x.size(), y.size());
  if (std::equal(x.begin(), x.end(), y.begin(), y.end())) {
    if (!(q.matrix.bilinear(x, x) < 0.0)) {
      throw GeometryError(ErrorKind::OutsideLightCone, "point is not timelike");
    }
    return 0.0;
  }
  const double xx = q.matrix.bilinear(x, x);
  const double yy = q.matrix.bilinear(y, y);
  if (!(xx < 0.0) || !(yy < 0.0)) {
    throw GeometryError(ErrorKind::OutsideLightCone, "point is not timelike");
  }
  double arg = -q.matrix.bilinear(x, y) / std::sqrt(xx * yy);
  if (arg < 1.0) {
    if (arg < 1.0 - kClampBand) {
      throw GeometryError(ErrorKind::OutsideLightCone,
                          "points lie in opposite light cones");
    }
    arg = 1.0;
  }
  return q.curvature.radius() * std::acosh(arg);
}

double hyperbolic_distance(const GramMatrix &q, const BarycentricPoint &x,
                           const BarycentricPoint &y) {
  return hyperbolic_distance(q, x.coords(), y.coords());
}

double spherical_distance(const GramMatrix &q, std::span<const double> x,
                          std::span<const double> y) {
  require_curved(q, false);
  require_size(q.matrix.dim(), x.size(), y.size());
  const double xx = q.matrix.bilinear(x, x);
  const double yy = q.matrix.bilinear(y, y);
  if (!(xx > 0.0) || !(yy > 0.0)) {
    throw GeometryError(ErrorKind::DegenerateDirection,
                        "point has non-positive norm and cannot be projected to the sphere");
  }
  if (std::equal(x.begin(), x.end(), y.begin(), y.end())) return 0.0;
  double arg = q.matrix.bilinear(x, y) / std::sqrt(xx * yy);
  if (std::abs(arg) > 1.0) {
    if (std::abs(arg) > 1.0 + kClampBand) {
      throw GeometryError(ErrorKind::DegenerateDirection,
                          "cosine outside [-1, 1]; the Gram matrix is not positive definite");
    }
    arg = std::clamp(arg, -1.0, 1.0);
  }
  return q.curvature.radius() * std::acos(arg);
}

double spherical_distance(const GramMatrix &q, const BarycentricPoint &x,
                          const BarycentricPoint &y) {
  return spherical_distance(q, x.coords(), y.coords());
}

double distance(const EdgeLengths &e, Curvature c, const BarycentricPoint &x,
                const BarycentricPoint &y, double tol) {
  require_size(e.vertex_count(), x.size(), y.size());
  const RealizabilityReport report = check(e, c, tol);
  if (report.verdict == Verdict::NotRealizable) {
    throw GeometryError(ErrorKind::NotRealizableInput, report.detail);
  }
  if (c.kappa == 0.0) {
    return euclidean_distance(euclidean_gram(e, e.vertex_count()), x, y);
  }
  const double root = std::sqrt(std::abs(c.kappa));
  const EdgeLengths unit = e.scaled(root);
  if (c.kappa < 0.0) {
    return hyperbolic_distance(curved_gram(unit, Curvature::hyperbolic()), x, y) / root;
  }
  return spherical_distance(curved_gram(unit, Curvature::spherical()), x, y) / root;
}

}  // namespace simplexgeom
