//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "simplexgeom/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "simplexgeom/error.hpp"
#include "simplexgeom/metrics.hpp"
#include "simplexgeom/realizability.hpp"

namespace simplexgeom {

namespace {

double sign_of(std::size_t i, std::size_t j) { return (i + j) % 2 == 0 ? 1.0 : -1.0; }

double factorial(std::size_t k) {
  double f = 1.0;
  for (std::size_t i = 2; i <= k; ++i) f *= static_cast<double>(i);
  return f;
}

void require_realizable(const RealizabilityReport &report) {
  if (report.verdict != Verdict::Realizable) {
    throw GeometryError(ErrorKind::NotRealizableInput,
                        std::string(to_string(report.verdict)) + ": " + report.detail);
  }
}

void require_vertex(const EdgeLengths &e, std::size_t vertex) {
  if (vertex < 1 || vertex > e.vertex_count()) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "vertex must be in 1.." + std::to_string(e.vertex_count()));
  }
}

bool all_inside(std::span<const double> coords) {
  return std::all_of(coords.begin(), coords.end(),
                     [](double c) { return c >= -kInsideFaceBand; });
}

// Vertex order with `vertex` (1-based) first and the rest ascending, 0-based.
std::vector<std::size_t> vertex_first(std::size_t count, std::size_t vertex) {
  std::vector<std::size_t> perm{vertex - 1};
  const auto rest = vertices_without(count, vertex);
  perm.insert(perm.end(), rest.begin(), rest.end());
  return perm;
}

// Foot coordinates over all vertices from the projection coefficients of an
// apex Gram matrix (rows = non-apex vertices).
std::vector<double> apex_foot(const GramMatrix &q) {
  const std::vector<double> rows = signed_minor_row_sums(q.matrix);
  const double total = std::accumulate(rows.begin(), rows.end(), 0.0);
  double magnitude = 0.0;
  for (double r : rows) magnitude += std::abs(r);
  if (!(total > 0.0) || total <= 1e-14 * magnitude) {
    throw GeometryError(ErrorKind::ProjectionDegenerate,
                        "signed minor sum vanishes; the opposite face is degenerate");
  }
  const auto index = vertices_without(q.vertex_count(), q.apex);
  std::vector<double> coords(q.vertex_count(), 0.0);
  for (std::size_t i = 0; i < index.size(); ++i) coords[index[i]] = rows[i] / total;
  return coords;
}

ProjectionResult curved_project(const EdgeLengths &e, Curvature c, std::size_t vertex) {
  const FirstRowMinors data = first_row_minors(e, c, vertex);
  const std::size_t count = e.vertex_count();
  const auto perm = vertex_first(count, vertex);

  double magnitude = 0.0;
  for (std::size_t j = 1; j < count; ++j) magnitude += std::abs(data.minors[j]);
  if (data.signed_sum == 0.0 || std::abs(data.signed_sum) <= 1e-14 * magnitude) {
    throw GeometryError(ErrorKind::ProjectionDegenerate,
                        "signed first-row minors sum to zero");
  }
  std::vector<double> signed_minors(count, 0.0), coords(count, 0.0);
  for (std::size_t j = 1; j < count; ++j) {
    signed_minors[perm[j]] = sign_of(0, j) * data.minors[j];
    coords[perm[j]] = signed_minors[perm[j]] / data.signed_sum;
  }

  // The foot direction is +-(signed minors); pick the sign on the vertex's
  // sheet (hemisphere). Far outside the face the hull point with coordinates
  // summing to one sits on the opposite ray, so lift the direction itself.
  const GramMatrix q = curved_gram(e, c);
  double with_vertex = 0.0;
  for (std::size_t j = 0; j < count; ++j)
    with_vertex += q.matrix(vertex - 1, j) * signed_minors[j];
  if (c.kappa * with_vertex == 0.0) {
    throw GeometryError(ErrorKind::ProjectionDegenerate,
                        "the vertex is polar to its opposite face");
  }
  if (c.kappa * with_vertex < 0.0) {
    for (double &m : signed_minors) m = -m;
  }

  const HullVector model = lift_to_model(q, signed_minors);
  const BarycentricPoint apex = BarycentricPoint::vertex(count, vertex);
  const double altitude = c.kappa < 0
                              ? hyperbolic_distance(q, apex.coords(), model.coords())
                              : spherical_distance(q, apex.coords(), model.coords());
  return {BarycentricPoint(coords), model, altitude, all_inside(coords)};
}

}  // namespace

std::vector<double> signed_minor_row_sums(const SymMatrix &q) {
  const std::size_t n = q.dim();
  std::vector<double> rows(n, 0.0);
  if (n == 1) {
    // The adjugate of a 1x1 matrix is [1].
    rows[0] = 1.0;
    return rows;
  }
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = 1; j <= n; ++j) {
      // M_ij == M_ji for symmetric q; only compute the upper triangle.
      if (j < i) continue;
      const double m = sign_of(i, j) * minor(q, i, j);
      rows[i - 1] += m;
      if (j != i) rows[j - 1] += m;
    }
  }
  return rows;
}

double signed_minor_sum(const SymMatrix &q) {
  const auto rows = signed_minor_row_sums(q);
  return std::accumulate(rows.begin(), rows.end(), 0.0);
}

FirstRowMinors first_row_minors(const EdgeLengths &e, Curvature c, std::size_t vertex) {
  require_vertex(e, vertex);
  const std::size_t count = e.vertex_count();
  const auto perm = vertex_first(count, vertex);
  const GramMatrix q = curved_gram(e.permuted(perm), c);

  FirstRowMinors out;
  out.minors.resize(count);
  std::vector<double> s(count, 0.0);
  for (std::size_t j = 1; j <= count; ++j) {
    out.minors[j - 1] = minor(q.matrix, 1, j);
    if (j >= 2) {
      s[j - 1] = sign_of(1, j) * out.minors[j - 1];
      out.signed_sum += s[j - 1];
    }
  }
  out.lift_normalizer = std::sqrt(std::abs(q.matrix.bilinear(s, s)));
  return out;
}

ProjectionResult euclidean_project(const EdgeLengths &e, std::size_t vertex, double tol) {
  require_vertex(e, vertex);
  require_realizable(check_euclidean(e, tol));
  const GramMatrix q = euclidean_gram(e, vertex);
  const std::vector<double> coords = apex_foot(q);

  const double face = signed_minor_sum(q.matrix);
  const double full = determinant(q.matrix);
  ProjectionResult result{BarycentricPoint(coords), std::nullopt,
                          std::sqrt(std::max(0.0, full / face)), all_inside(coords)};
  return result;
}

double euclidean_volume(const EdgeLengths &e, double tol) {
  const RealizabilityReport report = check_euclidean(e, tol);
  if (report.verdict == Verdict::NotRealizable) {
    throw GeometryError(ErrorKind::NotRealizableInput, report.detail);
  }
  if (report.verdict == Verdict::Degenerate) return 0.0;
  const GramMatrix q = euclidean_gram(e, e.vertex_count());
  return std::sqrt(std::max(0.0, determinant(q.matrix))) / factorial(e.n());
}

double euclidean_face_volume(const EdgeLengths &e, std::size_t vertex, double tol) {
  require_vertex(e, vertex);
  if (e.n() < 2) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "the face of a 1-simplex is a point; volume is undefined");
  }
  const RealizabilityReport face = check_euclidean(e.face_opposite(vertex), tol);
  if (face.verdict == Verdict::NotRealizable) {
    throw GeometryError(ErrorKind::NotRealizableInput, face.detail);
  }
  if (face.verdict == Verdict::Degenerate) return 0.0;
  const GramMatrix q = euclidean_gram(e, vertex);
  const double sum = signed_minor_sum(q.matrix);
  if (sum < 0.0) {
    throw GeometryError(ErrorKind::NotRealizableInput,
                        "signed minor sum is negative");
  }
  return std::sqrt(sum) / factorial(e.n() - 1);
}

ProjectionResult hyperbolic_project(const EdgeLengths &e, std::size_t vertex, double tol) {
  require_vertex(e, vertex);
  require_realizable(check_hyperbolic(e, tol));
  return curved_project(e, Curvature::hyperbolic(), vertex);
}

ProjectionResult spherical_project(const EdgeLengths &e, std::size_t vertex, double tol) {
  require_vertex(e, vertex);
  require_realizable(check_spherical(e, tol));
  return curved_project(e, Curvature::spherical(), vertex);
}

ProjectionResult spherical_chordal_project(const EdgeLengths &e, std::size_t vertex,
                                           double tol) {
  require_vertex(e, vertex);
  require_realizable(check_spherical(e, tol));
  const GramMatrix sphere = curved_gram(e, Curvature::spherical());
  const std::vector<double> coords = apex_foot(hull_gram(sphere, vertex));
  BarycentricPoint foot(coords);
  const BarycentricPoint apex = BarycentricPoint::vertex(e.vertex_count(), vertex);
  return {foot, lift_to_model(sphere, foot), spherical_distance(sphere, apex, foot),
          all_inside(coords)};
}

ProjectionResult project(const EdgeLengths &e, Curvature c, std::size_t vertex,
                         double tol) {
  switch (c.classification()) {
    case CurvatureClass::Euclidean: return euclidean_project(e, vertex, tol);
    case CurvatureClass::Hyperbolic: return hyperbolic_project(e, vertex, tol);
    case CurvatureClass::Spherical: return spherical_project(e, vertex, tol);
    case CurvatureClass::General: break;
  }
  const double root = std::sqrt(std::abs(c.kappa));
  const EdgeLengths unit = e.scaled(root);
  ProjectionResult r = c.kappa < 0 ? hyperbolic_project(unit, vertex, tol)
                                   : spherical_project(unit, vertex, tol);
  r.altitude /= root;
  return r;
}

ProjectionResult project_onto(const EdgeLengths &e, Curvature c, std::size_t vertex,
                              std::span<const std::size_t> face, double tol) {
  require_vertex(e, vertex);
  std::vector<std::size_t> keep{vertex};
  keep.insert(keep.end(), face.begin(), face.end());
  const ProjectionResult sub = project(e.restricted(keep), c, 1, tol);

  std::vector<double> coords(e.vertex_count(), 0.0);
  for (std::size_t k = 0; k < face.size(); ++k) coords[face[k] - 1] = sub.foot[k + 1];
  std::optional<HullVector> model;
  if (sub.foot_model) {
    std::vector<double> m(e.vertex_count(), 0.0);
    for (std::size_t k = 0; k < face.size(); ++k) m[face[k] - 1] = (*sub.foot_model)[k + 1];
    model = HullVector(std::move(m));
  }
  return {BarycentricPoint(std::move(coords)), std::move(model), sub.altitude,
          sub.inside_face};
}

}  // namespace simplexgeom
