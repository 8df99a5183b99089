//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SIMPLEXGEOM_PROJECTION_HPP_
#define SIMPLEXGEOM_PROJECTION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "simplexgeom/simplex.hpp"
#include "simplexgeom/symmat.hpp"

namespace simplexgeom {

/// Feet with every face coordinate above this are reported inside the face.
inline constexpr double kInsideFaceBand = 1e-12;

struct ProjectionResult {
  /// Barycentric coordinates of the foot; 0 at the projected vertex.
  BarycentricPoint foot;
  /// Curved cases only: the foot lifted onto the model surface, as
  /// coefficients in the vertex frame (<p, p> = 1/k).
  std::optional<HullVector> foot_model;
  /// Distance from the vertex to the foot in the simplex's own metric.
  double altitude = 0.0;
  bool inside_face = false;
};

/// Sum over all (i, j) of (-1)^(i+j) M_ij.
double signed_minor_sum(const SymMatrix &q);

/// Row sums of the signed minors, sum_j (-1)^(i+j) M_ij, for each row i.
std::vector<double> signed_minor_row_sums(const SymMatrix &q);

/// First-row minors of the curved Gram matrix with the projected vertex moved
/// to the front (vertex order: vertex, then the others ascending).
struct FirstRowMinors {
  /// M_11, M_12, ..., M_1,n+1.
  std::vector<double> minors;
  /// sum over j >= 2 of (-1)^(1+j) M_1j.
  double signed_sum = 0.0;
  /// sqrt(|s^T Q s|) with s_j = (-1)^(1+j) M_1j (s_1 = 0); dividing the signed
  /// minors by this gives the lifted foot directly (unit curvature).
  double lift_normalizer = 0.0;
};

FirstRowMinors first_row_minors(const EdgeLengths &e, Curvature c,
                                std::size_t vertex);

/// Orthogonal projection of `vertex` onto the opposite face of a Euclidean
/// simplex, from the signed minors of the apex-`vertex` Gram matrix.
/// The altitude is sqrt(|Q| / sum of signed minors).
ProjectionResult euclidean_project(const EdgeLengths &e, std::size_t vertex,
                                   double tol = kDefaultTolerance);

/// sqrt(det Q) / n!.
double euclidean_volume(const EdgeLengths &e, double tol = kDefaultTolerance);

/// Volume of the face opposite `vertex`: sqrt(sum of signed minors) / (n-1)!.
double euclidean_face_volume(const EdgeLengths &e, std::size_t vertex,
                             double tol = kDefaultTolerance);

/// Geodesic foot from the first-row minors of the -cosh Gram matrix.
ProjectionResult hyperbolic_project(const EdgeLengths &e, std::size_t vertex,
                                    double tol = kDefaultTolerance);

/// Geodesic foot on the sphere. Uses the same first-row-minor formula as the
/// hyperbolic case, applied to the cos Gram matrix.
ProjectionResult spherical_project(const EdgeLengths &e, std::size_t vertex,
                                   double tol = kDefaultTolerance);

/// Euclidean projection inside the chordal hull followed by a radial lift.
/// Only agrees with spherical_project when the foot is equidistant in the
/// hull and on the sphere (e.g. symmetric faces); kept for comparison.
ProjectionResult spherical_chordal_project(const EdgeLengths &e, std::size_t vertex,
                                           double tol = kDefaultTolerance);

/// Dispatch on curvature. General curvature is rescaled to unit curvature;
/// the foot coordinates are unchanged and the altitude scales by 1/sqrt|k|.
ProjectionResult project(const EdgeLengths &e, Curvature c, std::size_t vertex,
                         double tol = kDefaultTolerance);

/// Projection of `vertex` onto the sub-face spanned by `face` (1-based) by
/// restricting to the simplex on {vertex} + face first. Coordinates are
/// reported over all vertices of `e`.
ProjectionResult project_onto(const EdgeLengths &e, Curvature c, std::size_t vertex,
                              std::span<const std::size_t> face,
                              double tol = kDefaultTolerance);

}  // namespace simplexgeom

#endif  // SIMPLEXGEOM_PROJECTION_HPP_
