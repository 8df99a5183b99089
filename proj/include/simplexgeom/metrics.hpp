//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SIMPLEXGEOM_METRICS_HPP_
#define SIMPLEXGEOM_METRICS_HPP_

#include <span>

#include "simplexgeom/simplex.hpp"
#include "simplexgeom/symmat.hpp"

namespace simplexgeom {

/// Arguments of arccosh/arccos within this band of the valid range are
/// treated as round-off and clamped; anything further out is an error.
inline constexpr double kClampBand = 1e-12;

/// sqrt([x-y]^T Q [x-y]) where [x-y] drops the apex coordinate.
/// Throws NotRealizableInput when the form is clearly negative.
double euclidean_distance(const GramMatrix &q, const BarycentricPoint &x,
                          const BarycentricPoint &y);

/// R * arccosh(-<x,y> / sqrt(<x,x><y,y>)) with R = 1/sqrt(-k).
/// Both hull vectors must be timelike and in the vertices' cone
/// (OutsideLightCone otherwise). The vectors need not be normalized.
double hyperbolic_distance(const GramMatrix &q, std::span<const double> x,
                           std::span<const double> y);
double hyperbolic_distance(const GramMatrix &q, const BarycentricPoint &x,
                           const BarycentricPoint &y);

/// R * arccos(<x,y> / sqrt(<x,x><y,y>)) with R = 1/sqrt(k).
/// Throws DegenerateDirection for non-positive norms.
double spherical_distance(const GramMatrix &q, std::span<const double> x,
                          std::span<const double> y);
double spherical_distance(const GramMatrix &q, const BarycentricPoint &x,
                          const BarycentricPoint &y);

/// Distance in a simplex of any constant curvature. Non-zero curvature is
/// handled by rescaling the edges to unit curvature and scaling the result
/// back by 1/sqrt|k|.
double distance(const EdgeLengths &e, Curvature c, const BarycentricPoint &x,
                const BarycentricPoint &y, double tol = kDefaultTolerance);

}  // namespace simplexgeom

#endif  // SIMPLEXGEOM_METRICS_HPP_
