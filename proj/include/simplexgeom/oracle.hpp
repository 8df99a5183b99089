//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SIMPLEXGEOM_ORACLE_HPP_
#define SIMPLEXGEOM_ORACLE_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "simplexgeom/simplex.hpp"
#include "simplexgeom/symmat.hpp"

// Explicit model-space embeddings. Everything here works on ambient
// coordinates and serves as the brute-force reference for the synthetic
// (edge-length only) formulas.

namespace simplexgeom::oracle {

enum class Model {
  /// R^n, apex vertex at the origin.
  EuclideanSpace,
  /// R^{n,1}, time coordinate last, vertices on <x,x> = 1/k with time > 0.
  MinkowskiSpace,
  /// Sphere of radius 1/sqrt(k) centred at the origin of R^{n+1}.
  SphereInEuclidean,
};

std::string_view to_string(Model m) noexcept;

struct Embedding {
  Model model;
  Curvature curvature;
  /// One coordinate vector per simplex vertex, all of the same length.
  std::vector<std::vector<double>> vertices;

  std::size_t ambient_dim() const { return vertices.front().size(); }
};

/// The ambient bilinear form: dot product, or Minkowski with the last
/// coordinate timelike.
double ambient_inner(const Embedding &emb, std::span<const double> a,
                     std::span<const double> b);

/// Distance between two ambient points lying on the model (for the curved
/// models, on the hyperboloid sheet / sphere).
double model_distance(const Embedding &emb, std::span<const double> a,
                      std::span<const double> b);

/// Explicit vertex coordinates. Euclidean: Cholesky factor of the apex Gram
/// matrix. Spherical: Cholesky factor of the full Gram matrix. Hyperbolic:
/// eigendecomposition of the full Gram matrix with the time axis last and
/// flipped so that every vertex sits on the upper sheet.
///
/// Throws NotRealizableInput unless the edge lengths are realizable, and
/// InternalInconsistency if the factorization disagrees with that verdict.
Embedding embed(const EdgeLengths &e, Curvature c, double tol = kDefaultTolerance);

/// Largest |model distance - edge length| over all vertex pairs.
double max_edge_error(const Embedding &emb, const EdgeLengths &e);

/// Ambient coordinates of the hull point with the given coefficients.
std::vector<double> hull_point(const Embedding &emb, std::span<const double> coeffs);

/// Radial projection of an ambient hull point onto the model surface
/// (identity for Euclidean space).
std::vector<double> lift(const Embedding &emb, std::span<const double> point);

/// Distance between two barycentric points computed from coordinates: build
/// the hull points, lift them to the model and apply the model's distance.
double brute_distance(const Embedding &emb, const BarycentricPoint &x,
                      const BarycentricPoint &y);

struct BruteProjectOptions {
  /// Grid step is 1/resolution, lowered for large faces so the grid stays
  /// below max_grid_points.
  std::size_t resolution = 64;
  std::size_t max_grid_points = 200000;
  std::size_t max_sweeps = 4000;
};

/// Numerical minimizer of the model distance from `vertex` (1-based) over the
/// closed opposite face: coarse barycentric grid, then pairwise mass-transfer
/// coordinate descent with Brent line searches. Deterministic.
BarycentricPoint brute_project(const Embedding &emb, std::size_t vertex,
                               const BruteProjectOptions &options = {});

}  // namespace simplexgeom::oracle

#endif  // SIMPLEXGEOM_ORACLE_HPP_
