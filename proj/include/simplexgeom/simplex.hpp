//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SIMPLEXGEOM_SIMPLEX_HPP_
#define SIMPLEXGEOM_SIMPLEX_HPP_

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string_view>
#include <vector>

#include "simplexgeom/symmat.hpp"

// Domain types for metric simplices and the Gram-matrix builders.
//
// Vertex numbers that appear in the domain API (apex, projected vertex, face
// lists) are 1-based. Element accessors and permutation arrays are 0-based.

namespace simplexgeom {

/// Pairwise geodesic edge lengths of an n-simplex with n+1 vertices.
/// Zero diagonal, symmetric, strictly positive off the diagonal.
class EdgeLengths {
public:
  EdgeLengths(std::initializer_list<std::initializer_list<double>> rows);
  explicit EdgeLengths(const std::vector<std::vector<double>> &rows);

  /// Simplex dimension n; the simplex has n+1 vertices.
  std::size_t n() const noexcept { return count_ - 1; }
  std::size_t vertex_count() const noexcept { return count_; }

  double operator()(std::size_t i, std::size_t j) const {
    return gamma_[i * count_ + j];
  }

  double max_length() const;

  EdgeLengths scaled(double factor) const;
  /// result(i,j) = this(perm[i], perm[j]), 0-based.
  EdgeLengths permuted(std::span<const std::size_t> perm) const;
  /// Sub-simplex on the given (1-based, distinct) vertices, in that order.
  EdgeLengths restricted(std::span<const std::size_t> vertices) const;
  /// The (n-1)-face opposite `vertex` (1-based).
  EdgeLengths face_opposite(std::size_t vertex) const;

  std::vector<std::vector<double>> rows() const;

private:
  EdgeLengths(std::size_t count, std::vector<double> gamma);
  void validate() const;

  std::size_t count_;
  std::vector<double> gamma_;
};

enum class CurvatureClass { Euclidean, Hyperbolic, Spherical, General };

std::string_view to_string(CurvatureClass c) noexcept;

struct Curvature {
  double kappa = 0.0;

  static constexpr Curvature euclidean() { return {0.0}; }
  static constexpr Curvature hyperbolic() { return {-1.0}; }
  static constexpr Curvature spherical() { return {1.0}; }

  CurvatureClass classification() const noexcept;
  /// 1/sqrt(|kappa|); infinite for kappa == 0.
  double radius() const noexcept;

  bool operator==(const Curvature &) const = default;
};

/// Barycentric coordinates over the vertices of a simplex.
///
/// Inputs whose coordinate sum is off by more than 1e-6 are rejected; smaller
/// deviations are renormalized away.
class BarycentricPoint {
public:
  explicit BarycentricPoint(std::vector<double> coords);
  BarycentricPoint(std::initializer_list<double> coords)
      : BarycentricPoint(std::vector<double>(coords)) {}

  /// The point sitting on vertex `index` (1-based) of a `count`-vertex simplex.
  static BarycentricPoint vertex(std::size_t count, std::size_t index);
  static BarycentricPoint centroid(std::size_t count);

  std::span<const double> coords() const noexcept { return coords_; }
  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }

  /// True when some coordinate is negative, i.e. the point lies outside the
  /// closed simplex (but possibly still in its affine hull or cone).
  bool outside() const noexcept { return outside_; }

private:
  std::vector<double> coords_;
  bool outside_ = false;
};

/// Coefficients of a model-space vector in the vertex frame (v_1, ..., v_{n+1}).
/// Unlike a BarycentricPoint the coefficients need not sum to 1.
class HullVector {
public:
  explicit HullVector(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {}

  std::span<const double> coords() const noexcept { return coeffs_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  double operator[](std::size_t i) const { return coeffs_[i]; }

private:
  std::vector<double> coeffs_;
};

enum class GramKind {
  /// n x n matrix of <v_i - v_apex, v_j - v_apex> over the non-apex vertices.
  EuclideanApex,
  /// (n+1) x (n+1) matrix of <v_i, v_j> in the curved model's ambient space.
  CurvedFull,
};

struct GramMatrix {
  SymMatrix matrix;
  GramKind kind;
  /// 1-based apex vertex for EuclideanApex, 0 for CurvedFull.
  std::size_t apex;
  Curvature curvature;

  /// Vertex count of the underlying simplex.
  std::size_t vertex_count() const noexcept {
    return kind == GramKind::EuclideanApex ? matrix.dim() + 1 : matrix.dim();
  }
};

/// The non-apex vertices (0-based) in ascending order; these index the rows of
/// an apex Gram matrix.
std::vector<std::size_t> vertices_without(std::size_t count, std::size_t apex);

/// q_ij = (g_{i,apex}^2 + g_{j,apex}^2 - g_ij^2) / 2 over the non-apex vertices.
GramMatrix euclidean_gram(const EdgeLengths &e, std::size_t apex);

/// Inner products of the vertex vectors in the radius-1/sqrt|k| model:
/// cos(sqrt(k) g)/k for k > 0, cosh(sqrt(-k) g)/k for k < 0. For k = -1 this
/// is -cosh(g), for k = 1 it is cos(g). Throws WrongModel for k == 0.
GramMatrix curved_gram(const EdgeLengths &e, Curvature c);

/// Gram matrix of the flat hull simplex spanned by the vertex vectors, under
/// the ambient form, with the given apex. Not necessarily positive definite
/// for hyperbolic simplices.
GramMatrix hull_gram(const GramMatrix &curved, std::size_t apex);

/// x^T Q y for a CurvedFull Gram matrix.
double hull_inner_product(const GramMatrix &q, std::span<const double> x,
                          std::span<const double> y);
double hull_inner_product(const GramMatrix &q, const BarycentricPoint &x,
                          const BarycentricPoint &y);

/// Radial projection of a hull point onto the model surface <x, x> = 1/k.
/// Throws OutsideLightCone (k < 0) or DegenerateDirection (k > 0) when the
/// hull point cannot be lifted.
HullVector lift_to_model(const GramMatrix &q, std::span<const double> x);
HullVector lift_to_model(const GramMatrix &q, const BarycentricPoint &x);

}  // namespace simplexgeom

#endif  // SIMPLEXGEOM_SIMPLEX_HPP_
