//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "simplexgeom/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "simplexgeom/error.hpp"

namespace simplexgeom {

namespace {

constexpr double kSumRejectBand = 1e-6;
constexpr double kSymmetryBand = 1e-12;

std::string entry_name(std::size_t i, std::size_t j) {
  return "edge_lengths[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

}  // namespace

EdgeLengths::EdgeLengths(std::size_t count, std::vector<double> gamma)
    : count_(count), gamma_(std::move(gamma)) {
  validate();
}

EdgeLengths::EdgeLengths(std::initializer_list<std::initializer_list<double>> rows)
    : EdgeLengths(std::vector<std::vector<double>>(rows.begin(), rows.end())) {}

EdgeLengths::EdgeLengths(const std::vector<std::vector<double>> &rows)
    : count_(rows.size()) {
  if (count_ < 2) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "a simplex needs at least two vertices");
  }
  gamma_.resize(count_ * count_);
  for (std::size_t i = 0; i < count_; ++i) {
    if (rows[i].size() != count_) {
      throw GeometryError(ErrorKind::InvalidInput,
                          "edge_lengths row " + std::to_string(i) + " has " +
                              std::to_string(rows[i].size()) + " entries, expected " +
                              std::to_string(count_));
    }
    std::copy(rows[i].begin(), rows[i].end(), gamma_.begin() + i * count_);
  }
  for (std::size_t i = 0; i < count_; ++i) {
    for (std::size_t j = i + 1; j < count_; ++j) {
      const double a = gamma_[i * count_ + j];
      const double b = gamma_[j * count_ + i];
      if (std::abs(a - b) > kSymmetryBand * std::max(1.0, std::abs(a))) {
        throw GeometryError(ErrorKind::InvalidInput,
                            entry_name(i, j) + " != " + entry_name(j, i) +
                                " (matrix must be symmetric)");
      }
      gamma_[i * count_ + j] = gamma_[j * count_ + i] = 0.5 * (a + b);
    }
  }
  validate();
}

void EdgeLengths::validate() const {
  for (std::size_t i = 0; i < count_; ++i) {
    for (std::size_t j = 0; j < count_; ++j) {
      const double g = gamma_[i * count_ + j];
      if (!std::isfinite(g)) {
        throw GeometryError(ErrorKind::InvalidInput, entry_name(i, j) + " is not finite");
      }
      if (i == j && g != 0.0) {
        throw GeometryError(ErrorKind::InvalidInput,
                            entry_name(i, j) + " must be 0 (diagonal)");
      }
      if (i != j && !(g > 0.0)) {
        throw GeometryError(ErrorKind::InvalidInput,
                            entry_name(i, j) + " must be positive");
      }
    }
  }
}

double EdgeLengths::max_length() const {
  return *std::max_element(gamma_.begin(), gamma_.end());
}

EdgeLengths EdgeLengths::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor)) {
    throw GeometryError(ErrorKind::InvalidInput, "scale factor must be positive");
  }
  std::vector<double> g(gamma_);
  for (double &v : g) v *= factor;
  return EdgeLengths(count_, std::move(g));
}

EdgeLengths EdgeLengths::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != count_) {
    throw GeometryError(ErrorKind::InvalidInput, "permutation has wrong length");
  }
  std::vector<double> g(count_ * count_);
  for (std::size_t i = 0; i < count_; ++i) {
    for (std::size_t j = 0; j < count_; ++j) {
      g[i * count_ + j] = (*this)(perm[i], perm[j]);
    }
  }
  return EdgeLengths(count_, std::move(g));
}

EdgeLengths EdgeLengths::restricted(std::span<const std::size_t> vertices) const {
  const std::size_t m = vertices.size();
  if (m < 2) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "a sub-simplex needs at least two vertices");
  }
  std::vector<bool> seen(count_, false);
  for (std::size_t v : vertices) {
    if (v < 1 || v > count_ || seen[v - 1]) {
      throw GeometryError(ErrorKind::InvalidInput,
                          "sub-simplex vertices must be distinct and in 1.." +
                              std::to_string(count_));
    }
    seen[v - 1] = true;
  }
  std::vector<double> g(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      g[i * m + j] = (*this)(vertices[i] - 1, vertices[j] - 1);
    }
  }
  return EdgeLengths(m, std::move(g));
}

EdgeLengths EdgeLengths::face_opposite(std::size_t vertex) const {
  if (vertex < 1 || vertex > count_) {
    throw GeometryError(ErrorKind::InvalidInput, "vertex out of range");
  }
  std::vector<std::size_t> keep;
  for (std::size_t v = 1; v <= count_; ++v) {
    if (v != vertex) keep.push_back(v);
  }
  return restricted(keep);
}

std::vector<std::vector<double>> EdgeLengths::rows() const {
  std::vector<std::vector<double>> out(count_);
  for (std::size_t i = 0; i < count_; ++i) {
    out[i].assign(gamma_.begin() + i * count_, gamma_.begin() + (i + 1) * count_);
  }
  return out;
}

std::string_view to_string(CurvatureClass c) noexcept {
  switch (c) {
    case CurvatureClass::Euclidean: return "euclidean";
    case CurvatureClass::Hyperbolic: return "hyperbolic";
    case CurvatureClass::Spherical: return "spherical";
    case CurvatureClass::General: return "general";
  }
  return "unknown";
}

CurvatureClass Curvature::classification() const noexcept {
  if (kappa == 0.0) return CurvatureClass::Euclidean;
  if (kappa == -1.0) return CurvatureClass::Hyperbolic;
  if (kappa == 1.0) return CurvatureClass::Spherical;
  return CurvatureClass::General;
}

double Curvature::radius() const noexcept {
  if (kappa == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / std::sqrt(std::abs(kappa));
}

BarycentricPoint::BarycentricPoint(std::vector<double> coords)
    : coords_(std::move(coords)) {
  if (coords_.empty()) {
    throw GeometryError(ErrorKind::InvalidInput, "barycentric point has no coordinates");
  }
  for (double c : coords_) {
    if (!std::isfinite(c)) {
      throw GeometryError(ErrorKind::InvalidInput,
                          "barycentric coordinate is not finite");
    }
  }
  const double sum = std::accumulate(coords_.begin(), coords_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumRejectBand) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "barycentric coordinates sum to " + std::to_string(sum) +
                            ", expected 1");
  }
  if (sum != 1.0) {
    for (double &c : coords_) c /= sum;
  }
  outside_ = std::any_of(coords_.begin(), coords_.end(),
                         [](double c) { return c < 0.0; });
}

BarycentricPoint BarycentricPoint::vertex(std::size_t count, std::size_t index) {
  if (index < 1 || index > count) {
    throw GeometryError(ErrorKind::InvalidInput, "vertex out of range");
  }
  std::vector<double> c(count, 0.0);
  c[index - 1] = 1.0;
  return BarycentricPoint(std::move(c));
}

BarycentricPoint BarycentricPoint::centroid(std::size_t count) {
  return BarycentricPoint(std::vector<double>(count, 1.0 / static_cast<double>(count)));
}

std::vector<std::size_t> vertices_without(std::size_t count, std::size_t apex) {
  if (apex < 1 || apex > count) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "apex must be in 1.." + std::to_string(count));
  }
  std::vector<std::size_t> out;
  out.reserve(count - 1);
  for (std::size_t v = 0; v < count; ++v) {
    if (v != apex - 1) out.push_back(v);
  }
  return out;
}

GramMatrix euclidean_gram(const EdgeLengths &e, std::size_t apex) {
  const auto rows = vertices_without(e.vertex_count(), apex);
  const std::size_t a = apex - 1;
  SymMatrix q(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      const double gi = e(rows[i], a);
      const double gj = e(rows[j], a);
      const double gij = e(rows[i], rows[j]);
      q.set(i, j, 0.5 * (gi * gi + gj * gj - gij * gij));
    }
  }
  return {std::move(q), GramKind::EuclideanApex, apex, Curvature::euclidean()};
}

GramMatrix curved_gram(const EdgeLengths &e, Curvature c) {
  if (c.kappa == 0.0 || !std::isfinite(c.kappa)) {
    throw GeometryError(ErrorKind::WrongModel,
                        "curved_gram needs a non-zero curvature; use euclidean_gram");
  }
  const std::size_t count = e.vertex_count();
  SymMatrix q(count);
  const double root = std::sqrt(std::abs(c.kappa));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i; j < count; ++j) {
      double v;
      if (c.kappa == -1.0) {
        v = -std::cosh(e(i, j));
      } else if (c.kappa == 1.0) {
        v = std::cos(e(i, j));
      } else if (c.kappa > 0.0) {
        v = std::cos(root * e(i, j)) / c.kappa;
      } else {
        v = std::cosh(root * e(i, j)) / c.kappa;
      }
      q.set(i, j, v);
    }
  }
  return {std::move(q), GramKind::CurvedFull, 0, c};
}

namespace {

void require_curved(const GramMatrix &q, const char *what) {
  if (q.kind != GramKind::CurvedFull) {
    throw GeometryError(ErrorKind::WrongModel,
                        std::string(what) + " needs a full curved Gram matrix");
  }
}

}  // namespace

GramMatrix hull_gram(const GramMatrix &curved, std::size_t apex) {
  require_curved(curved, "hull_gram");
  const SymMatrix &m = curved.matrix;
  const auto rows = vertices_without(m.dim(), apex);
  const std::size_t a = apex - 1;
  SymMatrix q(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i; j < rows.size(); ++j) {
      q.set(i, j, m(rows[i], rows[j]) - m(rows[i], a) - m(rows[j], a) + m(a, a));
    }
  }
  return {std::move(q), GramKind::EuclideanApex, apex, Curvature::euclidean()};
}

double hull_inner_product(const GramMatrix &q, std::span<const double> x,
                          std::span<const double> y) {
  require_curved(q, "hull_inner_product");
  return q.matrix.bilinear(x, y);
}

double hull_inner_product(const GramMatrix &q, const BarycentricPoint &x,
                          const BarycentricPoint &y) {
  return hull_inner_product(q, x.coords(), y.coords());
}

HullVector lift_to_model(const GramMatrix &q, std::span<const double> x) {
  require_curved(q, "lift_to_model");
  const double kappa = q.curvature.kappa;
  const double xx = hull_inner_product(q, x, x);
  if (kappa < 0.0) {
    // Future cone: timelike and on the same side as the vertices.
    double with_first_vertex = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) with_first_vertex += q.matrix(0, j) * x[j];
    if (!(xx < 0.0) || !(with_first_vertex < 0.0)) {
      throw GeometryError(ErrorKind::OutsideLightCone,
                          "hull point is not inside the future light cone");
    }
  } else if (!(xx > 0.0)) {
    throw GeometryError(ErrorKind::DegenerateDirection,
                        "hull point has non-positive norm");
  }
  const double scale = 1.0 / std::sqrt(std::abs(kappa) * std::abs(xx));
  std::vector<double> out(x.begin(), x.end());
  for (double &v : out) v *= scale;
  return HullVector(std::move(out));
}

HullVector lift_to_model(const GramMatrix &q, const BarycentricPoint &x) {
  return lift_to_model(q, x.coords());
}

}  // namespace simplexgeom
