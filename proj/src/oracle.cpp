//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "simplexgeom/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include <boost/math/tools/minima.hpp>

#include "simplexgeom/error.hpp"
#include "simplexgeom/realizability.hpp"

namespace simplexgeom::oracle {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Embedding embed_euclidean(const EdgeLengths &e) {
  const std::size_t n = e.n();
  const GramMatrix q = euclidean_gram(e, n + 1);
  Eigen::LLT<Eigen::MatrixXd> llt(q.matrix.to_eigen());
  if (llt.info() != Eigen::Success) {
    throw GeometryError(ErrorKind::InternalInconsistency,
                        "Cholesky factorization failed on a realizable Euclidean simplex");
  }
  const Eigen::MatrixXd l = llt.matrixL();
  Embedding emb{Model::EuclideanSpace, Curvature::euclidean(), {}};
  for (std::size_t i = 0; i < n; ++i) {
    emb.vertices.emplace_back(n, 0.0);
    for (std::size_t k = 0; k < n; ++k) emb.vertices.back()[k] = l(i, k);
  }
  emb.vertices.emplace_back(n, 0.0);
  return emb;
}

Embedding embed_sphere(const EdgeLengths &e, Curvature c) {
  const GramMatrix q = curved_gram(e, c);
  const std::size_t count = e.vertex_count();
  Eigen::LLT<Eigen::MatrixXd> llt(q.matrix.to_eigen());
  if (llt.info() != Eigen::Success) {
    throw GeometryError(ErrorKind::InternalInconsistency,
                        "Cholesky factorization failed on a realizable spherical simplex");
  }
  const Eigen::MatrixXd l = llt.matrixL();
  Embedding emb{Model::SphereInEuclidean, c, {}};
  for (std::size_t i = 0; i < count; ++i) {
    emb.vertices.emplace_back(count, 0.0);
    for (std::size_t k = 0; k < count; ++k) emb.vertices.back()[k] = l(i, k);
  }
  return emb;
}

Embedding embed_minkowski(const EdgeLengths &e, Curvature c) {
  const GramMatrix q = curved_gram(e, c);
  const std::size_t count = e.vertex_count();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(q.matrix.to_eigen());
  if (solver.info() != Eigen::Success) {
    throw GeometryError(ErrorKind::InternalInconsistency, "eigensolver failed");
  }
  const Eigen::VectorXd &lambda = solver.eigenvalues();
  const Eigen::MatrixXd &v = solver.eigenvectors();
  // Ascending order: the single negative eigenvalue comes first and becomes
  // the time axis (last ambient coordinate).
  if (!(lambda(0) < 0.0) || (count > 1 && !(lambda(1) > 0.0))) {
    throw GeometryError(ErrorKind::InternalInconsistency,
                        "Gram matrix of a realizable hyperbolic simplex lacks signature (n,1)");
  }
  Embedding emb{Model::MinkowskiSpace, c, {}};
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> x(count);
    for (std::size_t k = 1; k < count; ++k) x[k - 1] = v(i, k) * std::sqrt(lambda(k));
    x[count - 1] = v(i, 0) * std::sqrt(-lambda(0));
    emb.vertices.push_back(std::move(x));
  }
  std::size_t negative = 0;
  for (const auto &x : emb.vertices) negative += x.back() < 0.0 ? 1 : 0;
  if (negative != 0 && negative != count) {
    throw GeometryError(ErrorKind::InternalInconsistency,
                        "vertices were placed on both sheets of the hyperboloid");
  }
  if (negative == count) {
    for (auto &x : emb.vertices) x.back() = -x.back();
  }
  return emb;
}

// Enumerates all compositions of `total` into `parts` non-negative integers.
void for_each_composition(std::size_t parts, std::size_t total,
                          const std::function<void(const std::vector<std::size_t> &)> &fn) {
  std::vector<std::size_t> c(parts, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t left) {
    if (idx + 1 == parts) {
      c[idx] = left;
      fn(c);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      c[idx] = k;
      rec(idx + 1, left - k);
    }
  };
  rec(0, total);
}

double grid_size(std::size_t parts, std::size_t resolution) {
  // C(resolution + parts - 1, parts - 1)
  double count = 1.0;
  for (std::size_t k = 1; k < parts; ++k) {
    count *= static_cast<double>(resolution + k) / static_cast<double>(k);
  }
  return count;
}

}  // namespace

std::string_view to_string(Model m) noexcept {
  switch (m) {
    case Model::EuclideanSpace: return "euclidean";
    case Model::MinkowskiSpace: return "minkowski";
    case Model::SphereInEuclidean: return "sphere";
  }
  return "unknown";
}

double ambient_inner(const Embedding &emb, std::span<const double> a,
                     std::span<const double> b) {
  double s = dot(a, b);
  if (emb.model == Model::MinkowskiSpace) s -= 2.0 * a.back() * b.back();
  return s;
}

double model_distance(const Embedding &emb, std::span<const double> a,
                      std::span<const double> b) {
  switch (emb.model) {
    case Model::EuclideanSpace: {
      double s = 0.0;
      for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
      return std::sqrt(s);
    }
    case Model::MinkowskiSpace: {
      const double r = emb.curvature.radius();
      return r * std::acosh(std::max(1.0, -ambient_inner(emb, a, b) / (r * r)));
    }
    case Model::SphereInEuclidean: {
      const double r = emb.curvature.radius();
      return r * std::acos(std::clamp(dot(a, b) / (r * r), -1.0, 1.0));
    }
  }
  return std::numeric_limits<double>::quiet_NaN();
}

Embedding embed(const EdgeLengths &e, Curvature c, double tol) {
  const RealizabilityReport report = check(e, c, tol);
  if (report.verdict != Verdict::Realizable) {
    throw GeometryError(ErrorKind::NotRealizableInput,
                        std::string(to_string(report.verdict)) + ": " + report.detail);
  }
  if (c.kappa == 0.0) return embed_euclidean(e);
  if (c.kappa > 0.0) return embed_sphere(e, c);
  return embed_minkowski(e, c);
}

double max_edge_error(const Embedding &emb, const EdgeLengths &e) {
  double worst = 0.0;
  for (std::size_t i = 0; i < e.vertex_count(); ++i) {
    for (std::size_t j = i + 1; j < e.vertex_count(); ++j) {
      const double d = model_distance(emb, emb.vertices[i], emb.vertices[j]);
      worst = std::max(worst, std::abs(d - e(i, j)));
    }
  }
  return worst;
}

std::vector<double> hull_point(const Embedding &emb, std::span<const double> coeffs) {
  if (coeffs.size() != emb.vertices.size()) {
    throw GeometryError(ErrorKind::InvalidInput, "coefficient count does not match vertices");
  }
  std::vector<double> p(emb.ambient_dim(), 0.0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    for (std::size_t k = 0; k < p.size(); ++k) p[k] += coeffs[i] * emb.vertices[i][k];
  }
  return p;
}

std::vector<double> lift(const Embedding &emb, std::span<const double> point) {
  std::vector<double> out(point.begin(), point.end());
  if (emb.model == Model::EuclideanSpace) return out;
  const double r = emb.curvature.radius();
  const double norm2 = ambient_inner(emb, point, point);
  if (emb.model == Model::MinkowskiSpace) {
    if (!(norm2 < 0.0) || !(point.back() > 0.0)) {
      throw GeometryError(ErrorKind::OutsideLightCone,
                          "hull point is not in the future light cone");
    }
  } else if (!(norm2 > 0.0)) {
    throw GeometryError(ErrorKind::DegenerateDirection, "hull point is the origin");
  }
  const double scale = r / std::sqrt(std::abs(norm2));
  for (double &v : out) v *= scale;
  return out;
}

double brute_distance(const Embedding &emb, const BarycentricPoint &x,
                      const BarycentricPoint &y) {
  const auto px = lift(emb, hull_point(emb, x.coords()));
  const auto py = lift(emb, hull_point(emb, y.coords()));
  return model_distance(emb, px, py);
}

BarycentricPoint brute_project(const Embedding &emb, std::size_t vertex,
                               const BruteProjectOptions &options) {
  const std::size_t count = emb.vertices.size();
  if (vertex < 1 || vertex > count || count < 2) {
    throw GeometryError(ErrorKind::InvalidInput, "vertex out of range");
  }
  const std::span<const double> apex = emb.vertices[vertex - 1];
  const auto face = vertices_without(count, vertex);
  const std::size_t parts = face.size();

  // Monotone surrogates of the model distance from the apex to the lifted
  // hull point; cheaper and better conditioned near the minimum than the
  // distance itself.
  std::vector<double> coeffs(count, 0.0);
  auto objective = [&](std::span<const double> alpha) {
    for (std::size_t k = 0; k < parts; ++k) coeffs[face[k]] = alpha[k];
    const auto p = hull_point(emb, coeffs);
    switch (emb.model) {
      case Model::EuclideanSpace: {
        double s = 0.0;
        for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] - apex[i]) * (p[i] - apex[i]);
        return s;
      }
      case Model::MinkowskiSpace: {
        const double pp = ambient_inner(emb, p, p);
        if (!(pp < 0.0)) return std::numeric_limits<double>::infinity();
        return -ambient_inner(emb, apex, p) / std::sqrt(-pp);
      }
      case Model::SphereInEuclidean: {
        const double pp = dot(p, p);
        if (!(pp > 0.0)) return std::numeric_limits<double>::infinity();
        return -dot(apex, p) / std::sqrt(pp);
      }
    }
    return std::numeric_limits<double>::infinity();
  };

  std::size_t resolution = std::max<std::size_t>(options.resolution, 1);
  while (resolution > 1 &&
         grid_size(parts, resolution) > static_cast<double>(options.max_grid_points)) {
    --resolution;
  }

  std::vector<double> best(parts, 0.0);
  double best_value = std::numeric_limits<double>::infinity();
  std::vector<double> alpha(parts);
  for_each_composition(parts, resolution, [&](const std::vector<std::size_t> &c) {
    for (std::size_t k = 0; k < parts; ++k) {
      alpha[k] = static_cast<double>(c[k]) / static_cast<double>(resolution);
    }
    const double v = objective(alpha);
    if (v < best_value) {
      best_value = v;
      best = alpha;
    }
  });

  if (parts > 1) {
    constexpr int kBits = std::numeric_limits<double>::digits / 2;
    double window = 1.0 / static_cast<double>(resolution);
    for (std::size_t sweep = 0; sweep < options.max_sweeps; ++sweep) {
      double largest_move = 0.0;
      for (std::size_t i = 0; i < parts; ++i) {
        for (std::size_t j = i + 1; j < parts; ++j) {
          // Move mass t from coordinate j to coordinate i.
          const double lo = std::max(-best[i], -2.0 * window);
          const double hi = std::min(best[j], 2.0 * window);
          if (!(hi > lo)) continue;
          std::vector<double> trial = best;
          auto along = [&](double t) {
            trial[i] = best[i] + t;
            trial[j] = best[j] - t;
            return objective(trial);
          };
          std::uintmax_t iters = 200;
          const auto [t, value] =
              boost::math::tools::brent_find_minima(along, lo, hi, kBits, iters);
          if (value < best_value) {
            best_value = value;
            best[i] += t;
            best[j] -= t;
            best[i] = std::max(best[i], 0.0);
            best[j] = std::max(best[j], 0.0);
            largest_move = std::max(largest_move, std::abs(t));
          }
        }
      }
      if (largest_move < 1e-14) break;
      window = std::max(largest_move, 1e-12);
    }
  }

  for (std::size_t k = 0; k < count; ++k) coeffs[k] = 0.0;
  double sum = 0.0;
  for (double a : best) sum += a;
  for (std::size_t k = 0; k < parts; ++k) coeffs[face[k]] = best[k] / sum;
  return BarycentricPoint(coeffs);
}

}  // namespace simplexgeom::oracle
