//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "simplexgeom/symmat.hpp"

namespace simplexgeom::testing {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double minkowski(std::span<const double> a, std::span<const double> b) {
  const std::size_t t = a.size() - 1;
  return dot(a.first(t), b.first(t)) - a[t] * b[t];
}

std::vector<double> gaussian(Rng &rng, std::size_t dim, double scale) {
  std::normal_distribution<double> normal(0.0, scale);
  std::vector<double> v(dim);
  for (double &x : v) x = normal(rng);
  return v;
}

// Ratio of the smallest to the largest |eigenvalue|.
double conditioning(const SymMatrix &m) {
  const auto ev = eigenvalues(m);
  double lo = INFINITY, hi = 0.0;
  for (double l : ev) {
    lo = std::min(lo, std::abs(l));
    hi = std::max(hi, std::abs(l));
  }
  return hi > 0.0 ? lo / hi : 0.0;
}

std::vector<std::vector<double>> pairwise(const std::vector<std::vector<double>> &pts,
                                          double kappa) {
  const std::size_t m = pts.size();
  std::vector<std::vector<double>> g(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      g[i][j] = g[j][i] = model_distance(kappa, pts[i], pts[j]);
    }
  }
  return g;
}

}  // namespace

double model_distance(double kappa, std::span<const double> a, std::span<const double> b) {
  std::vector<double> diff(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) diff[i] = a[i] - b[i];
  if (kappa == 0.0) return std::sqrt(dot(diff, diff));
  // Chord forms: |a-b|^2 = 2cosh d - 2 (hyperboloid), 2 - 2cos d (sphere).
  // Both stay accurate for short distances, unlike arccosh/arccos.
  if (kappa < 0.0) return 2.0 * std::asinh(std::sqrt(std::max(0.0, minkowski(diff, diff))) / 2.0);
  return 2.0 * std::asin(std::min(1.0, std::sqrt(dot(diff, diff)) / 2.0));
}

Sample random_euclidean(Rng &rng, std::size_t n) {
  std::uniform_real_distribution<double> scale(0.5, 3.0);
  for (;;) {
    const double s = scale(rng);
    std::vector<std::vector<double>> pts;
    for (std::size_t i = 0; i <= n; ++i) pts.push_back(gaussian(rng, n, s));
    EdgeLengths e(pairwise(pts, 0.0));
    if (conditioning(euclidean_gram(e, n + 1).matrix) < 1e-3) continue;
    return {e, Curvature::euclidean(), pts};
  }
}

Sample random_hyperbolic(Rng &rng, std::size_t n) {
  std::uniform_real_distribution<double> scale(0.2, 1.2);
  for (;;) {
    const double s = scale(rng);
    std::vector<std::vector<double>> pts;
    for (std::size_t i = 0; i <= n; ++i) {
      auto x = gaussian(rng, n, s);
      x.push_back(std::sqrt(1.0 + dot(x, x)));
      pts.push_back(std::move(x));
    }
    EdgeLengths e(pairwise(pts, -1.0));
    if (conditioning(curved_gram(e, Curvature::hyperbolic()).matrix) < 1e-4) continue;
    if (conditioning(hull_gram(curved_gram(e, Curvature::hyperbolic()), n + 1).matrix) < 1e-3)
      continue;
    return {e, Curvature::hyperbolic(), pts};
  }
}

Sample random_spherical(Rng &rng, std::size_t n) {
  std::uniform_real_distribution<double> scale(0.2, 0.5);
  for (;;) {
    const double s = scale(rng);
    std::vector<std::vector<double>> pts;
    for (std::size_t i = 0; i <= n; ++i) {
      auto x = gaussian(rng, n + 1, s);
      x[n] += 1.0;
      const double r = std::sqrt(dot(x, x));
      for (double &c : x) c /= r;
      pts.push_back(std::move(x));
    }
    const auto g = pairwise(pts, 1.0);
    bool short_edges = true;
    for (const auto &row : g)
      for (double v : row) short_edges = short_edges && v < std::numbers::pi / 2 - 1e-3;
    if (!short_edges) continue;
    EdgeLengths e(g);
    if (conditioning(curved_gram(e, Curvature::spherical()).matrix) < 1e-4) continue;
    if (conditioning(hull_gram(curved_gram(e, Curvature::spherical()), n + 1).matrix) < 1e-3)
      continue;
    return {e, Curvature::spherical(), pts};
  }
}

std::vector<Sample> corpus(double kappa, std::size_t count, std::uint64_t seed,
                           std::size_t n_min, std::size_t n_max) {
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> dim(n_min, n_max);
  std::vector<Sample> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t n = dim(rng);
    if (kappa == 0.0) out.push_back(random_euclidean(rng, n));
    else if (kappa < 0.0) out.push_back(random_hyperbolic(rng, n));
    else out.push_back(random_spherical(rng, n));
  }
  return out;
}

BarycentricPoint random_interior(Rng &rng, std::size_t count) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> w(count);
  double sum = 0.0;
  for (double &x : w) sum += (x = expo(rng) + 1e-3);
  for (double &x : w) x /= sum;
  return BarycentricPoint(std::move(w));
}

std::vector<double> model_point(const Sample &s, std::span<const double> coeffs) {
  std::vector<double> h(s.points.front().size(), 0.0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t k = 0; k < h.size(); ++k) h[k] += coeffs[i] * s.points[i][k];
  if (s.curvature.kappa == 0.0) return h;
  const double norm = s.curvature.kappa < 0.0 ? std::sqrt(-minkowski(h, h)) : std::sqrt(dot(h, h));
  for (double &c : h) c /= norm;
  return h;
}

double coordinate_distance(const Sample &s, const BarycentricPoint &x,
                           const BarycentricPoint &y) {
  return model_distance(s.curvature.kappa, model_point(s, x.coords()),
                        model_point(s, y.coords()));
}

double laplace_determinant(const std::vector<std::vector<double>> &m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  double det = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<double>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<double> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    det += (j % 2 == 0 ? 1.0 : -1.0) * m[0][j] * laplace_determinant(sub);
  }
  return det;
}

std::vector<double> jacobi_eigenvalues(std::vector<std::vector<double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a[p][q] == 0.0) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace simplexgeom::testing
