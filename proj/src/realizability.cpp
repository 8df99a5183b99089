//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "simplexgeom/realizability.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace simplexgeom {

namespace {

RealizabilityReport classify(const SymMatrix &gram, Signature target, double tol,
                             std::string_view model) {
  RealizabilityReport report;
  report.eigenvalues = eigenvalues(gram);
  report.signature = signature_of(report.eigenvalues, tol);
  const Signature &s = report.signature;

  std::ostringstream detail;
  if (s == target) {
    report.verdict = Verdict::Realizable;
    detail << "Gram matrix has signature " << s << " as required for a "
           << model << " simplex";
  } else if (s.n_zero > 0 && s.n_plus <= target.n_plus &&
             s.n_minus <= target.n_minus) {
    report.verdict = Verdict::Degenerate;
    detail << "Gram matrix has " << s.n_zero
           << " vanishing eigenvalue(s); the edge lengths describe a flattened "
           << model << " simplex";
  } else {
    report.verdict = Verdict::NotRealizable;
    detail << "Gram matrix has signature " << s << ", expected " << target;
  }
  report.detail = detail.str();
  return report;
}

}  // namespace

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Realizable: return "Realizable";
    case Verdict::Degenerate: return "Degenerate";
    case Verdict::NotRealizable: return "NotRealizable";
  }
  return "Unknown";
}

RealizabilityReport check_euclidean(const EdgeLengths &e, double tol) {
  const std::size_t n = e.n();
  const GramMatrix q = euclidean_gram(e, n + 1);
  return classify(q.matrix, {n, 0, 0}, tol, "euclidean");
}

RealizabilityReport check_hyperbolic(const EdgeLengths &e, double tol) {
  const std::size_t n = e.n();
  const GramMatrix q = curved_gram(e, Curvature::hyperbolic());
  return classify(q.matrix, {n, 1, 0}, tol, "hyperbolic");
}

RealizabilityReport check_spherical(const EdgeLengths &e, double tol) {
  const std::size_t n = e.n();
  const GramMatrix q = curved_gram(e, Curvature::spherical());
  RealizabilityReport report = classify(q.matrix, {n + 1, 0, 0}, tol, "spherical");
  if (e.max_length() >= std::numbers::pi / 2) {
    report.verdict = Verdict::NotRealizable;
    report.detail = "edge ≥ π/2";
  }
  return report;
}

RealizabilityReport check(const EdgeLengths &e, Curvature c, double tol) {
  switch (c.classification()) {
    case CurvatureClass::Euclidean: return check_euclidean(e, tol);
    case CurvatureClass::Hyperbolic: return check_hyperbolic(e, tol);
    case CurvatureClass::Spherical: return check_spherical(e, tol);
    case CurvatureClass::General: break;
  }
  const EdgeLengths unit = e.scaled(std::sqrt(std::abs(c.kappa)));
  return c.kappa < 0 ? check_hyperbolic(unit, tol) : check_spherical(unit, tol);
}

}  // namespace simplexgeom
