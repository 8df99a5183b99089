//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SIMPLEXGEOM_REALIZABILITY_HPP_
#define SIMPLEXGEOM_REALIZABILITY_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "simplexgeom/simplex.hpp"
#include "simplexgeom/symmat.hpp"

namespace simplexgeom {

enum class Verdict { Realizable, Degenerate, NotRealizable };

std::string_view to_string(Verdict v) noexcept;

/// Outcome of testing edge lengths against a model space.
///
/// Realizable: the tested Gram matrix has exactly the target signature.
/// Degenerate: some eigenvalues vanish but no sign count exceeds the target,
/// i.e. the edge lengths are consistent with a flattened simplex.
/// NotRealizable: anything else.
struct RealizabilityReport {
  Verdict verdict = Verdict::NotRealizable;
  Signature signature;
  std::vector<double> eigenvalues;
  std::string detail;
};

/// Positive definiteness of the apex-(n+1) Gram matrix.
RealizabilityReport check_euclidean(const EdgeLengths &e,
                                    double tol = kDefaultTolerance);

/// Signature (n, 1) of the -cosh Gram matrix.
RealizabilityReport check_hyperbolic(const EdgeLengths &e,
                                     double tol = kDefaultTolerance);

/// Requires every edge below pi/2, then positive definiteness of the cos Gram
/// matrix. Edges at or above pi/2 are reported NotRealizable outright.
RealizabilityReport check_spherical(const EdgeLengths &e,
                                    double tol = kDefaultTolerance);

/// Dispatch on the curvature class; general curvature is rescaled to +-1.
RealizabilityReport check(const EdgeLengths &e, Curvature c,
                          double tol = kDefaultTolerance);

}  // namespace simplexgeom

#endif  // SIMPLEXGEOM_REALIZABILITY_HPP_
