//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SIMPLEXGEOM_CLI_HPP_
#define SIMPLEXGEOM_CLI_HPP_

#include <iosfwd>
#include <optional>
#include <string_view>

#include "simplexgeom/simplex.hpp"

namespace simplexgeom::cli {

/// Process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kInputError = 2,
  kGeometricFailure = 3,
  kNumericalFailure = 4,
};

/// "euclidean", "hyperbolic", "spherical" or "kappa=<value>".
std::optional<Curvature> parse_geometry(std::string_view text);

/// Runs the command line `argv[0] <subcommand> ...`, writing results to `out`
/// and diagnostics to `err`. Returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace simplexgeom::cli

#endif  // SIMPLEXGEOM_CLI_HPP_
