//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include <iostream>

#include "simplexgeom/cli.hpp"

int main(int argc, char **argv) {
  return simplexgeom::cli::run(argc, argv, std::cout, std::cerr);
}
