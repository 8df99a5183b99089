//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SIMPLEXGEOM_TESTS_WORKED_HPP_
#define SIMPLEXGEOM_TESTS_WORKED_HPP_

#include <vector>

#include "simplexgeom/simplex.hpp"

namespace simplexgeom::testing {

// The reference 3-simplex: a 3-4-5 right triangle (vertices 2,3,4) under an
// apex at distances 2, 3, 4.
inline EdgeLengths worked_edges() {
  return EdgeLengths{{0, 2, 3, 4}, {2, 0, 4, 5}, {3, 4, 0, 3}, {4, 5, 3, 0}};
}

inline BarycentricPoint worked_p() { return BarycentricPoint{0.25, 0.25, 0.25, 0.25}; }
inline BarycentricPoint worked_q() {
  return BarycentricPoint{1.0 / 3, 1.0 / 3, 1.0 / 3, 0.0};
}

inline std::vector<std::vector<double>> to_rows(const SymMatrix &m) {
  std::vector<std::vector<double>> rows(m.dim(), std::vector<double>(m.dim()));
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = 0; j < m.dim(); ++j) rows[i][j] = m(i, j);
  return rows;
}

}  // namespace simplexgeom::testing

#endif  // SIMPLEXGEOM_TESTS_WORKED_HPP_
