//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SIMPLEXGEOM_SYMMAT_HPP_
#define SIMPLEXGEOM_SYMMAT_HPP_

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace simplexgeom {

/// Relative zero threshold for eigenvalue classification, scaled by the
/// largest absolute eigenvalue (floored at 1).
inline constexpr double kDefaultTolerance = 1e-9;

/// Dense symmetric matrix of small dimension.
///
/// Storage is row-major and 0-based; `operator()` follows that convention.
/// The kernel functions below that take row/column numbers (`minor`) use
/// 1-based numbering so call sites read like the cofactor formulas they
/// implement. Construction symmetrizes the input: entry (i,j) and (j,i)
/// both become the average of the two supplied values.
class SymMatrix {
public:
  explicit SymMatrix(std::size_t dim);
  SymMatrix(std::initializer_list<std::initializer_list<double>> rows);
  explicit SymMatrix(const Eigen::MatrixXd &m);

  static SymMatrix identity(std::size_t dim);
  static SymMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }

  double operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dim_ + col];
  }

  /// Writes both (row,col) and (col,row).
  void set(std::size_t row, std::size_t col, double value);

  Eigen::MatrixXd to_eigen() const;

  /// x^T M y.
  double bilinear(std::span<const double> x, std::span<const double> y) const;

  /// Rows/columns `keep` (0-based, in the given order).
  SymMatrix principal_submatrix(std::span<const std::size_t> keep) const;

  /// Simultaneous row/column permutation: result(i,j) = M(perm[i], perm[j]).
  SymMatrix permuted(std::span<const std::size_t> perm) const;

  bool operator==(const SymMatrix &) const = default;

private:
  std::size_t dim_;
  std::vector<double> entries_;
};

std::ostream &operator<<(std::ostream &os, const SymMatrix &m);

struct Signature {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  bool operator==(const Signature &) const = default;
};

std::ostream &operator<<(std::ostream &os, const Signature &s);

/// Determinant of a general square matrix. Closed form up to 3x3, partial
/// pivoting LU above.
double determinant(const Eigen::MatrixXd &m);
double determinant(const SymMatrix &m);

/// Determinant of `m` with row i and column j removed (1-based).
/// Throws DegenerateMinor for a 1x1 matrix.
double minor(const SymMatrix &m, std::size_t i, std::size_t j);

/// Ascending eigenvalues.
std::vector<double> eigenvalues(const SymMatrix &m);

Signature signature(const SymMatrix &m, double tol = kDefaultTolerance);
Signature signature_of(std::span<const double> eigenvalues,
                       double tol = kDefaultTolerance);

bool is_positive_definite(const SymMatrix &m, double tol = kDefaultTolerance);

/// Solves for the vector x with x_1 = 1 and (m x)_i = 0 for i >= 2.
/// Throws SingularFace when the trailing principal block is singular.
std::vector<double> solve_first_complement(const SymMatrix &m);

}  // namespace simplexgeom

#endif  // SIMPLEXGEOM_SYMMAT_HPP_
