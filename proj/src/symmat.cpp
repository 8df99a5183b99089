//
// Project simplexgeom - Copyright 2026 The simplexgeom Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "simplexgeom/symmat.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <utility>

#include "simplexgeom/error.hpp"

namespace simplexgeom {

SymMatrix::SymMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim, 0.0) {
  if (dim == 0) {
    throw GeometryError(ErrorKind::InvalidInput, "matrix dimension must be >= 1");
  }
}

SymMatrix::SymMatrix(std::initializer_list<std::initializer_list<double>> rows)
    : SymMatrix(rows.size()) {
  std::size_t i = 0;
  for (const auto &row : rows) {
    if (row.size() != dim_) {
      throw GeometryError(ErrorKind::InvalidInput, "matrix is not square");
    }
    std::size_t j = 0;
    for (double v : row) entries_[i * dim_ + j++] = v;
    ++i;
  }
  for (i = 0; i < dim_; ++i) {
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const double avg = 0.5 * (entries_[i * dim_ + j] + entries_[j * dim_ + i]);
      entries_[i * dim_ + j] = entries_[j * dim_ + i] = avg;
    }
  }
}

SymMatrix::SymMatrix(const Eigen::MatrixXd &m)
    : SymMatrix(static_cast<std::size_t>(m.rows())) {
  if (m.rows() != m.cols()) {
    throw GeometryError(ErrorKind::InvalidInput, "matrix is not square");
  }
  for (std::size_t i = 0; i < dim_; ++i) {
    entries_[i * dim_ + i] = m(i, i);
    for (std::size_t j = i + 1; j < dim_; ++j) {
      const double avg = 0.5 * (m(i, j) + m(j, i));
      entries_[i * dim_ + j] = entries_[j * dim_ + i] = avg;
    }
  }
}

SymMatrix SymMatrix::identity(std::size_t dim) {
  SymMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.entries_[i * dim + i] = 1.0;
  return m;
}

SymMatrix SymMatrix::diagonal(std::span<const double> values) {
  SymMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    m.entries_[i * m.dim_ + i] = values[i];
  }
  return m;
}

void SymMatrix::set(std::size_t row, std::size_t col, double value) {
  entries_[row * dim_ + col] = value;
  entries_[col * dim_ + row] = value;
}

Eigen::MatrixXd SymMatrix::to_eigen() const {
  Eigen::MatrixXd m(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    for (std::size_t j = 0; j < dim_; ++j) m(i, j) = entries_[i * dim_ + j];
  }
  return m;
}

double SymMatrix::bilinear(std::span<const double> x,
                           std::span<const double> y) const {
  if (x.size() != dim_ || y.size() != dim_) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "vector length does not match matrix dimension");
  }
  // Pairing (i,j) with (j,i) makes the result exactly symmetric in x and y.
  double sum = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) {
    double row = entries_[i * dim_ + i] * (x[i] * y[i]);
    for (std::size_t j = i + 1; j < dim_; ++j) {
      row += entries_[i * dim_ + j] * (x[i] * y[j] + x[j] * y[i]);
    }
    sum += row;
  }
  return sum;
}

SymMatrix SymMatrix::principal_submatrix(std::span<const std::size_t> keep) const {
  SymMatrix sub(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      sub.entries_[i * sub.dim_ + j] = (*this)(keep[i], keep[j]);
    }
  }
  return sub;
}

SymMatrix SymMatrix::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != dim_) {
    throw GeometryError(ErrorKind::InvalidInput, "permutation has wrong length");
  }
  return principal_submatrix(perm);
}

std::ostream &operator<<(std::ostream &os, const SymMatrix &m) {
  os << '[';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

std::ostream &operator<<(std::ostream &os, const Signature &s) {
  return os << '(' << s.n_plus << ',' << s.n_minus << ',' << s.n_zero << ')';
}

double determinant(const Eigen::MatrixXd &m) {
  switch (m.rows()) {
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    case 3:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    default:
      return m.partialPivLu().determinant();
  }
}

double determinant(const SymMatrix &m) { return determinant(m.to_eigen()); }

double minor(const SymMatrix &m, std::size_t i, std::size_t j) {
  const std::size_t n = m.dim();
  if (n == 1) {
    throw GeometryError(ErrorKind::DegenerateMinor, "minor of a 1x1 matrix");
  }
  if (i < 1 || i > n || j < 1 || j > n) {
    throw GeometryError(ErrorKind::InvalidInput,
                        "minor index out of range (indices are 1-based)");
  }
  // M_ji is the determinant of the transposed submatrix; always build the
  // i <= j one so that minor(m, i, j) == minor(m, j, i) exactly.
  if (j < i) std::swap(i, j);
  Eigen::MatrixXd sub(n - 1, n - 1);
  for (std::size_t r = 0, sr = 0; r < n; ++r) {
    if (r == i - 1) continue;
    for (std::size_t c = 0, sc = 0; c < n; ++c) {
      if (c == j - 1) continue;
      sub(sr, sc++) = m(r, c);
    }
    ++sr;
  }
  return determinant(sub);
}

std::vector<double> eigenvalues(const SymMatrix &m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.to_eigen(),
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw GeometryError(ErrorKind::InternalInconsistency,
                        "symmetric eigensolver did not converge");
  }
  const auto &ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

Signature signature_of(std::span<const double> eigenvalues, double tol) {
  double largest = 0.0;
  for (double v : eigenvalues) largest = std::max(largest, std::abs(v));
  const double threshold = tol * std::max(1.0, largest);
  Signature s;
  for (double v : eigenvalues) {
    if (std::abs(v) <= threshold) {
      ++s.n_zero;
    } else if (v > 0) {
      ++s.n_plus;
    } else {
      ++s.n_minus;
    }
  }
  return s;
}

Signature signature(const SymMatrix &m, double tol) {
  const auto ev = eigenvalues(m);
  return signature_of(ev, tol);
}

bool is_positive_definite(const SymMatrix &m, double tol) {
  return signature(m, tol) == Signature{m.dim(), 0, 0};
}

std::vector<double> solve_first_complement(const SymMatrix &m) {
  const std::size_t n = m.dim();
  std::vector<double> x(n, 0.0);
  x[0] = 1.0;
  if (n == 1) return x;

  const Eigen::MatrixXd full = m.to_eigen();
  const Eigen::MatrixXd block = full.bottomRightCorner(n - 1, n - 1);
  const Eigen::VectorXd rhs = -full.col(0).tail(n - 1);
  Eigen::FullPivLU<Eigen::MatrixXd> lu(block);
  if (!lu.isInvertible()) {
    throw GeometryError(ErrorKind::SingularFace,
                        "trailing principal block is singular");
  }
  const Eigen::VectorXd tail = lu.solve(rhs);
  for (std::size_t i = 1; i < n; ++i) x[i] = tail(i - 1);
  return x;
}

}  // namespace simplexgeom
