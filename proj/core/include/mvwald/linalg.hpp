#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "mvwald/errors.hpp"

namespace mvwald {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Size cap for kronecker() results (number of entries).
inline constexpr std::int64_t kKroneckerEntryCap = std::int64_t{1} << 24;

/// Kronecker product a (x) b. Entry ((i*b.rows+k),(j*b.cols+l)) = a(i,j)*b(k,l).
/// Throws DimensionError when the result would exceed kKroneckerEntryCap entries.
Matrix kronecker(const Matrix& a, const Matrix& b);

/// Centering projection P_n = I_n - J_n/n. Symmetric, idempotent, rank n-1.
Matrix centering_matrix(Index n);

/// Averaging matrix J_n/n (all entries 1/n). Symmetric, idempotent, rank 1.
Matrix averaging_matrix(Index n);

struct PseudoInverse {
  Matrix inverse;
  Index rank = 0;
};

/// Moore-Penrose pseudoinverse via SVD. Singular values at or below
/// tau = eps * max(rows, cols) * sigma_max are treated as zero;
/// rank is the number of singular values above tau.
PseudoInverse pseudo_inverse(const Matrix& m);

/// Numerical rank under the same threshold as pseudo_inverse.
Index numerical_rank(const Matrix& m);

/// Square root factor A of a symmetric matrix s with eigenvalues clipped at
/// zero: A * A' = clip(s). Rejects input whose asymmetry exceeds a small
/// relative tolerance (ShapeError).
Matrix sym_sqrt(const Matrix& s);

} // namespace mvwald
