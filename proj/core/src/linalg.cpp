#include "mvwald/linalg.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace mvwald {

namespace {

void require_finite(const Matrix& m, const char* what) {
  if (!m.allFinite())
    throw NumericalError(std::string(what) + ": input has non-finite entries");
}

} // namespace

Matrix kronecker(const Matrix& a, const Matrix& b) {
  const std::int64_t rows = std::int64_t{a.rows()} * b.rows();
  const std::int64_t cols = std::int64_t{a.cols()} * b.cols();
  if (rows <= 0 || cols <= 0 || rows * cols > kKroneckerEntryCap)
    throw DimensionError("kronecker: result of " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " (x) " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()) + " exceeds the size cap");
  Matrix out(rows, cols);
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix centering_matrix(Index n) {
  if (n < 1)
    throw DimensionError("centering_matrix: n must be >= 1");
  Matrix p = Matrix::Constant(n, n, -1.0 / static_cast<double>(n));
  p.diagonal().array() += 1.0;
  return p;
}

Matrix averaging_matrix(Index n) {
  if (n < 1)
    throw DimensionError("averaging_matrix: n must be >= 1");
  return Matrix::Constant(n, n, 1.0 / static_cast<double>(n));
}

PseudoInverse pseudo_inverse(const Matrix& m) {
  require_finite(m, "pseudo_inverse");
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  const double tau = std::numeric_limits<double>::epsilon() *
                     static_cast<double>(std::max(m.rows(), m.cols())) * sigma_max;

  Vector inv_sv = Vector::Zero(sv.size());
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > tau && sv(i) > 0.0) {
      inv_sv(i) = 1.0 / sv(i);
      ++rank;
    }
  }
  PseudoInverse result;
  result.inverse = svd.matrixV() * inv_sv.asDiagonal() * svd.matrixU().transpose();
  result.rank = rank;
  return result;
}

Index numerical_rank(const Matrix& m) {
  require_finite(m, "numerical_rank");
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;
  const double tau = std::numeric_limits<double>::epsilon() *
                     static_cast<double>(std::max(m.rows(), m.cols())) * sigma_max;
  Index rank = 0;
  for (Index i = 0; i < sv.size(); ++i)
    if (sv(i) > tau && sv(i) > 0.0) ++rank;
  return rank;
}

Matrix sym_sqrt(const Matrix& s) {
  require_finite(s, "sym_sqrt");
  if (s.rows() != s.cols())
    throw ShapeError("sym_sqrt: matrix is not square (" + std::to_string(s.rows()) + "x" +
                     std::to_string(s.cols()) + ")");
  const double scale = std::max(1.0, s.cwiseAbs().maxCoeff());
  const double asym = (s - s.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-8 * scale)
    throw ShapeError("sym_sqrt: matrix is asymmetric beyond tolerance (max deviation " +
                     std::to_string(asym) + ")");

  Eigen::SelfAdjointEigenSolver<Matrix> eig(s);
  if (eig.info() != Eigen::Success)
    throw NumericalError("sym_sqrt: eigendecomposition did not converge");
  Vector lambda = eig.eigenvalues().cwiseMax(0.0);
  return eig.eigenvectors() * lambda.cwiseSqrt().asDiagonal();
}

} // namespace mvwald
