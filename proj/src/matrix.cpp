#include "imprim/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace imprim {

SpectralDecomposition herm_eig(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) fail("NotHermitian", "matrix is not square");
  const double residual = (m - m.adjoint()).norm();
  if (residual > tol * (1.0 + m.norm()))
    fail("NotHermitian", "hermiticity residual " + std::to_string(residual));
  Eigen::SelfAdjointEigenSolver<Matrix> solver((m + m.adjoint()) / 2.0);
  if (solver.info() != Eigen::Success)
    fail("ValidationError", "eigendecomposition did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

Matrix psd_sqrt(const Matrix& m, double tol) {
  SpectralDecomposition sd = herm_eig(m, tol);
  const Eigen::Index n = sd.eigenvalues.size();
  double top = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) top = std::max(top, std::abs(sd.eigenvalues(i)));
  RealVector roots(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lam = sd.eigenvalues(i);
    if (lam < -tol * (1.0 + top))
      fail("NotPsd", "negative eigenvalue " + std::to_string(lam));
    roots(i) = std::sqrt(std::max(lam, 0.0));
  }
  return sd.eigenvectors * roots.cast<Complex>().asDiagonal() *
         sd.eigenvectors.adjoint();
}

PolarDecomposition polar_decompose(const Matrix& m, double /*tol*/) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Matrix u = svd.matrixU() * svd.matrixV().adjoint();
  const Matrix p = svd.matrixV() *
                   svd.singularValues().cast<Complex>().asDiagonal() *
                   svd.matrixV().adjoint();
  return {u, p};
}

Matrix pinv(const Matrix& m, double tol) {
  if (m.size() == 0) return Matrix(m.cols(), m.rows());
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cutoff =
      tol * static_cast<double>(std::max(m.rows(), m.cols())) * (sv.size() ? sv(0) : 0.0);
  Vector inverted(sv.size());
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    inverted(i) = sv(i) > cutoff ? Complex(1.0 / sv(i), 0.0) : Complex(0.0, 0.0);
  return svd.matrixV() * inverted.asDiagonal() * svd.matrixU().adjoint();
}

std::vector<Matrix> joint_nullspace(int rows, int cols,
                                    const std::vector<MatrixConstraint>& constraints,
                                    double tol) {
  if (rows <= 0 || cols <= 0) fail("DimensionMismatch", "empty matrix space");
  const int dim = rows * cols;

  Eigen::Index out_total = 0;
  for (const auto& c : constraints) out_total += Eigen::Index(c.out_rows) * c.out_cols;

  std::vector<Matrix> basis;
  if (constraints.empty() || out_total == 0) {
    basis.reserve(dim);
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i) {
        Matrix e = Matrix::Zero(rows, cols);
        e(i, j) = 1.0;
        basis.push_back(std::move(e));
      }
    return basis;
  }

  Matrix big(out_total, dim);
  Matrix e = Matrix::Zero(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) {
      e(i, j) = 1.0;
      Eigen::Index offset = 0;
      for (const auto& c : constraints) {
        const Matrix out = c.apply(e);
        const Eigen::Index sz = out.size();
        big.block(offset, j * rows + i, sz, 1) =
            Eigen::Map<const Vector>(out.data(), sz);
        offset += sz;
      }
      e(i, j) = 0.0;
    }

  Eigen::JacobiSVD<Matrix> svd(big, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  const double top = sv.size() ? sv(0) : 0.0;
  // Absolute floor alongside the relative rule: a constraint stack that is
  // pure round-off (the exact stack being zero) must count as rank zero.
  const double cutoff = tol * static_cast<double>(std::max<Eigen::Index>(big.rows(), dim)) *
                        std::max(1.0, top);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;

  for (int k = rank; k < dim; ++k) {
    const Vector v = svd.matrixV().col(k);
    basis.push_back(Eigen::Map<const Matrix>(v.data(), rows, cols));
  }
  return basis;
}

Matrix random_matrix(Prng& rng, int rows, int cols) {
  Matrix m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = rng.complex_normal();
  return m;
}

Matrix random_hermitian(Prng& rng, int dim) {
  const Matrix m = random_matrix(rng, dim, dim);
  return (m + m.adjoint()) / 2.0;
}

Matrix random_psd(Prng& rng, int dim) {
  const Matrix m = random_matrix(rng, dim, dim);
  return m * m.adjoint() / static_cast<double>(dim);
}

Matrix random_unitary(Prng& rng, int dim) {
  const Matrix m = random_matrix(rng, dim, dim);
  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase convention so the result is a deterministic function of m.
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double a = std::abs(d);
    if (a > 0) q.col(j) *= d / a;
  }
  return q;
}

}  // namespace imprim
