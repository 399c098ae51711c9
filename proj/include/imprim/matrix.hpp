#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <vector>

#include "imprim/error.hpp"
#include "imprim/prng.hpp"

namespace imprim {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Default numerical tolerance. Checks are absolute plus relative: a residual
// r against a quantity of size s passes when r <= tol * (1 + s). Rank
// decisions use the threshold tol * max(dim) * (largest singular value).
constexpr double kDefaultTol = 1e-10;

struct SpectralDecomposition {
  RealVector eigenvalues;  // ascending
  Matrix eigenvectors;     // unitary, columns match eigenvalues
};

// Hermitian eigendecomposition. Throws NotHermitian when the input is not
// square or ||M - M*|| > tol * (1 + ||M||).
SpectralDecomposition herm_eig(const Matrix& m, double tol = kDefaultTol);

// PSD square root with round-off clamping: eigenvalues in [-tol*(1+|M|), 0)
// are treated as 0; anything below that threshold raises NotPsd.
Matrix psd_sqrt(const Matrix& m, double tol = kDefaultTol);

struct PolarDecomposition {
  Matrix isometry;  // partial isometry U with M = U * positive
  Matrix positive;  // PSD factor, equals psd_sqrt(M* M)
};
PolarDecomposition polar_decompose(const Matrix& m, double tol = kDefaultTol);

// Moore-Penrose pseudo-inverse.
Matrix pinv(const Matrix& m, double tol = kDefaultTol);

// A linear map on the space of rows x cols matrices, given by its action.
struct MatrixConstraint {
  int out_rows = 0;
  int out_cols = 0;
  std::function<Matrix(const Matrix&)> apply;
};

// Orthonormal basis of { W : constraint(W) = 0 for every constraint }.
// With no constraints this is the canonical matrix-unit basis.
std::vector<Matrix> joint_nullspace(int rows, int cols,
                                    const std::vector<MatrixConstraint>& constraints,
                                    double tol = kDefaultTol);

// Seeded random matrices used by the randomized algorithms.
Matrix random_matrix(Prng& rng, int rows, int cols);
Matrix random_hermitian(Prng& rng, int dim);
Matrix random_psd(Prng& rng, int dim);
Matrix random_unitary(Prng& rng, int dim);

}  // namespace imprim
