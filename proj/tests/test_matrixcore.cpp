#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "imprim/matrix.hpp"

using namespace imprim;
using imprim::testing::dist;
using imprim::testing::eye;

TEST_CASE("herm_eig on pinned examples") {
  const auto id = herm_eig(eye(2));
  CHECK(id.eigenvalues(0) == doctest::Approx(1.0));
  CHECK(id.eigenvalues(1) == doctest::Approx(1.0));

  Matrix d(2, 2);
  d << 0, 0, 0, 3;
  const auto sd = herm_eig(d);
  CHECK(sd.eigenvalues(0) == doctest::Approx(0.0));
  CHECK(sd.eigenvalues(1) == doctest::Approx(3.0));

  // Characteristic polynomial of [[2,1],[1,2]] is (x-1)(x-3).
  Matrix m(2, 2);
  m << 2, 1, 1, 2;
  const auto sm = herm_eig(m);
  CHECK(sm.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sm.eigenvalues(1) == doctest::Approx(3.0).epsilon(1e-12));

  // Reconstruction and orthonormality.
  const Matrix rebuilt = sm.eigenvectors *
                         sm.eigenvalues.cast<Complex>().asDiagonal() *
                         sm.eigenvectors.adjoint();
  CHECK(dist(rebuilt, m) <= 1e-12);
  CHECK(dist(sm.eigenvectors.adjoint() * sm.eigenvectors, eye(2)) <= 1e-12);

  Matrix nh(2, 2);
  nh << 0, 1, 0, 0;
  CHECK_THROWS_WITH_AS(herm_eig(nh), doctest::Contains("NotHermitian"), Error);
}

TEST_CASE("psd_sqrt squares back") {
  CHECK(dist(psd_sqrt(eye(3)), eye(3)) <= 1e-12);

  Matrix d(2, 2);
  d << 4, 0, 0, 9;
  Matrix expected(2, 2);
  expected << 2, 0, 0, 3;
  CHECK(dist(psd_sqrt(d), expected) <= 1e-12);

  Matrix m(2, 2);
  m << 2, 1, 1, 2;
  const Matrix s = psd_sqrt(m);
  CHECK(dist(s * s, m) <= 1e-12);
  const auto sd = herm_eig(s);
  CHECK(sd.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sd.eigenvalues(1) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  Matrix neg(2, 2);
  neg << 1, 0, 0, -1;
  CHECK_THROWS_WITH_AS(psd_sqrt(neg), doctest::Contains("NotPsd"), Error);

  // Tiny negative round-off eigenvalues are clamped, not rejected.
  Matrix noisy = eye(2);
  noisy(0, 0) = -1e-13;
  CHECK_NOTHROW(psd_sqrt(noisy));
}

TEST_CASE("psd_sqrt property on random PSD matrices up to dim 24") {
  Prng rng(11);
  for (int dim : {2, 5, 11, 24}) {
    const Matrix m = random_psd(rng, dim);
    const Matrix s = psd_sqrt(m);
    CHECK(dist(s * s, m) <= 1e-10 * (1.0 + m.norm()));
    CHECK(dist(s, s.adjoint()) <= 1e-12);
  }
}

TEST_CASE("polar decomposition") {
  const auto two = polar_decompose(2.0 * eye(2));
  CHECK(dist(two.isometry, eye(2)) <= 1e-12);
  CHECK(dist(two.positive, 2.0 * eye(2)) <= 1e-12);

  Prng rng(5);
  const Matrix u = random_unitary(rng, 3);
  const auto pu = polar_decompose(u);
  CHECK(dist(pu.isometry, u) <= 1e-12);
  CHECK(dist(pu.positive, eye(3)) <= 1e-12);

  Matrix rect(3, 2);
  rect << 1, 0, 0, 0, 0, 2;
  const auto pr = polar_decompose(rect);
  Matrix expected(2, 2);
  expected << 1, 0, 0, 2;
  CHECK(dist(pr.positive, expected) <= 1e-12);
  CHECK(dist(pr.isometry.adjoint() * pr.isometry, eye(2)) <= 1e-12);
  CHECK(dist(pr.isometry * pr.positive, rect) <= 1e-12);

  // Reconstruction for a random rectangular matrix.
  const Matrix m = random_matrix(rng, 4, 3);
  const auto pm = polar_decompose(m);
  CHECK(dist(pm.isometry * pm.positive, m) <= 1e-10 * (1.0 + m.norm()));
}

TEST_CASE("pinv satisfies the Moore-Penrose identities") {
  CHECK(dist(pinv(eye(3)), eye(3)) <= 1e-12);

  Matrix d(2, 2);
  d << 2, 0, 0, 0;
  Matrix expected(2, 2);
  expected << 0.5, 0, 0, 0;
  CHECK(dist(pinv(d), expected) <= 1e-12);

  Prng rng(17);
  const Matrix m = random_matrix(rng, 3, 2);
  const Matrix p = pinv(m);
  CHECK(dist(p * m, eye(2)) <= 1e-10);  // full column rank
  CHECK(dist(m * p * m, m) <= 1e-10);
  CHECK(dist(p * m * p, p) <= 1e-10);
  CHECK(dist((m * p).adjoint(), m * p) <= 1e-10);
  CHECK(dist((p * m).adjoint(), p * m) <= 1e-10);
}

TEST_CASE("joint_nullspace basics and hand-enumerated commutation") {
  const auto full = joint_nullspace(2, 2, {});
  CHECK(full.size() == 4);

  std::vector<MatrixConstraint> kill{{2, 2, [](const Matrix& w) { return w; }}};
  CHECK(joint_nullspace(2, 2, kill).empty());

  // W commuting with diag(1,2): exactly the diagonal matrices.
  Matrix d(2, 2);
  d << 1, 0, 0, 2;
  std::vector<MatrixConstraint> commute{
      {2, 2, [d](const Matrix& w) -> Matrix { return w * d - d * w; }}};
  const auto basis = joint_nullspace(2, 2, commute);
  REQUIRE(basis.size() == 2);
  for (const auto& b : basis) {
    CHECK(std::abs(b(0, 1)) <= 1e-12);
    CHECK(std::abs(b(1, 0)) <= 1e-12);
  }
  // Orthonormal basis.
  CHECK(std::abs(basis[0].norm() - 1.0) <= 1e-12);
  CHECK(std::abs(basis[1].norm() - 1.0) <= 1e-12);
  CHECK(std::abs((basis[0].adjoint() * basis[1]).trace()) <= 1e-12);
}

TEST_CASE("joint_nullspace dimension is basis independent") {
  Prng rng(23);
  Matrix d(3, 3);
  d << 1, 0, 0, 0, 2, 0, 0, 0, 2;
  // Commutant of diag(1,2,2) has dimension 1 + 4 = 5.
  std::vector<MatrixConstraint> one{
      {3, 3, [d](const Matrix& w) -> Matrix { return w * d - d * w; }}};
  const size_t dim = joint_nullspace(3, 3, one).size();
  CHECK(dim == 5);

  // Rescaled and duplicated constraints leave the dimension unchanged.
  std::vector<MatrixConstraint> scaled{
      {3, 3, [d](const Matrix& w) -> Matrix { return 3.7 * (w * d - d * w); }},
      {3, 3, [d](const Matrix& w) -> Matrix { return -0.2 * (w * d - d * w); }}};
  CHECK(joint_nullspace(3, 3, scaled).size() == dim);
}
