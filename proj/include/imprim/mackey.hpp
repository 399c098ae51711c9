#pragma once

#include <optional>

#include "imprim/povm.hpp"

namespace imprim {

// Output of the extraction: a representation sigma_E of H on
// K = range(E({o})), the admissible map A, and an isometry W into the
// induced model of sigma_E with
//   (uno)  W pi(g) = ind_g W,
//   (due)  E({x}) = E(X)^{1/2} W* L({x}) W E(X)^{1/2},
//   (tre)  the vectors L({x}) W v span the whole induced space.
struct MackeyResult {
  UnitaryRep sigma_e;   // dim r = rank E({o})
  AdmissibleMap a_map;  // A = compression of E({o})^{1/2} onto its range
  Matrix w;             // (m*r) x n isometry
  Matrix e_of_x;
  InducedRep ind;  // induced model of sigma_e

  struct Residuals {
    double uno = 0.0;
    double due = 0.0;
    double isometry = 0.0;
    int tre_rank = 0;
    int tre_expected = 0;
  } residuals;
};

// M(f) = sum_x ftilde(x) E({x}), the operator-valued form of a function on G.
Matrix m_of_f(const Povm& e, const std::vector<Complex>& f);

// The sesquilinear form of the extraction. On a finite group the density of
// Y -> <E(Y)u, v> against counting measure is phi_{u,v}(g) = <E({p(g)})u, v>,
// so the form evaluated at the identity is just the base-point atom. The
// identity <M(f)u,v> = sum_g f(g) phi_{u,v}(g) pins this down and is what the
// tests check.
Matrix phi_form(const Povm& e);

// The extraction. theta defaults to the uniform weight; the resulting
// sigma_e does not depend on it up to equivalence.
MackeyResult extract(const Povm& e, double tol = kDefaultTol,
                     const std::optional<ThetaWeight>& theta = std::nullopt);

// E is projective iff W_A = W E(X)^{1/2} is unitary; reports both sides.
struct ProjectivityReport {
  bool projective = false;
  bool wa_unitary = false;
  bool consistent() const { return projective == wa_unitary; }
};
ProjectivityReport projectivity_check(const MackeyResult& result, const Povm& e,
                                      double tol = kDefaultTol);

// Given a verified equivalence T between two systems, builds the unitary
// t: K -> K' with t A u = A' T u and checks that it intertwines the two
// extracted representations. Throws NotAnEquivalence when T is not one.
struct UniquenessReport {
  double unitarity_residual = 0.0;
  double transport_residual = 0.0;   // || t A - A' T ||
  double intertwine_residual = 0.0;  // max_h || t sigma(h) - sigma'(h) t ||
  bool pass = false;
};
UniquenessReport sigma_uniqueness_check(const Povm& e1, const Povm& e2,
                                        const Matrix& t_equiv,
                                        double tol = kDefaultTol);

// Discretized torus pair on Z_n (n even): pi(k) = diag(w^k, w^{2k}),
// E({k}) = I/n, and E' adds rank-one off-diagonal terms carrying the
// frequency +-1 Fourier coefficients, scaled by offdiag_scale and oriented so
// that covariance holds (the orientation is picked by the validator, and the
// scale keeps E'({0}) full rank). Both systems share a two dimensional
// trivial sigma_E yet are not equivalent.
struct TorusFixture {
  GroupPtr group;
  UnitaryRep pi;
  Povm e;
  Povm e_prime;
  bool orientation_flipped = false;         // printed pairing failed covariance
  double printed_orientation_residual = 0;  // covariance residual of that pairing
  bool e_projective = false;                // atoms of E are not idempotent
  double offdiag_scale = 0.5;
};
TorusFixture torus_fixture(int n);

}  // namespace imprim
