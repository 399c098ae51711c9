#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "imprim/induction.hpp"

namespace imprim {

// Linear map A: H_pi -> K that is semi-invariant under H:
// sigma(h) A = A pi(h) for every h in H (the sqrt(delta) weight is 1 here).
// Square-summability against theta is automatic on a finite group; the frame
// operator Phi_A = sum_g theta(g) pi(g) A*A pi(g)^{-1} carries the bounds.
struct AdmissibleMap {
  Matrix a;          // k x n
  UnitaryRep pi;     // representation of G, dimension n
  UnitaryRep sigma;  // representation of H, dimension k
  Subgroup sub;      // H <= G
  ThetaWeight theta;
};

struct AdmissibilityReport {
  double semi_residual = 0.0;
  double beta = 0.0;
  bool pass = false;
};

AdmissibilityReport check_admissible(const AdmissibleMap& a, double tol = kDefaultTol);

// Phi_A; equals W_A* W_A for semi-invariant A and commutes with pi.
Matrix frame_operator(const AdmissibleMap& a);

// The wavelet transform W_A into the induced model of sigma: block x of the
// matrix is A pi(reps[x]^{-1}). Throws NotAdmissible when the semi-invariance
// check fails.
struct WaveletOp {
  Matrix w;  // (m*k) x n
  InducedRep ind;
};
WaveletOp wavelet_operator(const AdmissibleMap& a, double tol = kDefaultTol);

// Fast path when the induced model is already built; performs no checks.
Matrix wavelet_matrix(const AdmissibleMap& a, const InducedRep& ind);

// (alpha, beta) = extreme eigenvalues of the frame operator.
std::pair<double, double> frame_bounds(const AdmissibleMap& a);

bool is_tight(const AdmissibleMap& a, double tol = kDefaultTol);

// Tight admissible map with the same range behaviour: the polar part of W_A
// read back through the base-coset block. Requires alpha > 0.
AdmissibleMap tighten(const AdmissibleMap& a, double tol = kDefaultTol);

// Converse direction of the wavelet transform: A v = (W v)(e), the base-coset
// block row of an intertwiner W in Hom(pi, ind sigma).
AdmissibleMap admissible_from_intertwiner(const Matrix& w, const UnitaryRep& pi,
                                          const InducedRep& ind,
                                          double tol = kDefaultTol);

// Decides whether pi embeds into ind sigma (multiplicity domination of every
// irreducible constituent) and, when it does, produces a tight witness.
struct SquareIntegrability {
  bool verdict = false;
  std::optional<AdmissibleMap> witness;
  // (multiplicity in pi, multiplicity in ind sigma) per constituent of pi.
  std::vector<std::pair<int, int>> multiplicities;
};
SquareIntegrability square_integrable_mod(const UnitaryRep& pi, const Subgroup& h,
                                          const UnitaryRep& sigma,
                                          std::uint64_t seed,
                                          double tol = kDefaultTol);

}  // namespace imprim
