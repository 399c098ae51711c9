#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "imprim/group.hpp"
#include "imprim/matrix.hpp"

namespace imprim {

// Matrix-valued unitary representation of a finite group, one dim x dim
// matrix per element id.
struct UnitaryRep {
  GroupPtr group;
  int dim = 0;
  std::vector<Matrix> mats;

  const Matrix& at(int g) const { return mats[g]; }
};

struct RepReport {
  double unitarity_residual = 0.0;
  double homomorphism_residual = 0.0;
  double identity_residual = 0.0;
  bool pass = false;
};

// Unitarity and homomorphism residuals. The homomorphism sweep runs over all
// pairs for small inputs, and over (generator, element) pairs otherwise,
// which is equivalent by induction on word length.
RepReport validate_rep(const UnitaryRep& rep, double tol = kDefaultTol);

UnitaryRep trivial_rep(const GroupPtr& g, int dim = 1);
UnitaryRep left_regular(const GroupPtr& g);

// Restriction to a subgroup, reindexed along the subgroup's own ids.
UnitaryRep restrict_rep(const UnitaryRep& rep, const Subgroup& h);

// pi(f) = sum_g f(g) pi(g), the counting-measure operator of a function on G.
Matrix pi_of_f(const UnitaryRep& rep, const std::vector<Complex>& f);

// f^g with (f^g)(g') = f(g^{-1} g').
std::vector<Complex> translate_f(const FiniteGroup& g, int element,
                                 const std::vector<Complex>& f);

// Orthonormal basis of { W : W pi1(g) = pi2(g) W for all g }.
std::vector<Matrix> intertwiner_space(const UnitaryRep& pi1, const UnitaryRep& pi2,
                                      double tol = kDefaultTol);

// Group-average projection of an arbitrary matrix onto Hom(pi1, pi2); with a
// random seed matrix this produces a generic intertwiner without solving for
// a full basis.
Matrix project_to_hom(const UnitaryRep& pi1, const UnitaryRep& pi2,
                      const Matrix& seed);
Matrix project_to_commutant(const UnitaryRep& rep, const Matrix& seed);

// A unitary T with T pi1(g) = pi2(g) T when the representations are
// equivalent; nullopt otherwise.
std::optional<Matrix> equivalence_unitary(const UnitaryRep& pi1,
                                          const UnitaryRep& pi2,
                                          double tol = kDefaultTol);

// Decomposition into irreducibles. Classes are deterministically ordered by
// (dimension, character); each piece records an embedding V with orthonormal
// columns satisfying V* pi(g) V = class(g).
struct Decomposition {
  struct Piece {
    int class_index = 0;
    Matrix embedding;
  };
  std::vector<std::pair<UnitaryRep, int>> classes;  // (irreducible, multiplicity)
  std::vector<Piece> pieces;
};

Decomposition decompose_rep(const UnitaryRep& rep, std::uint64_t seed,
                            double tol = kDefaultTol);

// The irreducible representations of g, from the regular representation.
std::vector<UnitaryRep> irreducibles(const GroupPtr& g, std::uint64_t seed = 7,
                                     double tol = kDefaultTol);

// dim Hom(pi1, pi2); for pi1 irreducible this is the multiplicity of pi1 in pi2.
int hom_dimension(const UnitaryRep& pi1, const UnitaryRep& pi2,
                  double tol = kDefaultTol);

// U* pi(g) U for a unitary U, a convenience for tests and fixtures.
UnitaryRep conjugate_rep(const UnitaryRep& rep, const Matrix& u);

}  // namespace imprim
