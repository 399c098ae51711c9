#pragma once

#include <optional>
#include <vector>

#include "imprim/frames.hpp"

namespace imprim {

// Positive-operator-valued measure on a finite coset space X, stored
// atomically: one PSD matrix per point. Finite X makes sigma-additivity
// structural, so E(Y) for a subset is just the sum of its atoms. The pair
// (pi, E) is a covariant localisation observable when
// pi(g) E({x}) pi(g)* = E({g[x]}).
struct Povm {
  CosetSpace space;
  UnitaryRep pi;
  std::vector<Matrix> atoms;

  Matrix total() const;  // E(X)
  Matrix of(const std::vector<int>& subset) const;
};

struct PovmReport {
  double min_atom_eigenvalue = 0.0;
  double total_min_eigenvalue = 0.0;  // injectivity margin of E(X)
  double covariance_residual = 0.0;
  bool pass = false;
};

PovmReport validate_povm(const Povm& e, double tol = kDefaultTol);

bool is_normalized(const Povm& e, double tol = kDefaultTol);
bool is_projective(const Povm& e, double tol = kDefaultTol);

// E_0({x}) = E(X)^{-1/2} E({x}) E(X)^{-1/2}; E(X)^{1/2} commutes with pi, so
// the result is again covariant, and E(Y) = E(X)^{1/2} E_0(Y) E(X)^{1/2}.
Povm normalize(const Povm& e, double tol = kDefaultTol);

// The canonical projective observable of an induced representation: the atom
// at x is the orthogonal projection onto the coset-x block.
Povm canonical_povm(const InducedRep& ind);

// Compression of the canonical system by a PSD element T of the commutant:
// carrier = range(T) with an orthonormal basis, atoms = compressions of
// T L({x}) T, representation = the restriction of ind.
struct CompressedSystem {
  Povm povm;
  Matrix carrier;  // orthonormal columns spanning range(T)
};
CompressedSystem compress_povm(const InducedRep& ind, const Matrix& t,
                               double tol = kDefaultTol);

// Seeded generator of covariant POVMs used by tests and the CLI: compresses
// by a random positive commutant element.
CompressedSystem random_covariant_povm(const InducedRep& ind, std::uint64_t seed,
                                       double tol = kDefaultTol);

// The observable synthesized from an admissible map:
// E({x}) = sum_{p(g)=x} theta(g) pi(g) A*A pi(g)^{-1}; E(X) is the frame
// operator, so the result is normalized exactly when A is tight.
Povm povm_from_admissible(const AdmissibleMap& a, double tol = kDefaultTol);

// Searches for a unitary intertwining both the representations and the
// measures. Sound but possibly incomplete: when the joint intertwiner space
// is nonzero yet no unitary is found, the verdict is Undetermined.
enum class Equivalence { Equivalent, Inequivalent, Undetermined };
struct EquivalenceResult {
  Equivalence verdict = Equivalence::Undetermined;
  std::optional<Matrix> unitary;
};
EquivalenceResult systems_equivalent(const Povm& e1, const Povm& e2,
                                     double tol = kDefaultTol);

}  // namespace imprim
