#pragma once

#include <cstdint>
#include <vector>

#include "imprim/rep.hpp"

namespace imprim {

// Nonnegative weight on G with unit fiber sums: for every g,
// sum_{h in H} values[g*h] = 1. This is the discrete theta function that
// defines the inner product on the induced space.
struct ThetaWeight {
  Subgroup sub;
  std::vector<double> values;  // one per parent element id
};

ThetaWeight theta_uniform(const Subgroup& h);
ThetaWeight theta_random(const Subgroup& h, std::uint64_t seed);
void validate_theta(const ThetaWeight& theta, double tol = kDefaultTol);

// Modular data of the pair (G, H). On a finite group both modular functions
// are identically 1, so the weight sqrt(delta_G/delta_H) that multiplies the
// covariance and semi-invariance identities is 1 as well; it is kept
// explicit so the formulas read the same as in the general case.
struct ModularData {
  double delta_g(int /*g*/) const { return 1.0; }
  double delta_h(int /*h*/) const { return 1.0; }
  double sqrt_ratio(int /*h*/) const { return 1.0; }
};

// Averaging map C(G) -> C(X): ftilde(x) = sum_{h in H} f(reps[x]*h).
std::vector<Complex> weil_average(const CosetSpace& x, const std::vector<Complex>& f);

// Induced representation in the coset-representative model.
//
// A covariant function F: G -> K with F(g h) = sigma(h^{-1}) F(g) is
// determined by its values at the coset representatives, so the carrier is
// the direct sum of one copy of K per coset, ordered (coset, K-basis). The
// action (ind_g F)(g') = F(g^{-1} g') becomes a block permutation: block
// (g[x], x) of ind_g is sigma(h(g,x)) with g*reps[x] = reps[g[x]]*h(g,x).
// The theta weight integrates out of the inner product, which is why the
// model carries the plain block inner product; theta_gram exhibits this.
struct InducedRep {
  UnitaryRep rep;    // the induced representation of G, dimension m*k
  UnitaryRep sigma;  // representation of H (on the subgroup's own ids)
  CosetSpace space;
  ThetaWeight theta;

  int block_dim() const { return sigma.dim; }
  int blocks() const { return space.size(); }

  // sigma evaluated at a parent element of H.
  const Matrix& sigma_at_parent(int parent_id) const {
    return sigma.at(space.subgroup.to_sub(parent_id));
  }
};

InducedRep induce(const UnitaryRep& sigma, const CosetSpace& x,
                  const ThetaWeight& theta);

// The covariant function represented by a model vector, evaluated at every
// group element: column g holds F(g) = sigma(h)^* F_x for g = reps[x] h.
Matrix expand_to_function(const InducedRep& ind, const Vector& f);

// Gram matrix of the model basis under the theta-weighted L^2(G) product;
// equals the identity for every valid theta.
Matrix theta_gram(const InducedRep& ind);

// F_{f,v}: the covariant function with block x equal to
// sum_h f(reps[x] h) sigma(h) v.
Vector vector_f_fv(const InducedRep& ind, const std::vector<Complex>& f,
                   const Vector& v);

// ind(f) F, equal to the convolution f * F.
Vector conv_action(const InducedRep& ind, const std::vector<Complex>& f,
                   const Vector& big_f);

}  // namespace imprim
