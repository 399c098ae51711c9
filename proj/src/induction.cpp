#include "imprim/induction.hpp"

#include <cmath>

namespace imprim {

ThetaWeight theta_uniform(const Subgroup& h) {
  ThetaWeight theta;
  theta.sub = h;
  theta.values.assign(h.parent->order(), 1.0 / static_cast<double>(h.order()));
  return theta;
}

ThetaWeight theta_random(const Subgroup& h, std::uint64_t seed) {
  Prng rng(seed ^ 0x77e7aULL);
  ThetaWeight theta;
  theta.sub = h;
  theta.values.assign(h.parent->order(), 0.0);

  const GroupPtr g = h.parent;
  std::vector<char> done(g->order(), 0);
  for (int r = 0; r < g->order(); ++r) {
    if (done[r]) continue;
    // One left coset rH at a time: positive weights normalized to sum 1.
    std::vector<int> members;
    double total = 0.0;
    for (int e : h.elements) {
      const int x = g->mul(r, e);
      members.push_back(x);
      const double w = rng.uniform(0.1, 1.0);
      theta.values[x] = w;
      total += w;
      done[x] = 1;
    }
    for (int x : members) theta.values[x] /= total;
  }
  return theta;
}

void validate_theta(const ThetaWeight& theta, double tol) {
  const GroupPtr g = theta.sub.parent;
  if (static_cast<int>(theta.values.size()) != g->order())
    fail("DimensionMismatch", "theta is not defined on all of G");
  for (double v : theta.values)
    if (!(v >= 0.0)) fail("ValidationError", "theta has a negative value");
  for (int x = 0; x < g->order(); ++x) {
    double s = 0.0;
    for (int e : theta.sub.elements) s += theta.values[g->mul(x, e)];
    if (std::abs(s - 1.0) > tol)
      fail("ValidationError", "theta fiber sum at " + std::to_string(x) +
                                  " is " + std::to_string(s));
  }
}

std::vector<Complex> weil_average(const CosetSpace& x, const std::vector<Complex>& f) {
  if (static_cast<int>(f.size()) != x.parent->order())
    fail("DimensionMismatch", "function is not defined on all of G");
  std::vector<Complex> out(x.size(), Complex(0, 0));
  for (int i = 0; i < x.size(); ++i)
    for (int e : x.subgroup.elements) out[i] += f[x.parent->mul(x.reps[i], e)];
  return out;
}

InducedRep induce(const UnitaryRep& sigma, const CosetSpace& x,
                  const ThetaWeight& theta) {
  if (!same_group(*sigma.group, *x.subgroup.group))
    fail("GroupMismatch", "sigma is not a representation of the coset subgroup");
  if (!same_group(*theta.sub.parent, *x.parent))
    fail("GroupMismatch", "theta does not live on the same group");
  validate_theta(theta);

  const GroupPtr g = x.parent;
  const int m = x.size();
  const int k = sigma.dim;

  InducedRep ind;
  ind.sigma = sigma;
  ind.space = x;
  ind.theta = theta;
  ind.rep.group = g;
  ind.rep.dim = m * k;
  ind.rep.mats.reserve(g->order());
  for (int a = 0; a < g->order(); ++a) {
    Matrix mat = Matrix::Zero(m * k, m * k);
    for (int col = 0; col < m; ++col) {
      const int row = x.action(a, col);
      const int h = x.subgroup.to_sub(x.cocycle(a, col));
      mat.block(row * k, col * k, k, k) = sigma.at(h);
    }
    ind.rep.mats.push_back(std::move(mat));
  }
  return ind;
}

Matrix expand_to_function(const InducedRep& ind, const Vector& f) {
  const GroupPtr g = ind.space.parent;
  const int k = ind.block_dim();
  if (f.size() != ind.rep.dim)
    fail("DimensionMismatch", "vector does not match the induced model");
  Matrix values(k, g->order());
  for (int a = 0; a < g->order(); ++a) {
    const int x = ind.space.proj[a];
    // a = reps[x] * h with h = reps[x]^{-1} a, and F(reps[x] h) = sigma(h)^* F_x.
    const int h = g->mul(g->inv(ind.space.reps[x]), a);
    values.col(a) =
        ind.sigma_at_parent(h).adjoint() * f.segment(x * k, k);
  }
  return values;
}

Matrix theta_gram(const InducedRep& ind) {
  const GroupPtr g = ind.space.parent;
  const int dim = ind.rep.dim;
  // Expand each basis vector once; Gram(a,b) = sum_g theta(g) <F_b(g), F_a(g)>.
  std::vector<Matrix> expanded;
  expanded.reserve(dim);
  for (int j = 0; j < dim; ++j) {
    Vector e = Vector::Zero(dim);
    e(j) = 1.0;
    expanded.push_back(expand_to_function(ind, e));
  }
  Matrix gram(dim, dim);
  for (int a = 0; a < dim; ++a)
    for (int b = 0; b < dim; ++b) {
      Complex acc(0, 0);
      for (int gg = 0; gg < g->order(); ++gg)
        acc += ind.theta.values[gg] *
               expanded[b].col(gg).dot(expanded[a].col(gg));
      gram(a, b) = acc;
    }
  return gram;
}

Vector vector_f_fv(const InducedRep& ind, const std::vector<Complex>& f,
                   const Vector& v) {
  const GroupPtr g = ind.space.parent;
  const int k = ind.block_dim();
  if (v.size() != k) fail("DimensionMismatch", "v does not live in K");
  if (static_cast<int>(f.size()) != g->order())
    fail("DimensionMismatch", "function is not defined on all of G");
  Vector out = Vector::Zero(ind.rep.dim);
  const ModularData modular;
  for (int x = 0; x < ind.blocks(); ++x) {
    Vector block = Vector::Zero(k);
    for (int i = 0; i < ind.space.subgroup.order(); ++i) {
      const int h = ind.space.subgroup.elements[i];
      block += modular.sqrt_ratio(h) * f[g->mul(ind.space.reps[x], h)] *
               (ind.sigma.at(i) * v);
    }
    out.segment(x * k, k) = block;
  }
  return out;
}

Vector conv_action(const InducedRep& ind, const std::vector<Complex>& f,
                   const Vector& big_f) {
  if (big_f.size() != ind.rep.dim)
    fail("DimensionMismatch", "vector does not match the induced model");
  return pi_of_f(ind.rep, f) * big_f;
}

}  // namespace imprim
