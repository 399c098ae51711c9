#include "imprim/rep.hpp"

#include <algorithm>
#include <cmath>

namespace imprim {

namespace {

constexpr double kClusterGap = 1e-7;

void check_same_group(const UnitaryRep& a, const UnitaryRep& b) {
  if (!a.group || !b.group || !same_group(*a.group, *b.group))
    fail("GroupMismatch", "representations live on different groups");
}

// Subrepresentation carried by the range of an isometric embedding.
UnitaryRep compress(const UnitaryRep& rep, const Matrix& embedding) {
  UnitaryRep out;
  out.group = rep.group;
  out.dim = static_cast<int>(embedding.cols());
  out.mats.reserve(rep.mats.size());
  for (const auto& m : rep.mats)
    out.mats.push_back(embedding.adjoint() * m * embedding);
  return out;
}

std::vector<std::pair<long long, long long>> character_key(const UnitaryRep& rep) {
  std::vector<std::pair<long long, long long>> key;
  key.reserve(rep.mats.size());
  for (const auto& m : rep.mats) {
    const Complex t = m.trace();
    key.emplace_back(std::llround(t.real() * 1e9), std::llround(t.imag() * 1e9));
  }
  return key;
}

// Recursive eigenspace splitting along random commutant elements. Appends
// embeddings (orthonormal columns into the ambient space of `top`) whose
// compressions are irreducible.
void split_invariant(const UnitaryRep& top, const Matrix& embedding, Prng& rng,
                     double tol, std::vector<Matrix>& leaves, int depth) {
  if (depth > 16) fail("SplitFailed", "splitting recursion too deep");
  const UnitaryRep sub = compress(top, embedding);
  const int d = sub.dim;
  if (d == 1) {
    leaves.push_back(embedding);
    return;
  }

  for (int attempt = 0; attempt < 6; ++attempt) {
    const Matrix c = project_to_commutant(sub, random_hermitian(rng, d));
    const SpectralDecomposition sd = herm_eig(c, 1e-8);
    const double spread =
        std::max(1.0, sd.eigenvalues(d - 1) - sd.eigenvalues(0));

    std::vector<std::pair<int, int>> clusters;  // [begin, end)
    int begin = 0;
    for (int i = 1; i < d; ++i) {
      if (sd.eigenvalues(i) - sd.eigenvalues(i - 1) > kClusterGap * spread) {
        clusters.emplace_back(begin, i);
        begin = i;
      }
    }
    clusters.emplace_back(begin, d);

    if (clusters.size() == 1) {
      // Scalar commutant sample: check irreducibility properly.
      if (intertwiner_space(sub, sub, tol).size() == 1) {
        leaves.push_back(embedding);
        return;
      }
      continue;  // degenerate draw, retry
    }

    for (const auto& [lo, hi] : clusters) {
      const Matrix block = sd.eigenvectors.middleCols(lo, hi - lo);
      split_invariant(top, embedding * block, rng, tol, leaves, depth + 1);
    }
    return;
  }
  fail("SplitFailed", "no splitting commutant element found; retry with a new seed");
}

}  // namespace

RepReport validate_rep(const UnitaryRep& rep, double tol) {
  RepReport report;
  const int n = rep.group->order();
  if (static_cast<int>(rep.mats.size()) != n)
    fail("DimensionMismatch", "matrix count does not match the group order");
  const Matrix eye = Matrix::Identity(rep.dim, rep.dim);
  for (const auto& m : rep.mats) {
    if (m.rows() != rep.dim || m.cols() != rep.dim)
      fail("DimensionMismatch", "matrix size does not match the stated dimension");
    report.unitarity_residual =
        std::max(report.unitarity_residual, (m.adjoint() * m - eye).norm());
  }
  report.identity_residual = (rep.at(rep.group->identity()) - eye).norm();

  const bool full_sweep = n <= 30 && rep.dim <= 30;
  const std::vector<int> firsts =
      full_sweep ? [&] {
        std::vector<int> all(n);
        for (int i = 0; i < n; ++i) all[i] = i;
        return all;
      }()
                 : rep.group->generating_set();
  for (int a : firsts)
    for (int b = 0; b < n; ++b) {
      const double r = (rep.at(a) * rep.at(b) - rep.at(rep.group->mul(a, b))).norm();
      report.homomorphism_residual = std::max(report.homomorphism_residual, r);
    }

  const double gate = tol * (1.0 + std::sqrt(static_cast<double>(rep.dim)));
  report.pass = report.unitarity_residual <= gate &&
                report.homomorphism_residual <= gate &&
                report.identity_residual <= gate;
  return report;
}

UnitaryRep trivial_rep(const GroupPtr& g, int dim) {
  UnitaryRep rep;
  rep.group = g;
  rep.dim = dim;
  rep.mats.assign(g->order(), Matrix::Identity(dim, dim));
  return rep;
}

UnitaryRep left_regular(const GroupPtr& g) {
  const int n = g->order();
  UnitaryRep rep;
  rep.group = g;
  rep.dim = n;
  rep.mats.reserve(n);
  for (int a = 0; a < n; ++a) {
    Matrix m = Matrix::Zero(n, n);
    for (int b = 0; b < n; ++b) m(g->mul(a, b), b) = 1.0;
    rep.mats.push_back(std::move(m));
  }
  return rep;
}

UnitaryRep restrict_rep(const UnitaryRep& rep, const Subgroup& h) {
  if (!h.parent || !same_group(*h.parent, *rep.group))
    fail("NotSubgroup", "subgroup does not belong to the representation's group");
  UnitaryRep out;
  out.group = h.group;
  out.dim = rep.dim;
  out.mats.reserve(h.elements.size());
  for (int e : h.elements) out.mats.push_back(rep.at(e));
  return out;
}

Matrix pi_of_f(const UnitaryRep& rep, const std::vector<Complex>& f) {
  if (static_cast<int>(f.size()) != rep.group->order())
    fail("DimensionMismatch", "function is not defined on all of G");
  Matrix acc = Matrix::Zero(rep.dim, rep.dim);
  for (int g = 0; g < rep.group->order(); ++g) acc += f[g] * rep.at(g);
  return acc;
}

std::vector<Complex> translate_f(const FiniteGroup& g, int element,
                                 const std::vector<Complex>& f) {
  std::vector<Complex> out(f.size());
  const int ginv = g.inv(element);
  for (int x = 0; x < g.order(); ++x) out[x] = f[g.mul(ginv, x)];
  return out;
}

std::vector<Matrix> intertwiner_space(const UnitaryRep& pi1, const UnitaryRep& pi2,
                                      double tol) {
  check_same_group(pi1, pi2);
  std::vector<MatrixConstraint> constraints;
  for (int g : pi1.group->generating_set()) {
    constraints.push_back(
        {pi2.dim, pi1.dim, [&pi1, &pi2, g](const Matrix& w) -> Matrix {
           return w * pi1.at(g) - pi2.at(g) * w;
         }});
  }
  return joint_nullspace(pi2.dim, pi1.dim, constraints, tol);
}

Matrix project_to_hom(const UnitaryRep& pi1, const UnitaryRep& pi2,
                      const Matrix& seed) {
  check_same_group(pi1, pi2);
  Matrix acc = Matrix::Zero(pi2.dim, pi1.dim);
  for (int g = 0; g < pi1.group->order(); ++g)
    acc += pi2.at(g) * seed * pi1.at(g).adjoint();
  return acc / static_cast<double>(pi1.group->order());
}

Matrix project_to_commutant(const UnitaryRep& rep, const Matrix& seed) {
  return project_to_hom(rep, rep, seed);
}

std::optional<Matrix> equivalence_unitary(const UnitaryRep& pi1,
                                          const UnitaryRep& pi2, double tol) {
  check_same_group(pi1, pi2);
  if (pi1.dim != pi2.dim) return std::nullopt;
  const int d = pi1.dim;
  Prng rng(0x7e9a11ce);
  const double gate = tol * (1.0 + std::sqrt(static_cast<double>(d)));
  for (int attempt = 0; attempt < 6; ++attempt) {
    const Matrix t = project_to_hom(pi1, pi2, random_matrix(rng, d, d));
    if (t.norm() <= 1e-13 * d) return std::nullopt;  // Hom is {0}
    const Matrix u = polar_decompose(t, tol).isometry;
    if ((u.adjoint() * u - Matrix::Identity(d, d)).norm() > gate) continue;
    double residual = 0.0;
    for (int g = 0; g < pi1.group->order(); ++g)
      residual = std::max(residual, (u * pi1.at(g) - pi2.at(g) * u).norm());
    if (residual <= gate) return u;
  }
  return std::nullopt;
}

Decomposition decompose_rep(const UnitaryRep& rep, std::uint64_t seed, double tol) {
  Prng rng(seed ^ 0xdec0335eULL);
  std::vector<Matrix> leaves;
  split_invariant(rep, Matrix::Identity(rep.dim, rep.dim), rng, tol, leaves, 0);

  Decomposition out;
  std::vector<UnitaryRep> leaf_reps;
  leaf_reps.reserve(leaves.size());
  for (const auto& v : leaves) leaf_reps.push_back(compress(rep, v));

  // Group the leaves into equivalence classes.
  std::vector<int> leaf_class(leaves.size(), -1);
  std::vector<UnitaryRep> class_reps;
  std::vector<std::vector<int>> class_members;
  for (size_t i = 0; i < leaves.size(); ++i) {
    for (size_t c = 0; c < class_reps.size(); ++c) {
      if (class_reps[c].dim != leaf_reps[i].dim) continue;
      if (equivalence_unitary(leaf_reps[i], class_reps[c], tol)) {
        leaf_class[i] = static_cast<int>(c);
        break;
      }
    }
    if (leaf_class[i] < 0) {
      leaf_class[i] = static_cast<int>(class_reps.size());
      class_reps.push_back(leaf_reps[i]);
      class_members.emplace_back();
    }
    class_members[leaf_class[i]].push_back(static_cast<int>(i));
  }

  // Deterministic class order: dimension, then character.
  std::vector<int> order(class_reps.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::vector<std::vector<std::pair<long long, long long>>> keys;
  keys.reserve(class_reps.size());
  for (const auto& r : class_reps) keys.push_back(character_key(r));
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (class_reps[a].dim != class_reps[b].dim)
      return class_reps[a].dim < class_reps[b].dim;
    return keys[a] < keys[b];
  });

  int total = 0;
  for (size_t rank = 0; rank < order.size(); ++rank) {
    const int c = order[rank];
    out.classes.emplace_back(class_reps[c],
                             static_cast<int>(class_members[c].size()));
    for (int leaf : class_members[c]) {
      // Align the embedding so the compression equals the class
      // representative, not just an equivalent copy.
      auto u = equivalence_unitary(leaf_reps[leaf], class_reps[c], tol);
      if (!u) fail("SplitFailed", "class alignment lost under perturbation");
      out.pieces.push_back({static_cast<int>(rank), leaves[leaf] * u->adjoint()});
    }
    total += class_reps[c].dim * static_cast<int>(class_members[c].size());
  }
  if (total != rep.dim) fail("SplitFailed", "dimension mismatch after splitting");
  return out;
}

std::vector<UnitaryRep> irreducibles(const GroupPtr& g, std::uint64_t seed,
                                     double tol) {
  const Decomposition dec = decompose_rep(left_regular(g), seed, tol);
  std::vector<UnitaryRep> out;
  out.reserve(dec.classes.size());
  for (const auto& [rep, mult] : dec.classes) out.push_back(rep);
  return out;
}

int hom_dimension(const UnitaryRep& pi1, const UnitaryRep& pi2, double tol) {
  return static_cast<int>(intertwiner_space(pi1, pi2, tol).size());
}

UnitaryRep conjugate_rep(const UnitaryRep& rep, const Matrix& u) {
  UnitaryRep out;
  out.group = rep.group;
  out.dim = rep.dim;
  out.mats.reserve(rep.mats.size());
  for (const auto& m : rep.mats) out.mats.push_back(u.adjoint() * m * u);
  return out;
}

}  // namespace imprim
