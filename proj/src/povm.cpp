#include "imprim/povm.hpp"

#include <cmath>
#include <limits>

namespace imprim {

Matrix Povm::total() const {
  Matrix acc = Matrix::Zero(pi.dim, pi.dim);
  for (const auto& atom : atoms) acc += atom;
  return acc;
}

Matrix Povm::of(const std::vector<int>& subset) const {
  Matrix acc = Matrix::Zero(pi.dim, pi.dim);
  for (int x : subset) acc += atoms[x];
  return acc;
}

PovmReport validate_povm(const Povm& e, double tol) {
  if (static_cast<int>(e.atoms.size()) != e.space.size())
    fail("DimensionMismatch", "one atom per point of X required");
  if (!same_group(*e.space.parent, *e.pi.group))
    fail("GroupMismatch", "coset space and representation disagree");

  PovmReport report;
  report.min_atom_eigenvalue = std::numeric_limits<double>::infinity();
  double scale = 0.0;
  for (const auto& atom : e.atoms) {
    if (atom.rows() != e.pi.dim || atom.cols() != e.pi.dim)
      fail("DimensionMismatch", "atom size does not match the representation");
    const SpectralDecomposition sd = herm_eig(atom, std::max(tol, 1e-9));
    report.min_atom_eigenvalue =
        std::min(report.min_atom_eigenvalue, sd.eigenvalues(0));
    scale = std::max(scale, std::abs(sd.eigenvalues(sd.eigenvalues.size() - 1)));
  }

  const SpectralDecomposition total = herm_eig(e.total(), std::max(tol, 1e-9));
  report.total_min_eigenvalue = total.eigenvalues(0);

  for (int g = 0; g < e.pi.group->order(); ++g)
    for (int x = 0; x < e.space.size(); ++x) {
      const Matrix moved =
          e.pi.at(g) * e.atoms[x] * e.pi.at(g).adjoint() - e.atoms[e.space.action(g, x)];
      report.covariance_residual = std::max(report.covariance_residual, moved.norm());
    }

  const double gate = tol * (1.0 + scale);
  report.pass = report.min_atom_eigenvalue >= -gate &&
                report.covariance_residual <= gate &&
                report.total_min_eigenvalue >
                    tol * e.pi.dim * std::max(1.0, total.eigenvalues(total.eigenvalues.size() - 1));
  return report;
}

bool is_normalized(const Povm& e, double tol) {
  const Matrix total = e.total();
  return (total - Matrix::Identity(total.rows(), total.cols())).norm() <=
         tol * (1.0 + total.norm());
}

bool is_projective(const Povm& e, double tol) {
  for (const auto& atom : e.atoms)
    if ((atom * atom - atom).norm() > tol * (1.0 + atom.norm())) return false;
  return true;
}

Povm normalize(const Povm& e, double tol) {
  const Matrix total = e.total();
  const SpectralDecomposition sd = herm_eig(total, std::max(tol, 1e-9));
  const double top = sd.eigenvalues(sd.eigenvalues.size() - 1);
  if (sd.eigenvalues(0) <= tol * e.pi.dim * std::max(1.0, top))
    fail("NotInjective", "E(X) is singular to working precision");
  const Matrix root_inv = pinv(psd_sqrt(total, tol), tol);
  Povm out = e;
  for (auto& atom : out.atoms) atom = root_inv * atom * root_inv;
  return out;
}

Povm canonical_povm(const InducedRep& ind) {
  Povm e;
  e.space = ind.space;
  e.pi = ind.rep;
  const int k = ind.block_dim();
  for (int x = 0; x < ind.blocks(); ++x) {
    Matrix atom = Matrix::Zero(ind.rep.dim, ind.rep.dim);
    atom.block(x * k, x * k, k, k) = Matrix::Identity(k, k);
    e.atoms.push_back(std::move(atom));
  }
  return e;
}

CompressedSystem compress_povm(const InducedRep& ind, const Matrix& t, double tol) {
  const int n = ind.rep.dim;
  if (t.rows() != n || t.cols() != n)
    fail("DimensionMismatch", "T does not act on the induced space");
  const SpectralDecomposition sd = herm_eig(t, std::max(tol, 1e-9));
  const double top = std::max(std::abs(sd.eigenvalues(0)),
                              std::abs(sd.eigenvalues(sd.eigenvalues.size() - 1)));
  if (sd.eigenvalues(0) < -tol * (1.0 + top))
    fail("NotInCommutant", "T is not positive semidefinite");
  for (int g : ind.rep.group->generating_set())
    if ((t * ind.rep.at(g) - ind.rep.at(g) * t).norm() > tol * (1.0 + t.norm()))
      fail("NotInCommutant", "T does not commute with the induced representation");

  // Orthonormal basis of range(T) from the significant eigenvectors.
  const double cutoff = tol * n * std::max(1.0, top);
  std::vector<int> keep;
  for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i)
    if (sd.eigenvalues(i) > cutoff) keep.push_back(static_cast<int>(i));
  if (keep.empty()) fail("NotInjective", "T has trivial range");
  Matrix carrier(n, keep.size());
  for (size_t j = 0; j < keep.size(); ++j)
    carrier.col(j) = sd.eigenvectors.col(keep[j]);

  CompressedSystem out;
  out.carrier = carrier;
  out.povm.space = ind.space;
  out.povm.pi.group = ind.rep.group;
  out.povm.pi.dim = static_cast<int>(keep.size());
  out.povm.pi.mats.reserve(ind.rep.mats.size());
  for (const auto& m : ind.rep.mats)
    out.povm.pi.mats.push_back(carrier.adjoint() * m * carrier);

  const int k = ind.block_dim();
  for (int x = 0; x < ind.blocks(); ++x) {
    // T L({x}) T = (L_x T)* (L_x T) for hermitian T, and L_x T is a row slice.
    const Matrix rows = t.middleRows(x * k, k);
    out.povm.atoms.push_back(carrier.adjoint() * (rows.adjoint() * rows) * carrier);
  }
  return out;
}

CompressedSystem random_covariant_povm(const InducedRep& ind, std::uint64_t seed,
                                       double tol) {
  Prng rng(seed ^ 0xc0fa97eULL);
  const int n = ind.rep.dim;
  Matrix t = project_to_commutant(ind.rep, random_psd(rng, n));
  const bool full_rank = rng.next_u64() % 2 == 0;

  // Spectral conditioning: zero the small eigenvalues so that E(X) = T^2 is
  // well separated from singular on its carrier. Functional calculus keeps T
  // in the commutant. Half of the draws mix in a multiple of the identity
  // first, producing full-rank (injective, non-projective) systems.
  SpectralDecomposition sd = herm_eig(t, 1e-9);
  const double top = sd.eigenvalues(sd.eigenvalues.size() - 1);
  if (full_rank) {
    t += 0.75 * std::max(top, 1.0) * Matrix::Identity(n, n);
    sd = herm_eig(t, 1e-9);
  }
  const double floor = 0.35 * sd.eigenvalues(sd.eigenvalues.size() - 1);
  RealVector clipped = sd.eigenvalues;
  for (Eigen::Index i = 0; i < clipped.size(); ++i)
    if (clipped(i) < floor) clipped(i) = 0.0;
  t = sd.eigenvectors * clipped.cast<Complex>().asDiagonal() *
      sd.eigenvectors.adjoint();
  return compress_povm(ind, t, tol);
}

Povm povm_from_admissible(const AdmissibleMap& a, double tol) {
  const AdmissibilityReport report = check_admissible(a, tol);
  if (!report.pass)
    fail("NotAdmissible",
         "semi-invariance residual " + std::to_string(report.semi_residual));
  const CosetSpace space = coset_space(a.pi.group, a.sub);
  const GroupPtr g = a.pi.group;
  const Matrix gram = a.a.adjoint() * a.a;

  Povm e;
  e.space = space;
  e.pi = a.pi;
  e.atoms.assign(space.size(), Matrix::Zero(a.pi.dim, a.pi.dim));
  for (int x = 0; x < g->order(); ++x)
    e.atoms[space.proj[x]] +=
        a.theta.values[x] * a.pi.at(x) * gram * a.pi.at(x).adjoint();

  const SpectralDecomposition sd = herm_eig(e.total(), std::max(tol, 1e-9));
  if (sd.eigenvalues(0) <=
      tol * a.pi.dim * std::max(1.0, sd.eigenvalues(sd.eigenvalues.size() - 1)))
    fail("NotInjective", "E(X) = Phi_A is singular; A is not a frame");
  return e;
}

EquivalenceResult systems_equivalent(const Povm& e1, const Povm& e2, double tol) {
  if (!same_group(*e1.pi.group, *e2.pi.group))
    fail("GroupMismatch", "systems live on different groups");
  if (e1.space.size() != e2.space.size())
    fail("DimensionMismatch", "systems live on different base spaces");

  std::vector<MatrixConstraint> constraints;
  for (int g : e1.pi.group->generating_set())
    constraints.push_back(
        {e2.pi.dim, e1.pi.dim, [&e1, &e2, g](const Matrix& t) -> Matrix {
           return t * e1.pi.at(g) - e2.pi.at(g) * t;
         }});
  for (int x = 0; x < e1.space.size(); ++x)
    constraints.push_back(
        {e2.pi.dim, e1.pi.dim, [&e1, &e2, x](const Matrix& t) -> Matrix {
           return t * e1.atoms[x] - e2.atoms[x] * t;
         }});

  const std::vector<Matrix> basis =
      joint_nullspace(e2.pi.dim, e1.pi.dim, constraints, tol);
  EquivalenceResult result;
  if (basis.empty()) {
    result.verdict = Equivalence::Inequivalent;
    return result;
  }
  if (e1.pi.dim != e2.pi.dim) {
    result.verdict = Equivalence::Undetermined;
    return result;
  }

  const int d = e1.pi.dim;
  Prng rng(0x5e9a1);
  const double gate = tol * (1.0 + std::sqrt(static_cast<double>(d)));
  for (int attempt = 0; attempt < 8; ++attempt) {
    Matrix t = Matrix::Zero(d, d);
    for (const auto& b : basis) t += rng.complex_normal() * b;
    const Matrix u = polar_decompose(t, tol).isometry;
    if ((u.adjoint() * u - Matrix::Identity(d, d)).norm() > gate) continue;
    double residual = 0.0;
    for (int g = 0; g < e1.pi.group->order(); ++g)
      residual = std::max(residual, (u * e1.pi.at(g) - e2.pi.at(g) * u).norm());
    for (int x = 0; x < e1.space.size(); ++x)
      residual = std::max(residual, (u * e1.atoms[x] - e2.atoms[x] * u).norm());
    if (residual <= gate * (1.0 + e1.total().norm())) {
      result.verdict = Equivalence::Equivalent;
      result.unitary = u;
      return result;
    }
  }
  result.verdict = Equivalence::Undetermined;
  return result;
}

}  // namespace imprim
