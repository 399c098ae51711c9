#include "imprim/frames.hpp"

#include <cmath>

namespace imprim {

namespace {

void check_dims(const AdmissibleMap& a) {
  if (a.a.rows() != a.sigma.dim || a.a.cols() != a.pi.dim)
    fail("DimensionMismatch", "A must be dim(sigma) x dim(pi)");
  if (!same_group(*a.sub.parent, *a.pi.group))
    fail("DimensionMismatch", "H is not a subgroup of pi's group");
  if (!same_group(*a.sigma.group, *a.sub.group))
    fail("DimensionMismatch", "sigma is not a representation of H");
}

InducedRep build_model(const AdmissibleMap& a) {
  return induce(a.sigma, coset_space(a.pi.group, a.sub), a.theta);
}

}  // namespace

AdmissibilityReport check_admissible(const AdmissibleMap& a, double tol) {
  check_dims(a);
  validate_theta(a.theta);
  AdmissibilityReport report;
  const ModularData modular;
  for (int i = 0; i < a.sub.order(); ++i) {
    const int h = a.sub.elements[i];
    const double r =
        (a.sigma.at(i) * a.a - modular.sqrt_ratio(h) * a.a * a.pi.at(h)).norm();
    report.semi_residual = std::max(report.semi_residual, r);
  }
  const SpectralDecomposition sd = herm_eig(frame_operator(a), std::max(tol, 1e-9));
  report.beta = sd.eigenvalues.size() ? sd.eigenvalues(sd.eigenvalues.size() - 1) : 0.0;
  report.pass = report.semi_residual <= tol * (1.0 + a.a.norm());
  return report;
}

Matrix frame_operator(const AdmissibleMap& a) {
  const GroupPtr g = a.pi.group;
  const Matrix gram = a.a.adjoint() * a.a;
  Matrix acc = Matrix::Zero(a.pi.dim, a.pi.dim);
  for (int x = 0; x < g->order(); ++x)
    acc += a.theta.values[x] * a.pi.at(x) * gram * a.pi.at(x).adjoint();
  return acc;
}

Matrix wavelet_matrix(const AdmissibleMap& a, const InducedRep& ind) {
  const int k = ind.block_dim();
  Matrix w(ind.rep.dim, a.pi.dim);
  for (int x = 0; x < ind.blocks(); ++x)
    w.middleRows(x * k, k) =
        a.a * a.pi.at(a.pi.group->inv(ind.space.reps[x]));
  return w;
}

WaveletOp wavelet_operator(const AdmissibleMap& a, double tol) {
  const AdmissibilityReport report = check_admissible(a, tol);
  if (!report.pass)
    fail("NotAdmissible",
         "semi-invariance residual " + std::to_string(report.semi_residual));
  WaveletOp out{Matrix(), build_model(a)};
  out.w = wavelet_matrix(a, out.ind);
  return out;
}

std::pair<double, double> frame_bounds(const AdmissibleMap& a) {
  const SpectralDecomposition sd = herm_eig(frame_operator(a), 1e-9);
  if (!sd.eigenvalues.size()) return {0.0, 0.0};
  return {std::max(sd.eigenvalues(0), 0.0), sd.eigenvalues(sd.eigenvalues.size() - 1)};
}

bool is_tight(const AdmissibleMap& a, double tol) {
  const Matrix phi = frame_operator(a);
  return (phi - Matrix::Identity(phi.rows(), phi.cols())).norm() <=
         tol * (1.0 + phi.norm());
}

AdmissibleMap tighten(const AdmissibleMap& a, double tol) {
  const auto [alpha, beta] = frame_bounds(a);
  if (alpha <= tol * (1.0 + beta))
    fail("NotAFrame", "lower frame bound is " + std::to_string(alpha));
  WaveletOp wop = wavelet_operator(a, tol);
  const Matrix w0 = polar_decompose(wop.w, tol).isometry;
  AdmissibleMap tight = a;
  // Base-coset representative is the identity, so A_0 v = (W_0 v)(e) is the
  // leading block row.
  tight.a = w0.topRows(a.sigma.dim);
  return tight;
}

AdmissibleMap admissible_from_intertwiner(const Matrix& w, const UnitaryRep& pi,
                                          const InducedRep& ind, double tol) {
  if (w.rows() != ind.rep.dim || w.cols() != pi.dim)
    fail("DimensionMismatch", "W must map H_pi into the induced model");
  double residual = 0.0;
  for (int g : pi.group->generating_set())
    residual = std::max(residual, (w * pi.at(g) - ind.rep.at(g) * w).norm());
  if (residual > tol * (1.0 + w.norm()))
    fail("NotIntertwining", "intertwining residual " + std::to_string(residual));

  AdmissibleMap a;
  a.a = w.topRows(ind.block_dim());
  a.pi = pi;
  a.sigma = ind.sigma;
  a.sub = ind.space.subgroup;
  a.theta = ind.theta;
  return a;
}

SquareIntegrability square_integrable_mod(const UnitaryRep& pi, const Subgroup& h,
                                          const UnitaryRep& sigma,
                                          std::uint64_t seed, double tol) {
  if (!same_group(*h.parent, *pi.group))
    fail("DimensionMismatch", "H is not a subgroup of pi's group");
  const ThetaWeight theta = theta_uniform(h);
  const InducedRep ind = induce(sigma, coset_space(pi.group, h), theta);

  SquareIntegrability result;
  result.verdict = true;
  const Decomposition dec = decompose_rep(pi, seed, tol);
  for (const auto& [constituent, mult_pi] : dec.classes) {
    const int mult_ind = hom_dimension(constituent, ind.rep, tol);
    result.multiplicities.emplace_back(mult_pi, mult_ind);
    if (mult_pi > mult_ind) result.verdict = false;
  }
  if (!result.verdict) return result;

  // Build a tight witness: a generic intertwiner is injective once the
  // multiplicities dominate, and its polar part is an isometry.
  Prng rng(seed ^ 0x5a71f1edULL);
  for (int attempt = 0; attempt < 8; ++attempt) {
    const Matrix w =
        project_to_hom(pi, ind.rep, random_matrix(rng, ind.rep.dim, pi.dim));
    Eigen::JacobiSVD<Matrix> svd(w);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(sv.size() - 1) <= 1e-8 * (1.0 + sv(0))) continue;
    AdmissibleMap witness;
    witness.a = polar_decompose(w, tol).isometry.topRows(ind.block_dim());
    witness.pi = pi;
    witness.sigma = sigma;
    witness.sub = h;
    witness.theta = theta;
    if (is_tight(witness, std::max(tol, 1e-9))) {
      result.witness = std::move(witness);
      return result;
    }
  }
  fail("SplitFailed", "no injective intertwiner found; retry with a new seed");
}

}  // namespace imprim
