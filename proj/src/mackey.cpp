#include "imprim/mackey.hpp"

#include <cmath>
#include <limits>

namespace imprim {

namespace {

double rank_cutoff(const RealVector& eigenvalues, int dim, double tol) {
  const double top = eigenvalues.size()
                         ? std::max(std::abs(eigenvalues(0)),
                                    std::abs(eigenvalues(eigenvalues.size() - 1)))
                         : 0.0;
  return tol * dim * std::max(1.0, top);
}

}  // namespace

Matrix m_of_f(const Povm& e, const std::vector<Complex>& f) {
  const std::vector<Complex> averaged = weil_average(e.space, f);
  Matrix acc = Matrix::Zero(e.pi.dim, e.pi.dim);
  for (int x = 0; x < e.space.size(); ++x) acc += averaged[x] * e.atoms[x];
  return acc;
}

Matrix phi_form(const Povm& e) { return e.atoms[e.space.base_point()]; }

MackeyResult extract(const Povm& e, double tol,
                     const std::optional<ThetaWeight>& theta_opt) {
  const PovmReport validity = validate_povm(e, std::max(tol, 1e-9));
  if (!validity.pass) {
    if (validity.total_min_eigenvalue <= 0)
      fail("NotInjective", "E(X) is not injective");
    fail("ValidationError", "input is not a covariant localisation observable");
  }

  const GroupPtr g = e.pi.group;
  const Subgroup& h = e.space.subgroup;
  const int n = e.pi.dim;
  const int m = e.space.size();

  // K = range(E({o})) carried by the significant eigenvectors; A maps a
  // vector to its class, realized as V* S with S the PSD square root.
  const Matrix phi = phi_form(e);
  const SpectralDecomposition sd = herm_eig(phi, std::max(tol, 1e-9));
  const double cutoff = rank_cutoff(sd.eigenvalues, n, tol);
  std::vector<int> keep;
  for (Eigen::Index i = 0; i < sd.eigenvalues.size(); ++i)
    if (sd.eigenvalues(i) > cutoff) keep.push_back(static_cast<int>(i));
  const int r = static_cast<int>(keep.size());
  if (r == 0)
    fail("ExtractionInconsistent", "E({o}) vanishes but E(X) is injective");
  Matrix carrier(n, r);
  for (int j = 0; j < r; ++j) carrier.col(j) = sd.eigenvectors.col(keep[j]);
  const Matrix root = psd_sqrt(phi, std::max(tol, 1e-9));

  MackeyResult result;

  // sigma_E(h) = compression of pi(h) to K; unitary because covariance fixes
  // the base point, so pi(h) commutes with E({o}).
  result.sigma_e.group = h.group;
  result.sigma_e.dim = r;
  result.sigma_e.mats.reserve(h.order());
  for (int e_h : h.elements)
    result.sigma_e.mats.push_back(carrier.adjoint() * e.pi.at(e_h) * carrier);

  result.a_map.a = carrier.adjoint() * root;
  result.a_map.pi = e.pi;
  result.a_map.sigma = result.sigma_e;
  result.a_map.sub = h;
  result.a_map.theta = theta_opt ? *theta_opt : theta_uniform(h);
  if (!same_group(*result.a_map.theta.sub.parent, *g))
    fail("GroupMismatch", "theta does not live on the group of the system");

  const AdmissibilityReport admissibility = check_admissible(result.a_map, tol);
  if (!admissibility.pass)
    fail("ExtractionInconsistent",
         "extracted map is not semi-invariant: " +
             std::to_string(admissibility.semi_residual));

  result.ind = induce(result.sigma_e, e.space, result.a_map.theta);
  const Matrix wa = wavelet_matrix(result.a_map, result.ind);
  result.e_of_x = e.total();
  const Matrix root_x = psd_sqrt(result.e_of_x, std::max(tol, 1e-9));
  result.w = wa * pinv(root_x, tol);

  // (uno) intertwining of W.
  for (int a = 0; a < g->order(); ++a)
    result.residuals.uno =
        std::max(result.residuals.uno,
                 (result.w * e.pi.at(a) - result.ind.rep.at(a) * result.w).norm());

  // (due) atom-wise reconstruction through the canonical measure.
  const int k = result.ind.block_dim();
  for (int x = 0; x < m; ++x) {
    const Matrix wx = result.w.middleRows(x * k, k);
    const Matrix rebuilt = root_x * (wx.adjoint() * wx) * root_x;
    result.residuals.due =
        std::max(result.residuals.due, (rebuilt - e.atoms[x]).norm());
  }

  // (tre) the translates L({x}) W span the induced space.
  Matrix stacked(result.ind.rep.dim, static_cast<Eigen::Index>(m) * n);
  stacked.setZero();
  for (int x = 0; x < m; ++x)
    stacked.block(x * k, static_cast<Eigen::Index>(x) * n, k, n) =
        result.w.middleRows(x * k, k);
  Eigen::JacobiSVD<Matrix> svd(stacked);
  const auto& sv = svd.singularValues();
  const double sv_cut =
      tol * std::max<Eigen::Index>(stacked.rows(), stacked.cols()) *
      (sv.size() ? sv(0) : 0.0);
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > sv_cut) ++rank;
  result.residuals.tre_rank = rank;
  result.residuals.tre_expected = m * r;

  result.residuals.isometry =
      (result.w.adjoint() * result.w - Matrix::Identity(n, n)).norm();

  const double gate = tol * (1.0 + result.e_of_x.norm());
  if (result.residuals.uno > gate || result.residuals.due > gate ||
      result.residuals.isometry > gate ||
      result.residuals.tre_rank != result.residuals.tre_expected)
    fail("ExtractionInconsistent", "postcondition residual exceeds tolerance");
  return result;
}

ProjectivityReport projectivity_check(const MackeyResult& result, const Povm& e,
                                      double tol) {
  ProjectivityReport report;
  report.projective = is_projective(e, tol);
  const Matrix wa = result.w * psd_sqrt(result.e_of_x, std::max(tol, 1e-9));
  const bool square = wa.rows() == wa.cols();
  const double gate = tol * (1.0 + result.e_of_x.norm());
  report.wa_unitary =
      square &&
      (wa.adjoint() * wa - Matrix::Identity(wa.cols(), wa.cols())).norm() <= gate &&
      (wa * wa.adjoint() - Matrix::Identity(wa.rows(), wa.rows())).norm() <= gate;
  return report;
}

UniquenessReport sigma_uniqueness_check(const Povm& e1, const Povm& e2,
                                        const Matrix& t_equiv, double tol) {
  const double gate = tol * (1.0 + t_equiv.norm());
  if (t_equiv.rows() != e2.pi.dim || t_equiv.cols() != e1.pi.dim)
    fail("NotAnEquivalence", "T has the wrong shape");
  if ((t_equiv.adjoint() * t_equiv - Matrix::Identity(e1.pi.dim, e1.pi.dim)).norm() >
          gate ||
      (t_equiv * t_equiv.adjoint() - Matrix::Identity(e2.pi.dim, e2.pi.dim)).norm() >
          gate)
    fail("NotAnEquivalence", "T is not unitary");
  for (int g = 0; g < e1.pi.group->order(); ++g)
    if ((t_equiv * e1.pi.at(g) - e2.pi.at(g) * t_equiv).norm() > gate)
      fail("NotAnEquivalence", "T does not intertwine the representations");
  for (int x = 0; x < e1.space.size(); ++x)
    if ((t_equiv * e1.atoms[x] - e2.atoms[x] * t_equiv).norm() > gate)
      fail("NotAnEquivalence", "T does not transport the measure");

  const MackeyResult r1 = extract(e1, tol);
  const MackeyResult r2 = extract(e2, tol);

  UniquenessReport report;
  // t A = A' T on all of H_pi; A has full row rank, so t is determined.
  const Matrix t = r2.a_map.a * t_equiv * pinv(r1.a_map.a, tol);
  report.transport_residual = (t * r1.a_map.a - r2.a_map.a * t_equiv).norm();
  const int r = r1.sigma_e.dim;
  report.unitarity_residual =
      r2.sigma_e.dim == r
          ? std::max((t.adjoint() * t - Matrix::Identity(r, r)).norm(),
                     (t * t.adjoint() - Matrix::Identity(r, r)).norm())
          : std::numeric_limits<double>::infinity();
  for (int i = 0; i < r1.sigma_e.group->order(); ++i)
    report.intertwine_residual =
        std::max(report.intertwine_residual,
                 (t * r1.sigma_e.at(i) - r2.sigma_e.at(i) * t).norm());

  const double pass_gate = tol * (1.0 + r1.a_map.a.norm());
  report.pass = report.transport_residual <= pass_gate &&
                report.unitarity_residual <= pass_gate &&
                report.intertwine_residual <= pass_gate;
  return report;
}

TorusFixture torus_fixture(int n) {
  if (n < 4 || n % 2 != 0)
    fail("UnsupportedParams", "torus discretization needs an even n >= 4");

  TorusFixture fx;
  fx.group = catalog("Z" + std::to_string(n));
  const Subgroup h = trivial_subgroup(fx.group);
  const CosetSpace x = coset_space(fx.group, h);

  const double step = 2.0 * M_PI / n;
  fx.pi.group = fx.group;
  fx.pi.dim = 2;
  for (int j = 0; j < n; ++j) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = std::polar(1.0, step * j);
    m(1, 1) = std::polar(1.0, 2.0 * step * j);
    fx.pi.mats.push_back(std::move(m));
  }

  fx.e.space = x;
  fx.e.pi = fx.pi;
  for (int j = 0; j < n; ++j)
    fx.e.atoms.push_back(Matrix::Identity(2, 2) / static_cast<double>(n));

  // Two candidate pairings of the frequency +-1 Fourier coefficients with the
  // off-diagonal matrix units; only one is covariant and the validator picks
  // it. The printed residual of the other is kept for the report.
  auto build = [&](bool flipped) {
    Povm ep;
    ep.space = x;
    ep.pi = fx.pi;
    for (int j = 0; j < n; ++j) {
      Matrix atom = Matrix::Identity(2, 2) / static_cast<double>(n);
      const Complex z = std::polar(1.0, step * j);
      const Complex lower = flipped ? z : std::conj(z);  // coefficient of |f2><f1|
      atom(1, 0) += fx.offdiag_scale * lower / static_cast<double>(n);
      atom(0, 1) += fx.offdiag_scale * std::conj(lower) / static_cast<double>(n);
      ep.atoms.push_back(std::move(atom));
    }
    return ep;
  };

  const Povm printed = build(false);
  const Povm flipped = build(true);
  const PovmReport printed_report = validate_povm(printed, 1e-9);
  if (printed_report.pass) {
    fx.e_prime = printed;
    fx.orientation_flipped = false;
    fx.printed_orientation_residual = printed_report.covariance_residual;
  } else {
    const PovmReport flipped_report = validate_povm(flipped, 1e-9);
    if (!flipped_report.pass)
      fail("ValidationError", "neither orientation of E' is covariant");
    fx.e_prime = flipped;
    fx.orientation_flipped = true;
    fx.printed_orientation_residual = printed_report.covariance_residual;
  }

  fx.e_projective = is_projective(fx.e, 1e-9);
  return fx;
}

}  // namespace imprim
