import numpy as np
import pytest

import imprim


def a3_inside_s3():
    s3 = imprim.catalog("S3")
    cycle = next(
        a
        for a in range(1, s3.order)
        if a != s3.identity and s3.mul(a, s3.mul(a, a)) == s3.identity
    )
    return s3, imprim.subgroup_from_generators(s3, [cycle])


def test_catalog_and_group_basics():
    s3 = imprim.catalog("S3")
    assert s3.order == 6
    assert not s3.is_abelian()
    assert imprim.catalog("Heis3").order == 27
    with pytest.raises(imprim.Error):
        imprim.catalog("S99")


def test_induction_and_frobenius():
    s3, a3 = a3_inside_s3()
    sigma = next(r for r in imprim.irreducibles(a3.group) if r.dim == 1
                 and abs(r.at(1)[0, 0] - 1) > 0.5)
    ind = imprim.induce(sigma, imprim.coset_space(s3, a3), imprim.theta_uniform(a3))
    assert ind.rep.dim == 2
    assert imprim.validate_rep(ind.rep).pass_

    for pi in imprim.irreducibles(s3):
        lhs = imprim.hom_dimension(pi, ind.rep)
        rhs = imprim.hom_dimension(imprim.restrict_rep(pi, a3), sigma)
        assert lhs == rhs


def test_mackey_extraction_roundtrip():
    s3, a3 = a3_inside_s3()
    sigma = imprim.irreducibles(a3.group)[-1]
    ind = imprim.induce(sigma, imprim.coset_space(s3, a3), imprim.theta_uniform(a3))
    povm = imprim.canonical_povm(ind)
    assert imprim.is_projective(povm)

    result = imprim.extract(povm)
    res = result.residuals
    assert res["uno"] <= 1e-10
    assert res["due"] <= 1e-10
    assert res["isometry"] <= 1e-10
    assert res["tre_rank"] == res["tre_expected"]
    assert imprim.equivalence_unitary(result.sigma_e, sigma) is not None
    projective, wa_unitary = imprim.projectivity_check(result, povm)
    assert projective and wa_unitary


def test_random_compression_is_covariant():
    s3 = imprim.catalog("S3")
    e = imprim.trivial_subgroup(s3)
    ind = imprim.induce(
        imprim.trivial_rep(e.group), imprim.coset_space(s3, e), imprim.theta_uniform(e)
    )
    povm = imprim.random_covariant_povm(ind, seed=5)
    report = imprim.validate_povm(povm)
    assert report.pass_
    assert report.covariance_residual <= 1e-11
    result = imprim.extract(povm)
    assert result.residuals["due"] <= 1e-10


def test_torus_fixture_flags():
    fx = imprim.torus_fixture(8)
    assert fx["orientation_flipped"]
    assert not fx["e_projective"]
    verdict, _ = imprim.systems_equivalent(fx["e"], fx["e_prime"])
    assert verdict in ("inequivalent", "undetermined")


def test_cwt_energy_and_matrices_as_numpy():
    grid = imprim.reference_time_grid()
    psi = imprim.reference_wavelet(grid)
    chirp = imprim.reference_chirp(grid)
    report = imprim.cwt_energy_report(chirp, psi, imprim.reference_cwt_grid())
    assert report["rel_err"] <= 0.01

    coeffs = imprim.cwt_forward(chirp, psi, imprim.reference_cwt_grid())
    assert isinstance(coeffs, np.ndarray)
    assert coeffs.shape == (49, 1024)


def test_stft_isometry():
    grid = imprim.reference_time_grid()
    g = imprim.gaussian_window(grid)
    report = imprim.stft_isometry_check(g, g, imprim.reference_stft_grid())
    assert report["rel_err"] <= 1e-6
