import cmath

import numpy as np
import pytest

import coronakit as ck


def test_szego_kernel_closed_form():
    k = ck.Kernel(ck.KernelSpec.szego())
    z, w = 0.3 + 0.2j, -0.1 + 0.5j
    assert abs(k(z, w) - 1.0 / (1.0 - z * w.conjugate())) < 1e-14
    assert abs(k.normalized(z, z) - cmath.sqrt(k(z, z))) < 1e-12


def test_ball_kernel_accepts_vectors():
    k = ck.Kernel(ck.KernelSpec.of(ck.KernelFamily.hardy_ball, 2))
    x = np.array([0.2 + 0.1j, -0.3j])
    assert abs(k(x, x) - 1.0 / (1.0 - np.vdot(x, x).real) ** 2) < 1e-12


def test_domain_error_is_raised():
    k = ck.Kernel(ck.KernelSpec.szego())
    with pytest.raises(ck.DomainError):
        k(1.5, 0.0)
    assert issubclass(ck.DomainError, ck.CoronakitError)


def test_gram_is_positive_and_interpolates_constant():
    pts = ck.PointSet.disk([0.0, 0.5, -0.4j, 0.3 + 0.3j])
    G = ck.build_gram(ck.KernelSpec.szego(), pts)
    assert G.min_eigenvalue > 0.0
    assert np.allclose(G.entries, G.entries.conj().T)
    rep = ck.min_norm_interpolation(G.entries, np.ones(4, dtype=complex))
    assert abs(rep.value - 1.0) < 1e-9


def test_rescaling_roundtrip():
    rng = np.random.default_rng(7)
    pts = ck.PointSet.disk(list(0.6 * rng.random(5) * np.exp(2j * np.pi * rng.random(5))))
    k = ck.build_gram(ck.KernelSpec.szego(), pts).entries
    psi = np.exp(1j * rng.random(5)) * (1.0 + rng.random(5))
    res = ck.check_rescaling(ck.apply_rescaling(k, psi), k)
    assert res.is_rescaling
    K = ck.apply_rescaling(ck.apply_rescaling(k, psi), 1.0 / res.witness.psi)
    assert np.max(np.abs(K - k)) < 1e-8


def test_bezout_solution_meets_constraint():
    pts = ck.PointSet.disk([0.0, 0.4, -0.5j, 0.2 - 0.6j])
    zs = np.array([0.0, 0.4, -0.5j, 0.2 - 0.6j])
    phi = np.column_stack([zs, 1.0 - zs])
    sol = ck.solve_bezout_min_norm(ck.KernelSpec.szego(), pts, phi, np.ones(4, dtype=complex))
    assert sol.residual < 1e-9
    assert ck.bezout_residual(phi, sol.g.values, np.ones(4, dtype=complex)) < 1e-9


def test_simplex_projection():
    v = ck.project_to_simplex([0.4, 2.0, -1.0])
    assert abs(sum(v) - 1.0) < 1e-14
    assert min(v) >= 0.0


def test_outer_function_has_unit_norm():
    shift = ck.ShiftConfig([0.5, -0.3j], [0.2, 0.5, 0.3])
    F = ck.construct_outer(shift, 1024)
    assert abs(F.h2_norm() - 1.0) < 1e-9
    assert F(0.0).real > 0.0
    assert ck.verify_outer_identity(F, shift, 4).max_discrepancy < 1e-7


def test_imp_falsifier():
    rep = ck.falsify_report(ck.FalsifierConfig.standard(0.5, 2))
    assert rep.falsified
    assert rep.min_laplacian > 0.0


def test_carleson_single_mass():
    mu = ck.DiscreteMeasure.disk([0.5], [0.25])
    assert ck.box_norm(mu, 0.5, 2.0).value > 0.0
    assert ck.testing_norm(mu, 0.5, 2.0, [0.0, 0.5]) > 0.0
    z = 0.1 + 0.2j
    assert abs(ck.pompeiu_point_masses(mu, z) - 0.25 / (cmath.pi * (z - 0.5))) < 1e-14


def test_power_series_algebra():
    a = ck.PowerSeries1D([1.0, 2.0])
    b = ck.PowerSeries1D([0.0, 1.0])
    c = a * b
    assert abs(c(0.5) - a(0.5) * b(0.5)) < 1e-14
    assert abs(a.derivative_at(0.3, 1) - 2.0) < 1e-14


def test_cauchy_pompeiu_constant_data():
    g = ck.GridField.sample(ck.PolarMesh.make(32, 64), lambda z: 1.0 + 0j)
    u = ck.CauchyPompeiuSolver(g)
    z = 0.3 - 0.4j
    assert abs(u(z) - z.conjugate()) < 1e-10


def test_koszul_corona():
    phi = [ck.PowerSeries1D([0.0, 0.0, 1.0]), ck.PowerSeries1D([1.0, -1.0])]
    c = ck.certify_lower_bound(phi)
    rep = ck.koszul_corona_disk(phi, c)
    assert rep.residual < 1e-4
    assert len(rep.f) == 2
