"""Representation theorems: single Blaschke factor, isometric variants, the
recursion for products, subkernel propagation, multiplier-from-maximal."""

import numpy as np
import pytest

from conftest import (
    assert_rf_close,
    gram_identity_error,
    random_blaschke,
    random_disk_point,
    unimodular_ratio,
)

from toepkern.blaschke import BlaschkeProduct, monomial_blaschke
from toepkern.errors import CarlesonViolation, InsufficientDegree
from toepkern.expr import parse_symbol
from toepkern.hardy import inner_outer, is_outer
from toepkern.kernel_engine import (
    UnimodularSymbol,
    kernel_dim_unimodular,
    member,
    verify_maximal,
)
from toepkern.modelspace import repro_kernels, tm_basis
from toepkern.oracle import check_prediction, expand_basis, numerical_kernel, subspace_angle
from toepkern.ratfun import rational
from toepkern.representations import (
    multiplier_from_maximal,
    propagate_multiplier,
    represent_blaschke,
    represent_single,
    represent_single_isometric,
)


def rep_subspace(rep, M=64):
    sub, ok = expand_basis(rep.basis(), M)
    assert ok
    return sub


def test_represent_single_monomial():
    rep = represent_single(monomial_blaschke(2), 0.0, 0.0)
    assert_rf_close(rep.multiplier, parse_symbol("1"), 1e-12)
    assert rep.theta.degree == 1
    sym = UnimodularSymbol(monomial_blaschke(2), monomial_blaschke(1))
    assert all(member(e, sym) for e in rep.basis())


def test_represent_single_mu_equals_lambda():
    lam = 0.35 - 0.15j
    rep = represent_single(monomial_blaschke(2), lam, lam)
    # multiplier (1 - conj(lam) z)(1 + conj(lam) z) = 1 - conj(lam)^2 z^2
    expected = rational([1.0, 0.0, -np.conj(lam) ** 2])
    assert_rf_close(rep.multiplier, expected, 1e-10)
    assert np.allclose(rep.theta.zeros, [-lam])


def test_represent_single_membership_random():
    rng = np.random.default_rng(91)
    for _ in range(6):
        th = random_blaschke(rng, int(rng.integers(2, 6)), random_constant=True)
        lam = random_disk_point(rng, 0.7)
        mu = random_disk_point(rng, 0.7)
        rep = represent_single(th, lam, mu)
        sym = UnimodularSymbol(th, BlaschkeProduct(1.0, (lam,)))
        assert all(member(e, sym) for e in rep.basis())


def test_represent_single_isometric_z2():
    rep = represent_single_isometric(monomial_blaschke(2), 0.5)
    expected = rational(np.array([1.0, 0.0, -0.25]) / np.sqrt(1 - 0.0625))
    assert_rf_close(rep.multiplier, expected, 1e-10)
    assert gram_identity_error(rep.basis()) < 1e-8


def test_represent_single_isometric_random():
    rng = np.random.default_rng(97)
    for _ in range(6):
        th = random_blaschke(rng, int(rng.integers(2, 6)), random_constant=True)
        lam = random_disk_point(rng, 0.7)
        rep = represent_single_isometric(th, lam)
        assert rep.isometric
        assert gram_identity_error(rep.basis()) < 1e-8
        sym = UnimodularSymbol(th, BlaschkeProduct(1.0, (lam,)))
        assert all(member(e, sym) for e in rep.basis())


def test_represent_single_needs_degree():
    with pytest.raises(InsufficientDegree):
        represent_single(monomial_blaschke(1), 0.0, 0.0)


def test_represent_blaschke_monomial_cases():
    reps = represent_blaschke(monomial_blaschke(2), [0.0])
    for rep in (reps.plain, reps.isometric, reps.hayashi):
        assert rep.dim == 1
        assert_rf_close(rep.multiplier, parse_symbol("1"), 1e-12)
    reps3 = represent_blaschke(monomial_blaschke(3), [0.0, 0.0])
    assert reps3.plain.dim == 1
    assert_rf_close(reps3.plain.multiplier, parse_symbol("1"), 1e-12)


def test_represent_blaschke_pipeline():
    th = BlaschkeProduct(1.0, (0.0, 0.0, 0.5))
    reps = represent_blaschke(th, [0.3, -0.2])
    sym = reps.symbol
    assert kernel_dim_unimodular(sym) == 1
    for rep in (reps.plain, reps.isometric, reps.hayashi):
        assert rep.dim == 1
        assert all(member(e, sym) for e in rep.basis())
    assert gram_identity_error(reps.isometric.basis()) < 1e-8
    assert is_outer(reps.hayashi.multiplier)
    assert abs(reps.hayashi.theta(0.0)) < 1e-10
    report = check_prediction(sym.to_rational(), reps.isometric.basis(), 64)
    assert report.agreed


def test_represent_blaschke_plain_iso_same_subspace():
    rng = np.random.default_rng(101)
    for _ in range(5):
        deg = int(rng.integers(2, 6))
        th = random_blaschke(rng, deg, random_constant=True)
        n = int(rng.integers(1, deg))
        lams = [random_disk_point(rng, 0.7) for _ in range(n)]
        reps = represent_blaschke(th, lams)
        a = rep_subspace(reps.plain, 96)
        b = rep_subspace(reps.isometric, 96)
        assert subspace_angle(a, b) < 1e-7


def test_represent_blaschke_permutation_invariance():
    th = BlaschkeProduct(1.0, (0.0, 0.2, 0.5, -0.3j))
    lams = [0.3, -0.2, 0.1j]
    r1 = represent_blaschke(th, lams)
    r2 = represent_blaschke(th, lams[::-1])
    a = rep_subspace(r1.isometric, 96)
    b = rep_subspace(r2.isometric, 96)
    assert subspace_angle(a, b) < 1e-7


def test_represent_blaschke_hayashi_pinning():
    th = BlaschkeProduct(1.0, (0.1, 0.4, -0.2))
    r1 = represent_blaschke(th, [0.3])
    r2 = represent_blaschke(th, [0.3], probe=0.41 - 0.23j)
    unimodular_ratio(r1.hayashi.multiplier, r2.hayashi.multiplier, tol=1e-9)


def test_represent_blaschke_insufficient():
    with pytest.raises(InsufficientDegree):
        represent_blaschke(monomial_blaschke(2), [0.1, 0.2])


def test_propagate_identity_multiplier():
    th = BlaschkeProduct(1.0, (0.0, 0.3, 0.5))
    from toepkern.kernel_engine import KernelRep

    base = KernelRep(multiplier=parse_symbol("1"), theta=th, isometric=True)
    rep = propagate_multiplier(base, monomial_blaschke(1))
    ref = represent_blaschke(th, [0.0])
    sym = UnimodularSymbol(th, monomial_blaschke(1))
    assert all(member(e, sym) for e in rep.basis())
    a, _ = expand_basis(rep.basis(), 64)
    b, _ = expand_basis(ref.isometric.basis(), 64)
    assert subspace_angle(a, b) < 1e-7


def test_propagate_alpha_divides_theta():
    # alpha | theta: the result is w K_{theta/alpha} with the same multiplier
    th = BlaschkeProduct(1.0, (0.0, 0.25, -0.3))
    alpha = BlaschkeProduct(1.0, (0.25,))
    from toepkern.kernel_engine import KernelRep

    w = parse_symbol("1/(1-0.5*z)")
    base = KernelRep(multiplier=w, theta=th, isometric=False)
    rep = propagate_multiplier(base, alpha)
    assert rep.theta.degree == 2
    assert rep.multiplier is w


def test_propagate_crofoot_composite():
    # Crofoot: K_{th_p} = m K_th isometrically; propagating by alpha gives
    # ker T_{conj(th_p) alpha} = m * (recursion representation for (th, alpha))
    from toepkern.kernel_engine import KernelRep
    from toepkern.modelspace import crofoot

    th = BlaschkeProduct(1.0, (0.0, 0.2, -0.4))
    p = 0.3 - 0.1j
    m, th_p = crofoot(th, p)
    base = KernelRep(multiplier=m, theta=th, isometric=True)
    alpha = BlaschkeProduct(1.0, (0.15,))
    rep = propagate_multiplier(base, alpha)
    assert rep.isometric
    assert gram_identity_error(rep.basis()) < 1e-8
    sym = UnimodularSymbol(th_p, alpha)
    assert all(member(e, sym) for e in rep.basis())
    report = check_prediction(sym.to_rational(), rep.basis(), 64)
    assert report.agreed


def test_multiplier_from_maximal_plain():
    sym = UnimodularSymbol(monomial_blaschke(2))
    cert = verify_maximal(parse_symbol("z"), sym)
    rep = multiplier_from_maximal(cert)
    assert rep.theta.degree == 2
    assert_rf_close(rep.multiplier, parse_symbol("1"), 1e-12)


def test_multiplier_from_maximal_generic():
    # f = difference-quotient kernel at 0: outer factor is invertible, so
    # K_theta = k_0 K_{z I}
    th = BlaschkeProduct(1.0, (0.2, -0.3, 0.4j))
    sym = UnimodularSymbol(th)
    k0, kt0 = repro_kernels(th, 0.0)
    cert = verify_maximal(kt0, sym)
    rep = multiplier_from_maximal(cert)
    assert rep.dim == th.degree
    assert all(member(e, sym) for e in rep.basis())
    report = check_prediction(sym.to_rational(), rep.basis(), 64)
    assert report.agreed


def test_multiplier_from_maximal_carleson_violation():
    sym = UnimodularSymbol(monomial_blaschke(2))
    cert = verify_maximal(parse_symbol("1+z"), sym)
    with pytest.raises(CarlesonViolation):
        multiplier_from_maximal(cert)


def test_multiplier_from_maximal_shifted():
    th = BlaschkeProduct(1.0, (0.2, -0.3, 0.4j))
    sym = UnimodularSymbol(th)
    _, kt0 = repro_kernels(th, 0.0)
    cert = verify_maximal(kt0, sym)
    lam = 0.25 + 0.1j
    rep = multiplier_from_maximal(cert, lam=lam)
    sub = sym.times_inner(BlaschkeProduct(1.0, (lam,)))
    assert rep.dim == th.degree - 1
    assert all(member(e, sub) for e in rep.basis())
