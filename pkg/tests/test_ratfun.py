"""Rational-function layer: classification bands, boundary conjugation, the
analytic projection, and circle inner products."""

import numpy as np
import pytest

from conftest import assert_rf_close, random_h2_rational

from toepkern.errors import BoundaryAmbiguous, PoleOnCircle
from toepkern.expr import parse_symbol
from toepkern.polyalg import Polynomial
from toepkern.ratfun import (
    RationalFunction,
    boundary_conjugate,
    classify,
    l2_inner,
    partial_fractions,
    project_plus,
    rational,
)


def bands_as_sets(banded):
    return (
        {(round(l.real, 6), round(l.imag, 6), m) for l, m in banded.inside},
        {(round(l.real, 6), round(l.imag, 6), m) for l, m in banded.on_circle},
        {(round(l.real, 6), round(l.imag, 6), m) for l, m in banded.outside},
    )


def test_classify_worked_example():
    f = parse_symbol("(z-2)/(z^2*(z-3)*(z-4))")
    prof = classify(f)
    zin, zon, zout = bands_as_sets(prof.zeros)
    pin, pon, pout = bands_as_sets(prof.poles)
    assert (zin, zon, zout) == (set(), set(), {(2.0, 0.0, 1)})
    assert pin == {(0.0, 0.0, 2)}
    assert pon == set()
    assert pout == {(3.0, 0.0, 1), (4.0, 0.0, 1)}


def test_classify_zero_on_circle():
    prof = classify(rational([-1.0, 1.0]))
    assert prof.zeros.on_circle == (((1 + 0j), 1),)


def test_classify_single_outside_pole():
    prof = classify(rational([1.0], [1.0, -0.5]))
    assert prof.poles.outside == (((2 + 0j), 1),)


def test_classify_ambiguity_band():
    # root at distance 1.05e-8 from the circle: inside the ambiguity ring
    f = rational([-(1.0 + 1.05e-8), 1.0])
    with pytest.raises(BoundaryAmbiguous):
        classify(f)


def test_boundary_conjugate_monomial():
    assert_rf_close(boundary_conjugate(parse_symbol("z")), parse_symbol("1/z"), 1e-14)


def test_boundary_conjugate_affine():
    assert_rf_close(
        boundary_conjugate(rational([1.0, -0.5])), parse_symbol("(z-0.5)/z"), 1e-14
    )


def test_boundary_conjugate_blaschke_inverts():
    b = parse_symbol("B(0.5)")
    assert_rf_close(boundary_conjugate(b), 1.0 / b, 1e-12)


def test_boundary_conjugate_matches_pointwise_conjugate():
    rng = np.random.default_rng(2)
    z = np.exp(2j * np.pi * rng.uniform(size=64))
    for _ in range(10):
        f = random_h2_rational(rng)
        rf = boundary_conjugate(f)
        assert np.max(np.abs(rf(z) - np.conj(f(z)))) < 1e-12 * max(
            1.0, np.max(np.abs(f(z)))
        )


def test_boundary_conjugate_involution():
    rng = np.random.default_rng(4)
    for _ in range(10):
        f = random_h2_rational(rng)
        assert_rf_close(boundary_conjugate(boundary_conjugate(f)), f, 1e-10)


def test_project_plus_laurent_monomials():
    f = parse_symbol("1/z + 1 + z")
    assert_rf_close(project_plus(f), parse_symbol("1 + z"), 1e-12)


def test_project_plus_partial_fraction_example():
    # independent oracle: nonnegative Fourier modes from an FFT of samples
    f = parse_symbol("1/((z-0.5)*(z-2))")
    plus = project_plus(f)
    n = 4096
    z = np.exp(2j * np.pi * np.arange(n) / n)
    coeffs = np.fft.fft(f(z)) / n
    coeffs[n // 2 :] = 0.0  # keep only nonnegative modes (decay kills aliasing)
    oracle_vals = np.polynomial.polynomial.polyval(z, coeffs[: n // 2])
    assert np.max(np.abs(plus(z) - oracle_vals)) < 1e-10
    # the analytic part is the residue term at the outside pole: (2/3)/(z-2)
    assert_rf_close(plus, rational([2.0 / 3.0], [-2.0, 1.0]), 1e-10)


def test_project_plus_identity_on_analytic():
    f = rational([1.0, 2.0, 0.5], [3.0, 1.0])  # poles outside the disk only
    assert_rf_close(project_plus(f), f, 1e-12)


def test_project_plus_pole_on_circle_rejected():
    with pytest.raises(PoleOnCircle):
        project_plus(parse_symbol("1/(z-1)"))


def test_project_plus_idempotent():
    rng = np.random.default_rng(9)
    for _ in range(10):
        f = random_h2_rational(rng) + parse_symbol("1/(z-0.3)")
        p1 = project_plus(f)
        p2 = project_plus(p1)
        assert_rf_close(p1, p2, 1e-10)


def test_project_plus_complement_is_h2minus():
    from toepkern.hardy import is_in_H2minus

    rng = np.random.default_rng(13)
    for _ in range(10):
        f = random_h2_rational(rng) + rational([1.0], Polynomial.from_roots([0.4j]))
        minus = f - project_plus(f)
        assert is_in_H2minus(minus)


def test_partial_fractions_repeated_pole():
    # 1/((z-0.5)^2 (z-2)) expanded by hand:
    # residue series at 0.5: 1/(z-2) = -1/1.5 - (z-.5)/1.5^2 - ... =>
    # c_{0.5,2} = 1/(0.5-2) = -2/3, c_{0.5,1} = -1/(0.5-2)^2 = -4/9
    f = rational([1.0], Polynomial.from_roots([0.5, 0.5, 2.0]))
    quo, terms = partial_fractions(f)
    assert quo.is_zero
    by_pole = {round(p.real, 6): (m, coeffs) for p, m, coeffs in terms}
    m, coeffs = by_pole[0.5]
    assert m == 2
    assert coeffs[1] == pytest.approx(-2.0 / 3.0, abs=1e-12)
    assert coeffs[0] == pytest.approx(-4.0 / 9.0, abs=1e-12)
    m2, coeffs2 = by_pole[2.0]
    assert m2 == 1
    assert coeffs2[0] == pytest.approx(1.0 / 1.5**2, abs=1e-12)


def test_l2_inner_monomials():
    z = parse_symbol("z")
    one = parse_symbol("1")
    assert l2_inner(z, z) == pytest.approx(1.0, abs=1e-12)
    assert abs(l2_inner(one, z)) < 1e-12


def test_l2_inner_szego_kernel():
    f = parse_symbol("1/(1-0.5*z)")
    assert l2_inner(f, f) == pytest.approx(4.0 / 3.0, abs=1e-10)


def test_l2_inner_nonnegative():
    rng = np.random.default_rng(17)
    for _ in range(10):
        f = random_h2_rational(rng)
        v = l2_inner(f, f)
        assert v.real >= 0.0
        assert abs(v.imag) < 1e-12 * max(1.0, v.real)


def test_l2_inner_pole_on_circle_rejected():
    with pytest.raises(PoleOnCircle):
        l2_inner(parse_symbol("1/(z-1)"), parse_symbol("z"))
