"""Polynomial substrate: roots with multiplicity clustering, reflection,
approximate gcd."""

import numpy as np
import pytest

import numpy.polynomial.polynomial as npoly

from toepkern.errors import ZeroPolynomial
from toepkern.polyalg import Polynomial, approx_gcd, reflect, root_clusters, roots


def sorted_roots(p):
    r = roots(p)
    return sorted(r, key=lambda z: (round(z.real, 9), round(z.imag, 9)))


def test_roots_factored_by_inspection():
    # z^2 - 1
    r = sorted_roots(Polynomial([-1.0, 0.0, 1.0]))
    assert np.allclose(r, [-1.0, 1.0], atol=1e-12)


def test_roots_monomial_multiplicity():
    r = roots(Polynomial([0.0, 0.0, 0.0, 1.0]))
    assert len(r) == 3
    assert np.allclose(r, 0.0, atol=1e-14)


def test_roots_expanded_cubic():
    # oracle: expand (z-2)(z-3)(z-4) by hand -> z^3 - 9 z^2 + 26 z - 24
    expanded = Polynomial([-24.0, 26.0, -9.0, 1.0])
    byhand = npoly.polyfromroots([2.0, 3.0, 4.0])
    assert np.allclose(expanded.coeffs, byhand)
    assert np.allclose(sorted_roots(expanded), [2.0, 3.0, 4.0], atol=1e-9)


def test_roots_zero_polynomial_rejected():
    with pytest.raises(ZeroPolynomial):
        roots(Polynomial([0.0]))


def test_roots_double_root_off_origin():
    # (1 - 0.3 z)^2 (z - 2): double roots away from 0 must cluster
    p = Polynomial(npoly.polymul(npoly.polymul([1, -0.3], [1, -0.3]), [-2, 1]))
    clusters = root_clusters(p)
    assert sum(m for _, m in clusters) == 3
    double = [m for loc, m in clusters if abs(loc - 1 / 0.3) < 1e-6]
    assert double == [2]


def test_roots_residual_bound():
    rng = np.random.default_rng(7)
    for _ in range(30):
        deg = int(rng.integers(1, 9))
        rts = []
        for _ in range(deg):
            r = rng.uniform(0.2, 2.5)
            if abs(r - 1.0) < 0.05:
                r += 0.1
            phi = rng.uniform(0, 2 * np.pi)
            rts.append(r * np.exp(1j * phi))
        lead = complex(rng.normal(), rng.normal()) or 1.0
        p = Polynomial.from_roots(rts, leading=lead)
        for root in roots(p):
            scale = p.norm * max(1.0, abs(root)) ** p.degree
            assert abs(p(root)) <= 1e-8 * scale


def test_roots_reconstruction_property():
    rng = np.random.default_rng(11)
    for _ in range(25):
        deg = int(rng.integers(1, 9))
        rts = []
        for _ in range(deg):
            r = rng.uniform(0.3, 0.9) if rng.uniform() < 0.5 else rng.uniform(1.2, 2.0)
            phi = rng.uniform(0, 2 * np.pi)
            rts.append(r * np.exp(1j * phi))
        lead = 1.0 + 0.5j
        p = Polynomial.from_roots(rts, leading=lead)
        back = Polynomial.from_roots(roots(p), leading=lead)
        err = np.max(np.abs(back.coeffs - p.coeffs)) / np.max(np.abs(p.coeffs))
        assert err < 1e-8


def test_reflect_affine():
    p = Polynomial([1.0, -0.5])
    assert np.allclose(reflect(p).coeffs, [-0.5, 1.0])


def test_reflect_monomial():
    assert np.allclose(reflect(Polynomial([0.0, 0.0, 1.0])).coeffs, [1.0])


def test_reflect_conjugates():
    p = Polynomial([0.3, 0.2j])
    assert np.allclose(reflect(p).coeffs, [-0.2j, 0.3])


def test_reflect_involution():
    rng = np.random.default_rng(3)
    for _ in range(20):
        deg = int(rng.integers(0, 7))
        c = rng.normal(size=deg + 1) + 1j * rng.normal(size=deg + 1)
        c[-1] += 3.0  # keep the leading coefficient solid
        c[0] += 2.0   # and the constant term, so no root at 0 is dropped
        p = Polynomial(c)
        assert reflect(reflect(p)).allclose(p, 1e-12)


def test_gcd_shared_origin_root():
    p = Polynomial([0.0, 0.0, 1.0])       # z^2
    q = Polynomial([0.0, -3.0, 1.0])      # z (z - 3)
    g = approx_gcd(p, q, 1e-8)
    assert np.allclose(g.coeffs, [0.0, 1.0])


def test_gcd_disjoint():
    p = Polynomial.from_roots([1.0, 2.0])
    q = Polynomial.from_roots([3.0])
    assert approx_gcd(p, q, 1e-8).degree == 0


def test_gcd_multiplicity_minimum():
    p = Polynomial.from_roots([0.5, 0.5, -2.0])
    q = Polynomial.from_roots([0.5, 4.0])
    g = approx_gcd(p, q, 1e-8)
    assert g.degree == 1
    assert np.allclose(g.coeffs, [-0.5, 1.0], atol=1e-9)


def test_gcd_divides_both():
    rng = np.random.default_rng(5)
    for _ in range(20):
        shared = [complex(rng.uniform(0.3, 2.0) * np.exp(2j * np.pi * rng.uniform()))
                  for _ in range(int(rng.integers(1, 3)))]
        extra_p = [complex(3.0 * np.exp(2j * np.pi * rng.uniform()))]
        extra_q = [complex(0.25 * np.exp(2j * np.pi * rng.uniform()))]
        p = Polynomial.from_roots(shared + extra_p, leading=2.0)
        q = Polynomial.from_roots(shared + extra_q, leading=-1.5j)
        g = approx_gcd(p, q, 1e-8)
        assert g.degree == len(shared)
        for poly in (p, q):
            _, rem = divmod(poly, g)
            assert rem.is_zero or rem.norm < 1e-8 * poly.norm
