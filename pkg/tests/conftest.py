"""Shared helpers for the test suite: seeded random generators for disk
points, Blaschke products and rational functions, plus Gram-matrix and
pointwise-agreement utilities."""

import numpy as np
import pytest

from toepkern.blaschke import BlaschkeProduct
from toepkern.polyalg import Polynomial
from toepkern.ratfun import RationalFunction, l2_inner, max_circle_diff


@pytest.fixture
def rng():
    return np.random.default_rng(20260810)


def random_disk_point(rng, radius=0.8):
    r = radius * np.sqrt(rng.uniform())
    phi = rng.uniform(0.0, 2.0 * np.pi)
    return complex(r * np.cos(phi), r * np.sin(phi))


def random_blaschke(rng, degree, radius=0.8, random_constant=False):
    zeros = tuple(random_disk_point(rng, radius) for _ in range(degree))
    constant = np.exp(2j * np.pi * rng.uniform()) if random_constant else 1.0
    return BlaschkeProduct(constant, zeros)


def random_h2_rational(rng, max_zeros=3, max_poles=2):
    """Random rational function analytic in the closed disk: zeros anywhere
    in a moderate annulus, poles outside |z| > 1.3."""
    nz = int(rng.integers(0, max_zeros + 1))
    np_ = int(rng.integers(0, max_poles + 1))
    zeros = [random_disk_point(rng, 0.8) if rng.uniform() < 0.5 else _outside_point(rng)
             for _ in range(nz)]
    poles = [_outside_point(rng) for _ in range(np_)]
    lead = complex(rng.normal(), rng.normal())
    if abs(lead) < 0.1:
        lead = 1.0
    return RationalFunction(
        Polynomial.from_roots(zeros, leading=lead), Polynomial.from_roots(poles)
    )


def _outside_point(rng):
    r = rng.uniform(1.3, 3.0)
    phi = rng.uniform(0.0, 2.0 * np.pi)
    return complex(r * np.cos(phi), r * np.sin(phi))


def gram(fns, n_samples=2048):
    d = len(fns)
    g = np.zeros((d, d), dtype=complex)
    for i in range(d):
        for j in range(d):
            g[i, j] = l2_inner(fns[j], fns[i], n_samples)
    return g


def gram_identity_error(fns, n_samples=2048):
    g = gram(fns, n_samples)
    return float(np.max(np.abs(g - np.eye(len(fns)))))


def assert_rf_close(f, g, tol=1e-9, n=512):
    err = max_circle_diff(f, g, n)
    assert err <= tol, "functions differ on the circle by %.3e" % err


def unimodular_ratio(f, g, n=256, tol=1e-9):
    """Assert f = c*g on the circle for a single unimodular constant c and
    return c."""
    fv = f.circle_samples(n)
    gv = g.circle_samples(n)
    mask = np.abs(gv) > 1e-8
    ratio = fv[mask] / gv[mask]
    c = ratio[0]
    assert float(np.max(np.abs(ratio - c))) <= tol * max(1.0, abs(c))
    assert abs(abs(c) - 1.0) <= tol
    return c
