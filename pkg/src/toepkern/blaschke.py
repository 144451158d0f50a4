"""Finite Blaschke products as first-class values.

A product is stored as a unimodular constant plus the multiset of its zeros
(in stored order), never as a raw rational function: being inner is an
invariant of the type, not a numerical accident.  Results that are only
defined up to a unimodular constant are pinned by probe-point evaluation
against the defining rational expression.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import InsufficientDegree, NotInner, RootEscapedDisk
from .polyalg import P_ONE, Polynomial
from .ratfun import BOUNDARY_TOL, RationalFunction, classify, max_circle_diff

# Probe points tried in order when pinning a unimodular constant.
DEFAULT_PROBES = (
    0.0 + 0.0j,
    0.5 + 0.0j,
    -0.5 + 0.0j,
    0.0 + 0.5j,
    0.37 + 0.21j,
    -0.28 + 0.44j,
    0.81 + 0.0j,
    0.0 - 0.63j,
    0.13 - 0.55j,
    -0.61 - 0.17j,
)


@dataclass(frozen=True)
class BlaschkeProduct:
    """constant * prod (z - a_j) / (1 - conj(a_j) z), all |a_j| < 1.

    Degree zero means a unimodular constant.  Zeros on or outside the
    closed disk are construction errors, not warnings.
    """

    constant: complex = 1.0 + 0.0j
    zeros: tuple = ()

    def __post_init__(self):
        c = complex(self.constant)
        mag = abs(c)
        if abs(mag - 1.0) > 1e-6:
            raise ValueError("Blaschke constant must be unimodular, got |c|=%g" % mag)
        object.__setattr__(self, "constant", c / mag)
        zs = tuple(complex(z) for z in self.zeros)
        for z in zs:
            if abs(z) >= 1.0 - BOUNDARY_TOL:
                raise ValueError("Blaschke zero %r not strictly inside the disk" % z)
        object.__setattr__(self, "zeros", zs)

    @property
    def degree(self):
        return len(self.zeros)

    @property
    def is_constant(self):
        return not self.zeros

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = np.full(z.shape, self.constant, dtype=complex)
        for a in self.zeros:
            out = out * (z - a) / (1.0 - np.conj(a) * z)
        return complex(out) if out.ndim == 0 else out

    @cached_property
    def _rational(self):
        num = Polynomial([self.constant])
        den = P_ONE
        for a in self.zeros:
            num = num * Polynomial([-a, 1.0])
            den = den * Polynomial([1.0, -np.conj(a)])
        return RationalFunction(num, den)

    def to_rational(self):
        return self._rational

    def __mul__(self, other):
        if not isinstance(other, BlaschkeProduct):
            return NotImplemented
        return BlaschkeProduct(self.constant * other.constant, self.zeros + other.zeros)

    def times_zero_at(self, lam):
        return BlaschkeProduct(self.constant, self.zeros + (complex(lam),))

    def remove_zero(self, lam, tol=1e-6):
        """Drop one zero matching lam; the constant is left untouched."""
        lam = complex(lam)
        if not self.zeros:
            raise ValueError("no zeros to remove")
        dists = [abs(z - lam) for z in self.zeros]
        i = int(np.argmin(dists))
        if dists[i] > tol * max(1.0, abs(lam)):
            raise ValueError("no zero of the product matches %r" % lam)
        return BlaschkeProduct(self.constant, self.zeros[:i] + self.zeros[i + 1 :])

    def __repr__(self):
        return "BlaschkeProduct(constant=%r, zeros=%r)" % (self.constant, self.zeros)


ONE_B = BlaschkeProduct()
Z_B = BlaschkeProduct(1.0, (0.0,))


def monomial_blaschke(k):
    """z^k as a Blaschke product."""
    return BlaschkeProduct(1.0, (0.0,) * k)


def divides(alpha, theta, tol=1e-6):
    """True iff the zero multiset of alpha embeds into that of theta
    under tol-matching with multiplicity."""
    avail = list(theta.zeros)
    for a in alpha.zeros:
        dists = [abs(z - a) for z in avail]
        if not dists:
            return False
        i = int(np.argmin(dists))
        if dists[i] > tol * max(1.0, abs(a)):
            return False
        avail.pop(i)
    return True


def divide(theta, alpha, tol=1e-6):
    """theta / alpha as a Blaschke product (alpha must divide theta).

    The quotient keeps the ratio of the stored constants.
    """
    avail = list(theta.zeros)
    for a in alpha.zeros:
        dists = [abs(z - a) for z in avail]
        if not dists:
            raise ValueError("alpha does not divide theta")
        i = int(np.argmin(dists))
        if dists[i] > tol * max(1.0, abs(a)):
            raise ValueError("alpha does not divide theta")
        avail.pop(i)
    return BlaschkeProduct(theta.constant / alpha.constant, tuple(avail))


def blaschke_gcd(theta, alpha, tol=1e-6):
    """Greatest common inner divisor: tol-matched multiset intersection of the
    zero sets, with constant 1."""
    avail = list(alpha.zeros)
    common = []
    for z in theta.zeros:
        dists = [abs(w - z) for w in avail]
        if not dists:
            break
        i = int(np.argmin(dists))
        if dists[i] <= tol * max(1.0, abs(z)):
            common.append((z + avail[i]) / 2.0)
            avail.pop(i)
    return BlaschkeProduct(1.0, tuple(common))


def _probe_sequence(probe):
    if probe is None:
        return DEFAULT_PROBES
    return (complex(probe),) + DEFAULT_PROBES


def _pin_constant(zeros, target, probe=None):
    """Unimodular constant c with c * prod B_zeros == target, fixed by probe
    evaluation and double-checked at independent points."""
    base = BlaschkeProduct(1.0, tuple(zeros))
    chosen = None
    for z0 in _probe_sequence(probe):
        bv = base(z0)
        dv = target.den(z0)
        if abs(bv) < 1e-3 or abs(dv) < 1e-8 * max(1.0, target.den.norm):
            continue
        tv = target.num(z0) / dv
        if abs(tv) < 1e-6:
            continue
        c = tv / bv
        if abs(abs(c) - 1.0) > 1e-6:
            raise NotInner(
                "target is not unimodular against the zero set at probe %r" % z0
            )
        chosen = c / abs(c)
        break
    if chosen is None:
        raise RuntimeError("could not find a usable probe point for constant pinning")
    pinned = BlaschkeProduct(chosen, tuple(zeros))
    if max_circle_diff(pinned.to_rational(), target, 64) > 1e-7:
        raise RuntimeError("pinned Blaschke product disagrees with its target")
    return pinned


def frostman_shift(theta, p, probe=None):
    """The inner function (theta - conj(p)) / (1 - p theta) for |p| < 1.

    Same degree as theta; its zeros are the disk solutions of
    theta(z) = conj(p), found by a polynomial root solve, and the constant is
    pinned so the product agrees pointwise with the defining expression.
    """
    p = complex(p)
    if abs(p) >= 1.0 - BOUNDARY_TOL:
        raise ValueError("Frostman shift parameter must satisfy |p| < 1")
    if p == 0:
        return theta
    tr = theta.to_rational()
    num = tr.num - np.conj(p) * tr.den
    den = tr.den - p * tr.num
    target = RationalFunction(num, den)
    new_zeros = []
    for loc, mult in target.zero_clusters:
        if abs(loc) >= 1.0 - BOUNDARY_TOL:
            raise RootEscapedDisk(
                "computed shift zero %r reached the boundary" % loc
            )
        new_zeros.extend([loc] * mult)
    if len(new_zeros) != theta.degree:
        raise RootEscapedDisk(
            "shift zero count %d does not match degree %d"
            % (len(new_zeros), theta.degree)
        )
    return _pin_constant(new_zeros, target, probe)


def kernel_inner_factor(theta, lam, probe=None):
    """Inner factor of the difference-quotient reproducing kernel at lam.

    Equals the Frostman shift of theta at conj(theta(lam)) with the zero at
    lam removed, constant re-pinned so that the result times the evaluation
    kernel reproduces the difference-quotient kernel pointwise.  Degree drops
    by exactly one.
    """
    if theta.degree < 1:
        raise InsufficientDegree("need a non-constant inner function")
    lam = complex(lam)
    tl = theta(lam)
    tr = theta.to_rational()
    # target = ((theta - theta(lam)) / (z - lam)) * ((1 - conj(lam) z) / (1 - conj(theta(lam)) theta))
    num_t = (tr.num - tl * tr.den) * Polynomial([1.0, -np.conj(lam)])
    den_t = Polynomial([-lam, 1.0]) * (tr.den - np.conj(tl) * tr.num)
    target = RationalFunction(num_t, den_t)
    if tl == 0:
        shifted = theta
    else:
        shifted = frostman_shift(theta, np.conj(tl), probe)
    remaining = shifted.remove_zero(lam).zeros
    return _pin_constant(remaining, target, probe)


def blaschke_from_rational(f, tol=1e-8, probe=None):
    """Certify that a rational function is a finite Blaschke product and
    convert it.

    Checks unimodularity on circle samples, absence of poles in the closed
    disk, and that every zero lies strictly inside; raises `NotInner`
    otherwise.
    """
    if f.is_zero:
        raise NotInner("zero function is not inner")
    vals = np.abs(f.circle_samples(512))
    if float(np.max(np.abs(vals - 1.0))) > max(tol, 1e-8):
        raise NotInner("function is not unimodular on the circle")
    profile = classify(f)
    if profile.poles.inside or profile.poles.on_circle:
        raise NotInner("function has poles in the closed disk")
    if profile.zeros.on_circle or profile.zeros.outside:
        raise NotInner("function has zeros outside the open disk")
    zeros = []
    for loc, mult in profile.zeros.inside:
        zeros.extend([loc] * mult)
    return _pin_constant(zeros, f, probe)
