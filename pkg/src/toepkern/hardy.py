"""Hardy-space membership predicates, inner-outer factorization of rational
functions, and the conjugate-Smirnov test.

All of these reduce to pole/zero location checks because every function in
the package is rational; that reduction is exact for this data class and is
the ground truth behind the kernel-membership bridge used by all higher
modules: f lies in the kernel of the Toeplitz operator with symbol g iff
f is analytic in the closed disk and g*f carries only negative Fourier
modes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .blaschke import BlaschkeProduct
from .errors import NotInHardySpace
from .ratfun import (
    BOUNDARY_TOL,
    RationalFunction,
    boundary_conjugate,
    classify,
)


def is_in_H2plus(f, tol_boundary=BOUNDARY_TOL):
    """True iff f has no poles in the closed unit disk (band-tolerant)."""
    if f.is_zero:
        return True
    profile = classify(f, tol_boundary)
    return not profile.poles.inside and not profile.poles.on_circle


def is_in_H2minus(f, tol_boundary=BOUNDARY_TOL):
    """True iff all poles of f lie strictly inside the disk and f vanishes at
    infinity, i.e. f carries only negative Fourier modes."""
    if f.is_zero:
        return True
    profile = classify(f, tol_boundary)
    if profile.poles.on_circle or profile.poles.outside:
        return False
    return f.num.degree < f.den.degree


def is_outer(f, tol_boundary=BOUNDARY_TOL):
    """Rational outer test: in H2+ with no zeros in the open disk.

    Zeros on the circle are permitted (1 + z is outer).
    """
    if f.is_zero:
        return False
    if not is_in_H2plus(f, tol_boundary):
        return False
    return not classify(f, tol_boundary).zeros.inside


def in_kernel(f, g, tol_boundary=BOUNDARY_TOL):
    """Kernel-membership bridge: f in ker T_g for a rational symbol g."""
    if f.is_zero:
        return True
    return is_in_H2plus(f, tol_boundary) and is_in_H2minus(g * f, tol_boundary)


def in_conjugate_smirnov(q, tol_boundary=BOUNDARY_TOL):
    """Conjugate Smirnov class membership for rational q: the boundary
    conjugate has no poles in the open disk (circle poles are allowed)."""
    if q.is_zero:
        return True
    rq = boundary_conjugate(q)
    return not classify(rq, tol_boundary).poles.inside


@dataclass(frozen=True)
class InnerOuter:
    """Certified factorization f = inner * outer of a rational H2 function."""

    inner: BlaschkeProduct
    outer: RationalFunction

    def to_rational(self):
        return self.inner.to_rational() * self.outer


def inner_outer(f, tol_boundary=BOUNDARY_TOL):
    """Factor a rational H2+ function into a Blaschke inner part (its zeros
    inside the disk) and an outer part.

    Zeros on the circle stay in the outer factor; the inner constant is
    normalized to 1, so the outer part carries the phase.
    """
    if f.is_zero:
        raise NotInHardySpace("cannot factor the zero function")
    if not is_in_H2plus(f, tol_boundary):
        raise NotInHardySpace("function has poles in the closed disk")
    profile = classify(f, tol_boundary)
    zeros = []
    for loc, mult in profile.zeros.inside:
        zeros.extend([loc] * mult)
    inner = BlaschkeProduct(1.0, tuple(zeros))
    outer = f / inner.to_rational()
    return InnerOuter(inner=inner, outer=outer)
