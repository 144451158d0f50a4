"""Model-space representations of Toeplitz kernels contained in model spaces.

For a symbol conj(theta) * B with theta a finite Blaschke product and B a
finite Blaschke product of strictly smaller degree, the kernel is an
explicit multiplier times a model space.  Three forms are produced: the
plain product of outer factors, the isometric rescaling, and the
outer-times-vanishing-at-zero normal form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blaschke import (
    BlaschkeProduct,
    blaschke_gcd,
    divide,
    frostman_shift,
    kernel_inner_factor,
)
from .errors import CarlesonViolation, DegenerateShift, InsufficientDegree
from .hardy import inner_outer
from .kernel_engine import KernelRep, MaximalFunctionCert, UnimodularSymbol
from .modelspace import repro_kernels, reproducing_cascade
from .polyalg import Polynomial
from .ratfun import RF_ONE, RationalFunction, classify


def represent_single(theta, lam, mu, probe=None):
    """Kernel of conj(theta) * B_lam as (1 - conj(lam) z) k_mu * K_theta_mu,
    where theta_mu is the inner factor of the difference-quotient kernel of
    theta at mu.  Not isometric in general; mu is a free parameter."""
    if theta.degree < 2:
        raise InsufficientDegree("needs dim K_theta > 1")
    k_mu, _ = repro_kernels(theta, mu)
    w = RationalFunction(Polynomial([1.0, -np.conj(complex(lam))])) * k_mu
    theta_rep = kernel_inner_factor(theta, mu, probe)
    return KernelRep(multiplier=w, theta=theta_rep, isometric=False)


def represent_single_isometric(theta, lam, probe=None):
    """Isometric form of `represent_single` with mu = lam:
    m = (1 - conj(lam) z) k_lam / sqrt(1 - |theta(lam)|^2)."""
    if theta.degree < 2:
        raise InsufficientDegree("needs dim K_theta > 1")
    lam = complex(lam)
    k_lam, _ = repro_kernels(theta, lam)
    val = theta(lam)
    weight = float(np.sqrt(1.0 - abs(val) ** 2))
    m = RationalFunction(Polynomial([1.0, -np.conj(lam)])) * k_lam * (1.0 / weight)
    theta_rep = kernel_inner_factor(theta, lam, probe)
    return KernelRep(multiplier=m, theta=theta_rep, isometric=True)


@dataclass(frozen=True)
class BlaschkeRepresentations:
    """The three representations of ker T_{conj(theta) B}."""

    symbol: UnimodularSymbol
    plain: KernelRep
    isometric: KernelRep
    hayashi: KernelRep


def represent_blaschke(theta, lams, probe=None):
    """Representations of the kernel with symbol conj(theta) * prod B_lam.

    Runs the shared degree-reducing recursion; the plain multiplier is the
    product of the outer factors, the isometric one rescales each factor by
    sqrt(1 - |I_{n-1}(lam_n)|^2), and the normal form multiplies further by
    the rescaled evaluation kernel of the final inner factor at 0 (its model
    space inner function then vanishes at 0 and the multiplier is outer).
    """
    lams = [complex(l) for l in lams]
    if len(lams) < 1:
        raise ValueError("need at least one Blaschke zero")
    if theta.degree <= len(lams):
        raise InsufficientDegree(
            "needs dim K_theta > %d, got %d" % (len(lams), theta.degree)
        )
    steps = reproducing_cascade(theta, lams, probe)
    plain_mult = RF_ONE
    weight = 1.0
    for step in steps:
        plain_mult = plain_mult * step.o_factor
        weight *= step.weight
    I_N = steps[-1].inner_after
    iso_mult = plain_mult * (1.0 / weight)
    symbol = UnimodularSymbol(theta=theta, alpha=BlaschkeProduct(1.0, tuple(lams)))
    plain = KernelRep(multiplier=plain_mult, theta=I_N, isometric=False)
    iso = KernelRep(multiplier=iso_mult, theta=I_N, isometric=True)

    i0 = I_N(0.0)
    if abs(i0) > 1.0 - 1e-10:
        raise DegenerateShift("final inner factor is degenerate at the origin")
    ir = I_N.to_rational()
    w0 = float(np.sqrt(1.0 - abs(i0) ** 2))
    k0 = RationalFunction(ir.den - np.conj(i0) * ir.num, ir.den)
    hayashi_mult = iso_mult * k0 * (1.0 / w0)
    hayashi_theta = frostman_shift(I_N, np.conj(i0), probe)
    hayashi = KernelRep(multiplier=hayashi_mult, theta=hayashi_theta, isometric=True)
    return BlaschkeRepresentations(
        symbol=symbol, plain=plain, isometric=iso, hayashi=hayashi
    )


def propagate_multiplier(rep_G, alpha, probe=None):
    """Given ker T_G = w K_theta, represent ker T_{G alpha} as w times a
    representation of ker T_{conj(theta) alpha}.

    Reduces by the common inner divisor of theta and alpha first; when the
    leftover alpha is constant the result is w K_{theta/alpha} directly,
    otherwise the recursion supplies the inner factor.  The result is
    isometric whenever the input representation is.
    """
    delta = blaschke_gcd(rep_G.theta, alpha)
    theta_red = divide(rep_G.theta, delta) if delta.degree else rep_G.theta
    alpha_red = divide(alpha, delta) if delta.degree else alpha
    if theta_red.degree - alpha_red.degree < 1:
        raise InsufficientDegree("kernel of the product symbol is trivial")
    if alpha_red.degree == 0:
        return KernelRep(
            multiplier=rep_G.multiplier,
            theta=theta_red,
            isometric=rep_G.isometric,
        )
    sub = represent_blaschke(theta_red, list(alpha_red.zeros), probe)
    inner_rep = sub.isometric if rep_G.isometric else sub.plain
    return KernelRep(
        multiplier=rep_G.multiplier * inner_rep.multiplier,
        theta=inner_rep.theta,
        isometric=rep_G.isometric and inner_rep.isometric,
    )


def multiplier_from_maximal(cert, lam=None):
    """Turn a certified maximal function f = I * O into the representation
    ker = O K_{zI}, valid when O and 1/O are circle-regular (for rational
    data: O has no zeros on the circle; poles are impossible for an outer
    factor).

    With `lam` given, returns instead the representation of the kernel of
    the symbol times B_lam:  O (1 - conj(lam) z) K_I.
    """
    io = inner_outer(cert.f)
    profile = classify(io.outer)
    if profile.zeros.on_circle:
        raise CarlesonViolation(
            "outer factor vanishes on the circle; representation not certified"
        )
    if lam is None:
        theta = BlaschkeProduct(io.inner.constant, (0.0,) + io.inner.zeros)
        return KernelRep(multiplier=io.outer, theta=theta, isometric=False)
    if io.inner.degree < 1:
        raise InsufficientDegree("shifted variant needs a non-constant inner factor")
    lam = complex(lam)
    mult = io.outer * RationalFunction(Polynomial([1.0, -np.conj(lam)]))
    return KernelRep(multiplier=mult, theta=io.inner, isometric=False)
