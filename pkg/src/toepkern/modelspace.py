"""Model spaces of finite Blaschke products: reproducing kernels, the
Takenaka-Malmquist orthonormal basis, the natural conjugation, Crofoot
multipliers, and the outer-times-model-space normal form.

The Takenaka-Malmquist basis in stored-zero order is the canonical basis
for every span or Gram computation in the package: deterministic,
orthonormal by construction, cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .blaschke import BlaschkeProduct, frostman_shift, kernel_inner_factor
from .errors import DegenerateShift, InsufficientDegree, NotInModelSpace
from .hardy import in_kernel
from .polyalg import P_ONE, Polynomial
from .ratfun import (
    INNER_SAMPLES,
    RationalFunction,
    boundary_conjugate,
    l2_inner,
    max_circle_diff,
)


@dataclass(frozen=True)
class ModelSpace:
    """K_theta for a non-constant finite Blaschke product theta."""

    theta: BlaschkeProduct

    def __post_init__(self):
        if self.theta.degree < 1:
            raise InsufficientDegree("model space needs a non-constant inner function")

    @property
    def dim(self):
        return self.theta.degree

    def symbol(self):
        """The rational symbol whose Toeplitz kernel is this space."""
        return boundary_conjugate(self.theta.to_rational())

    def contains(self, f):
        return in_kernel(f, self.symbol())

    def basis(self):
        return tm_basis(self.theta)

    def kernels_at(self, lam):
        return repro_kernels(self.theta, lam)

    def conjugate(self, f):
        return conjugation(self.theta, f)


@dataclass(frozen=True)
class Basis:
    """Ordered list of rational functions; flagged orthonormal when the Gram
    matrix under the circle inner product is the identity."""

    elements: tuple
    orthonormal: bool = True

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def gram(self, n_samples=INNER_SAMPLES):
        d = len(self.elements)
        g = np.zeros((d, d), dtype=complex)
        for i in range(d):
            for j in range(d):
                g[i, j] = l2_inner(self.elements[j], self.elements[i], n_samples)
        return g


def repro_kernels(theta, lam):
    """Evaluation kernel and difference-quotient kernel of K_theta at lam.

    k = (1 - conj(theta(lam)) theta) / (1 - conj(lam) z)
    k_tilde = (theta - theta(lam)) / (z - lam)

    Both come back reduced and analytic in the closed disk; the conjugation
    of K_theta swaps them.
    """
    if theta.degree < 1:
        raise InsufficientDegree("reproducing kernels need a non-constant theta")
    lam = complex(lam)
    tl = theta(lam)
    tr = theta.to_rational()
    k = RationalFunction(
        tr.den - np.conj(tl) * tr.num,
        tr.den * Polynomial([1.0, -np.conj(lam)]),
    )
    k_tilde = RationalFunction(
        tr.num - tl * tr.den,
        Polynomial([-lam, 1.0]) * tr.den,
    )
    return k, k_tilde


def tm_basis(theta):
    """Takenaka-Malmquist orthonormal basis of K_theta, zeros in stored order.

    e_j = sqrt(1 - |a_j|^2) / (1 - conj(a_j) z) * prod_{i<j} B_{a_i}
    """
    if theta.degree < 1:
        raise InsufficientDegree("basis requires a non-constant inner function")
    elements = []
    lead_num = P_ONE
    lead_den = P_ONE
    for j, a in enumerate(theta.zeros):
        w = float(np.sqrt(1.0 - abs(a) ** 2))
        num = w * lead_num
        den = lead_den * Polynomial([1.0, -np.conj(a)])
        elements.append(RationalFunction(num, den))
        lead_num = lead_num * Polynomial([-a, 1.0])
        lead_den = lead_den * Polynomial([1.0, -np.conj(a)])
    return Basis(tuple(elements), orthonormal=True)


def conjugation(theta, f, check_membership=True):
    """The natural conjugation of K_theta: f -> theta * conj(f) * conj(z)
    realized on the circle as a rational function.

    An antilinear involutive isometry of the space; applying it twice gives
    f back.
    """
    tr = theta.to_rational()
    if check_membership and not in_kernel(f, boundary_conjugate(tr)):
        raise NotInModelSpace("conjugation argument is not in the model space")
    return tr * boundary_conjugate(f) / RationalFunction(Polynomial([0.0, 1.0]))


def crofoot(theta, p, probe=None):
    """Isometric multiplier between a model space and its Frostman shift.

    Returns (m, theta_p) with m = sqrt(1-|p|^2) / (1 - p theta); multiplication
    by m carries K_theta onto K_theta_p isometrically.
    """
    p = complex(p)
    if abs(p) >= 1.0:
        raise ValueError("Crofoot parameter must satisfy |p| < 1")
    tr = theta.to_rational()
    w = float(np.sqrt(1.0 - abs(p) ** 2))
    m = RationalFunction(w * tr.den, tr.den - p * tr.num)
    theta_p = frostman_shift(theta, p, probe)
    return m, theta_p


def hayashi_of_model_space(theta, probe=None):
    """Outer-times-model-space normal form of K_theta.

    Returns (u, gamma) with u outer, gamma inner vanishing at 0, and
    K_theta = u K_gamma with multiplication by u isometric.  Unique up to a
    unimodular constant.  When theta(0) = 0 the space is its own normal form.
    """
    if theta.degree < 1:
        raise InsufficientDegree("needs a non-constant inner function")
    t0 = theta(0.0)
    if abs(t0) > 1.0 - 1e-10:
        raise DegenerateShift("|theta(0)| is too close to 1; input is not inner")
    tr = theta.to_rational()
    w = float(np.sqrt(1.0 - abs(t0) ** 2))
    u = RationalFunction((1.0 / w) * (tr.den - np.conj(t0) * tr.num), tr.den)
    gamma = frostman_shift(theta, np.conj(t0), probe)
    return u, gamma


@dataclass(frozen=True)
class CascadeStep:
    """One sweep of the kernel-splitting recursion at a point lam:
    inner_after is the inner factor of the difference-quotient kernel of
    inner_before at lam, k is the evaluation kernel, o_factor the outer
    factor (1 - conj(lam) z) k, and weight = sqrt(1 - |inner_before(lam)|^2).
    """

    lam: complex
    inner_before: BlaschkeProduct
    inner_after: BlaschkeProduct
    k: RationalFunction
    o_factor: RationalFunction
    weight: float


def reproducing_cascade(inner0, lams, probe=None):
    """Iterate the degree-reducing recursion I_n = inner factor of the
    difference-quotient kernel of I_{n-1} at lam_n.

    Shared by the maximal-function construction and the representation
    theorems; at every step the two published forms of the outer factor,
    (1 - conj(lam) z) k  and  1 - conj(I_{n-1}(lam)) I_{n-1},
    are checked against each other numerically, and the degree must drop by
    exactly one.
    """
    steps = []
    current = inner0
    for lam in lams:
        lam = complex(lam)
        if current.degree < 1:
            raise InsufficientDegree(
                "recursion exhausted the inner factor before all points were used"
            )
        val = current(lam)
        if abs(val) > 1.0 - 1e-12:
            raise DegenerateShift("inner function evaluates to the boundary inside the disk")
        k, _ = repro_kernels(current, lam)
        nxt = kernel_inner_factor(current, lam, probe)
        if nxt.degree != current.degree - 1:
            raise RuntimeError("inner-factor degree did not drop by one")
        o_factor = RationalFunction(Polynomial([1.0, -np.conj(lam)])) * k
        alt = RationalFunction(P_ONE) - val.conjugate() * current.to_rational()
        if max_circle_diff(o_factor, alt, 64) > 1e-8:
            raise RuntimeError("outer-factor identity failed numerically")
        steps.append(
            CascadeStep(
                lam=lam,
                inner_before=current,
                inner_after=nxt,
                k=k,
                o_factor=o_factor,
                weight=float(np.sqrt(1.0 - abs(val) ** 2)),
            )
        )
        current = nxt
    return steps
