"""Core algorithms on Toeplitz kernels with rational symbols.

Computes the kernel of a Toeplitz operator with a rational symbol (no poles
on the circle) as an explicit multiplier times a monomial model space,
together with the minimal model space containing it; decides subkernel
inclusion and kernel equality; certifies and constructs maximal functions,
including the degree-reducing recursion that plants prescribed zeros.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .blaschke import BlaschkeProduct, ONE_B, blaschke_gcd, divide, divides
from .errors import (
    ConstantInnerFactor,
    InsufficientDegree,
    NotInHardySpace,
    NotInKernel,
    PoleOnCircle,
    ZeroPolynomial,
)
from .hardy import InnerOuter, in_conjugate_smirnov, in_kernel, inner_outer, is_in_H2plus, is_outer
from .modelspace import repro_kernels, reproducing_cascade, tm_basis
from .polyalg import Polynomial
from .ratfun import (
    BOUNDARY_TOL,
    RF_ONE,
    RationalFunction,
    boundary_conjugate,
    classify,
    max_circle_diff,
)


@dataclass(frozen=True)
class RationalSymbol:
    """A rational symbol without poles on the circle."""

    f: RationalFunction

    def __post_init__(self):
        if self.f.is_zero:
            raise ZeroPolynomial("the zero function is not a valid symbol")
        profile = classify(self.f)
        if profile.poles.on_circle:
            raise PoleOnCircle("symbol has a pole on the circle")

    def to_rational(self):
        return self.f


@dataclass(frozen=True)
class UnimodularSymbol:
    """The symbol conj(theta) * alpha * conj(outer_ratio) / outer_ratio.

    Unimodular on the circle by construction.  Boundary zeros of the outer
    ratio are folded into extra origin zeros of theta at construction (each
    circle zero of the outer part contributes one conj(z) factor, up to a
    unimodular constant that never affects a kernel).
    """

    theta: BlaschkeProduct
    alpha: BlaschkeProduct = ONE_B
    outer_ratio: RationalFunction = field(default_factory=lambda: RF_ONE)

    def __post_init__(self):
        o = self.outer_ratio
        if o.is_zero:
            raise ZeroPolynomial("outer ratio cannot be zero")
        if not is_outer(o):
            raise NotInHardySpace("outer ratio must be an outer rational function")
        profile = classify(o)
        if profile.zeros.on_circle:
            boundary = []
            for loc, mult in profile.zeros.on_circle:
                boundary.extend([loc] * mult)
            stripped = o / RationalFunction(Polynomial.from_roots(boundary))
            object.__setattr__(
                self,
                "theta",
                BlaschkeProduct(
                    self.theta.constant, self.theta.zeros + (0.0,) * len(boundary)
                ),
            )
            object.__setattr__(self, "outer_ratio", stripped)

    @cached_property
    def _rational(self):
        sym = boundary_conjugate(self.theta.to_rational()) * self.alpha.to_rational()
        if not self.outer_ratio.is_constant:
            sym = sym * boundary_conjugate(self.outer_ratio) / self.outer_ratio
        return sym

    def to_rational(self):
        return self._rational

    def times_inner(self, beta):
        """Symbol multiplied by an extra inner factor beta."""
        return UnimodularSymbol(self.theta, self.alpha * beta, self.outer_ratio)


def as_rational_symbol(symbol):
    """Rational function realizing a symbol (or pass a RationalFunction through)."""
    if isinstance(symbol, (RationalSymbol, UnimodularSymbol)):
        return symbol.to_rational()
    if isinstance(symbol, RationalFunction):
        return symbol
    raise TypeError("not a symbol: %r" % (symbol,))


def member(f, symbol, tol_boundary=BOUNDARY_TOL):
    """Kernel-membership bridge lifted to symbol objects."""
    return in_kernel(f, as_rational_symbol(symbol), tol_boundary)


@dataclass(frozen=True)
class KernelRep:
    """A Toeplitz kernel presented as multiplier * K_theta.

    When `isometric` is set, multiplication by the multiplier carries the
    Takenaka-Malmquist basis of K_theta to an orthonormal family.
    `normalization` records the unimodular constant pinned during
    construction.
    """

    multiplier: RationalFunction
    theta: BlaschkeProduct
    isometric: bool = False
    normalization: complex = 1.0 + 0.0j

    @property
    def dim(self):
        return self.theta.degree

    def basis(self):
        return [self.multiplier * e for e in tm_basis(self.theta)]


@dataclass(frozen=True)
class MaximalFunctionCert:
    """Certificate that f is maximal in the kernel of its symbol:
    symbol * f agrees on the circle with conj(z) * conj(O_witness) for an
    outer O_witness."""

    f: RationalFunction
    symbol: object
    O_witness: RationalFunction


@dataclass(frozen=True)
class Rejection:
    reason: str


@dataclass(frozen=True)
class RationalKernelResult:
    """Output of the rational-symbol kernel computation.

    `rep` is None exactly when the kernel is trivial; `containing` is the
    minimal model space (as its inner function) containing the kernel;
    `reduced` is the gcd-reduced unimodular symbol with the same kernel;
    `counts` records the integer bookkeeping of the computation.
    """

    symbol: RationalSymbol
    rep: KernelRep | None
    containing: BlaschkeProduct | None
    reduced: UnimodularSymbol | None
    counts: dict

    @property
    def trivial(self):
        return self.rep is None

    @property
    def dim(self):
        return 0 if self.rep is None else self.rep.dim


def kernel_of_rational_symbol(g, tol_boundary=BOUNDARY_TOL):
    """Kernel of the Toeplitz operator with rational symbol g.

    Procedure: strip circle zeros of g against powers of z; split the
    remaining numerator and denominator zeros across the unit circle; the
    inside counts decide the dimension, and the outside zeros, reflected
    into the disk, produce the minimal containing model space.

    With P, Q the circle-zero-free numerator and denominator, P = P-P+ and
    Q = Q-Q+ split by zero location (minus = inside), and
    n = deg Q- - deg P-, the kernel is trivial iff n_T - n >= 0, where n_T
    counts circle zeros; otherwise it equals (Q+/P+) K_{z^(n - n_T)}.
    Reflecting the zeros of P+ and Q+ at the circle gives Blaschke products
    B1, B2 and the integer N = n_T - n + n1 - n2; the minimal containing
    model space is K_{B1} when N >= 0 and K_{B1 z^|N|} when N < 0.
    """
    if isinstance(g, RationalFunction):
        g = RationalSymbol(g)
    f = g.f
    profile = classify(f, tol_boundary)
    n_T = profile.zeros.count_on_circle()
    p_minus = [(l, m) for l, m in profile.zeros.inside]
    p_plus = [(l, m) for l, m in profile.zeros.outside]
    q_minus = [(l, m) for l, m in profile.poles.inside]
    q_plus = [(l, m) for l, m in profile.poles.outside]
    n = sum(m for _, m in q_minus) - sum(m for _, m in p_minus)
    n1 = sum(m for _, m in p_plus)
    n2 = sum(m for _, m in q_plus)
    N = n_T - n + n1 - n2
    dim = n - n_T
    counts = {"n_T": n_T, "n": n, "n1": n1, "n2": n2, "N": N, "dim": max(dim, 0)}
    if dim <= 0:
        counts["dim"] = 0
        return RationalKernelResult(
            symbol=g, rep=None, containing=None, reduced=None, counts=counts
        )
    p_plus_roots = []
    for loc, mult in p_plus:
        p_plus_roots.extend([loc] * mult)
    q_plus_roots = []
    for loc, mult in q_plus:
        q_plus_roots.extend([loc] * mult)
    multiplier = RationalFunction(
        Polynomial.from_roots(q_plus_roots),
        Polynomial.from_roots(p_plus_roots, leading=f.num.leading),
    )
    rep = KernelRep(
        multiplier=multiplier,
        theta=BlaschkeProduct(1.0, (0.0,) * dim),
        isometric=False,
    )
    b1_zeros = tuple(1.0 / np.conj(r) for r in p_plus_roots)
    b2_zeros = tuple(1.0 / np.conj(r) for r in q_plus_roots)
    if N >= 0:
        theta_min = BlaschkeProduct(1.0, b1_zeros)
        alpha_min = BlaschkeProduct(1.0, b2_zeros + (0.0,) * N)
    else:
        theta_min = BlaschkeProduct(1.0, b1_zeros + (0.0,) * (-N))
        alpha_min = BlaschkeProduct(1.0, b2_zeros)
    reduced = UnimodularSymbol(theta=theta_min, alpha=alpha_min)
    return RationalKernelResult(
        symbol=g, rep=rep, containing=theta_min, reduced=reduced, counts=counts
    )


def kernel_dim_unimodular(s):
    """Dimension of the kernel for a unimodular symbol: reduce theta and
    alpha by their common inner divisor, then max(deg theta - deg alpha, 0).

    Boundary zeros of an outer ratio were already folded into theta at
    symbol construction, so the count is exact for the whole class.
    """
    delta = blaschke_gcd(s.theta, s.alpha)
    t = s.theta.degree - delta.degree
    a = s.alpha.degree - delta.degree
    return max(t - a, 0)


def kernel_dim(symbol):
    """Kernel dimension for either symbol flavor."""
    if isinstance(symbol, UnimodularSymbol):
        return kernel_dim_unimodular(symbol)
    if isinstance(symbol, RationalFunction):
        symbol = RationalSymbol(symbol)
    return kernel_of_rational_symbol(symbol).dim


def is_subkernel(g, G):
    """True iff the kernel of T_g is contained in the kernel of T_G, decided
    by conjugate-Smirnov membership of the symbol quotient G/g.

    The criterion presumes the smaller kernel is non-trivial.
    """
    q = as_rational_symbol(G) / as_rational_symbol(g)
    return in_conjugate_smirnov(q)


def kernels_equal(g, h):
    """True iff T_g and T_h have the same kernel.

    Trivial kernels are compared by dimension; otherwise the quotient h/g
    must be a conjugated ratio of outer functions, i.e. its boundary
    conjugate has neither zeros nor poles in the open disk.
    """
    dg, dh = kernel_dim(g), kernel_dim(h)
    if dg == 0 or dh == 0:
        return dg == dh
    q = as_rational_symbol(h) / as_rational_symbol(g)
    rq = boundary_conjugate(q)
    profile = classify(rq)
    return not profile.zeros.inside and not profile.poles.inside


def verify_maximal(f, symbol, n_samples=512):
    """Certify the maximal-function identity symbol * f = conj(z O) on the
    circle with O outer in H2+.

    Returns a `MaximalFunctionCert` on success and a `Rejection` otherwise;
    raises `NotInKernel` when f is not even a kernel element.  For
    unimodular symbols the certificate is cross-computed through the
    kernel conjugation (conj(symbol * z * f) realized directly), and the two
    routes must agree pointwise.
    """
    g_rat = as_rational_symbol(symbol)
    if not in_kernel(f, g_rat):
        raise NotInKernel("candidate is not in the kernel of the symbol")
    q = RationalFunction(Polynomial([0.0, 1.0])) * g_rat * f
    witness = boundary_conjugate(q)
    ok = is_in_H2plus(witness) and is_outer(witness)
    if isinstance(symbol, UnimodularSymbol):
        conj_route = (
            boundary_conjugate(g_rat)
            * boundary_conjugate(f)
            / RationalFunction(Polynomial([0.0, 1.0]))
        )
        scale = max(1.0, np.max(np.abs(witness.circle_samples(n_samples))))
        if max_circle_diff(witness, conj_route, n_samples) > 1e-8 * scale:
            raise RuntimeError("conjugation cross-check disagrees with the witness")
    if not ok:
        return Rejection("conjugate witness is not an outer H2+ function")
    return MaximalFunctionCert(f=f, symbol=symbol, O_witness=witness)


def minimal_kernel_of(f):
    """The unimodular symbol of the smallest Toeplitz kernel containing f.

    Factor f = I * O; the symbol is conj(z I) * conj(O) / O.  Circle zeros
    of O are folded into the z-power of theta by the symbol constructor, so
    the resulting dimension is 1 + deg I + (number of circle zeros of O).
    """
    if f.is_zero:
        raise NotInHardySpace("the zero function has no minimal kernel")
    if not is_in_H2plus(f):
        raise NotInHardySpace("minimal kernels are defined for H2+ functions")
    io = inner_outer(f)
    theta = BlaschkeProduct(1.0, (0.0,) + io.inner.zeros)
    return UnimodularSymbol(theta=theta, alpha=ONE_B, outer_ratio=io.outer)


def maximal_vanishing_at(fm, lam):
    """From a maximal function with factorization fm = I * O, build the
    maximal function (z - lam) * k_tilde^I_lam * O vanishing at lam."""
    if fm.inner.degree < 1:
        raise ConstantInnerFactor(
            "planting a zero requires a non-constant inner factor"
        )
    _, k_tilde = repro_kernels(fm.inner, lam)
    return RationalFunction(Polynomial([-complex(lam), 1.0])) * k_tilde * fm.outer


@dataclass(frozen=True)
class CascadeMaximal:
    """Output of the zero-planting recursion: F_B = B * I_N * O_N is maximal
    for the original symbol and f_B = I_N * O_N for the symbol times B."""

    F_B: RationalFunction
    f_B: RationalFunction
    I_N: BlaschkeProduct
    O_N: RationalFunction
    B: BlaschkeProduct


def maximal_divisible_by_B(fm, lams, probe=None):
    """Plant zeros at each point of lams on a maximal function fm = I * O.

    Runs the shared recursion I_n = inner factor of the difference-quotient
    kernel of I_{n-1} at lam_n, O_n = k^{I_{n-1}}_{lam_n} (1 - conj(lam_n) z)
    O_{n-1}; the inner degree drops by exactly one per step.
    """
    lams = [complex(l) for l in lams]
    if len(lams) < 1:
        raise ValueError("need at least one zero to plant")
    if fm.inner.degree < len(lams):
        raise InsufficientDegree(
            "inner factor degree %d is smaller than the number of zeros %d"
            % (fm.inner.degree, len(lams))
        )
    steps = reproducing_cascade(fm.inner, lams, probe)
    O_N = fm.outer
    for step in steps:
        O_N = step.o_factor * O_N
    I_N = steps[-1].inner_after
    B = BlaschkeProduct(1.0, tuple(lams))
    f_B = I_N.to_rational() * O_N
    F_B = B.to_rational() * f_B
    return CascadeMaximal(F_B=F_B, f_B=f_B, I_N=I_N, O_N=O_N, B=B)


def lift_maximal(u, cert, target_symbol=None):
    """Push a maximal function of a subkernel up by the bounded multiplier u:
    if cert certifies f for the symbol G*u, then u*f is maximal for G.

    When `target_symbol` is omitted, G is recovered as the rational
    quotient of the certified symbol by u.
    """
    if not is_in_H2plus(u):
        raise NotInHardySpace("lift multiplier must be analytic in the closed disk")
    if target_symbol is None:
        target_symbol = RationalSymbol(as_rational_symbol(cert.symbol) / u)
    return verify_maximal(u * cert.f, target_symbol)
