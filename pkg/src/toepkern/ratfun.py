"""Rational functions on and around the unit circle.

Provides the reduced num/den carrier used by every higher module, the
inside/on-circle/outside classification of zeros and poles, boundary
conjugation, the analytic-part projection (partial fractions), and circle
inner products by trapezoidal quadrature.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import BoundaryAmbiguous, PoleOnCircle, ZeroDenominator, ZeroPolynomial
from .polyalg import (
    CLUSTER_TOL,
    P_ONE,
    Polynomial,
    expand_clusters,
    reflect,
    root_clusters,
)

# Half-width of the on-circle band for zero/pole classification.
BOUNDARY_TOL = 1e-8
# Root-matching radius when cancelling numerator roots against denominator
# roots; a bit looser than the cluster tolerance to absorb pipeline noise.
REDUCE_TOL = 1e-7
# Default quadrature size for circle inner products.
INNER_SAMPLES = 2048


def _cluster_scale(*cluster_lists):
    scale = 1.0
    for clusters in cluster_lists:
        for loc, _ in clusters:
            scale = max(scale, abs(loc))
    return scale


def _cancel_clusters(zeros, poles):
    """Greedy min-multiplicity cancellation of matched zero/pole clusters."""
    poles = [[loc, mult] for loc, mult in poles]
    scale = _cluster_scale(zeros, poles)
    cancelled = False
    kept_zeros = []
    for loc, mult in zeros:
        best = None
        best_dist = REDUCE_TOL * scale
        for entry in poles:
            d = abs(entry[0] - loc)
            if entry[1] > 0 and d <= best_dist:
                best, best_dist = entry, d
        if best is not None:
            take = min(mult, best[1])
            best[1] -= take
            cancelled = True
            if mult - take > 0:
                kept_zeros.append((complex(loc), int(mult - take)))
        else:
            kept_zeros.append((complex(loc), int(mult)))
    kept_poles = [(complex(loc), int(mult)) for loc, mult in poles if mult > 0]
    return kept_zeros, kept_poles, cancelled


def _merge_multisets(a, b):
    """Union of two (location, multiplicity) multisets, adding multiplicities
    of tol-matched locations."""
    out = [[complex(loc), int(mult), abs(loc)] for loc, mult in a]
    scale = _cluster_scale(a, b)
    for loc, mult in b:
        best = None
        best_dist = REDUCE_TOL * scale
        for entry in out:
            d = abs(entry[0] - loc)
            if d <= best_dist:
                best, best_dist = entry, d
        if best is not None:
            # multiplicity-weighted average of the two accurate locations
            total = best[1] + mult
            best[0] = (best[0] * best[1] + complex(loc) * mult) / total
            best[1] = total
        else:
            out.append([complex(loc), int(mult), abs(loc)])
    return [(e[0], e[1]) for e in out]


def _union_max(a, b):
    """Union of two multisets with max-matched multiplicities, plus the
    cofactor multisets lcm/a and lcm/b."""
    union = []
    used_b = [False] * len(b)
    scale = _cluster_scale(a, b)
    for loc, mult in a:
        match = None
        best_dist = REDUCE_TOL * scale
        for j, (loc_b, mult_b) in enumerate(b):
            d = abs(loc_b - loc)
            if not used_b[j] and d <= best_dist:
                match, best_dist = j, d
        if match is None:
            union.append((complex(loc), int(mult), int(mult), 0))
        else:
            used_b[match] = True
            loc_b, mult_b = b[match]
            m = max(mult, mult_b)
            union.append(((complex(loc) + complex(loc_b)) / 2.0, m, int(mult), int(mult_b)))
    for j, (loc_b, mult_b) in enumerate(b):
        if not used_b[j]:
            union.append((complex(loc_b), int(mult_b), 0, int(mult_b)))
    lcm = [(loc, m) for loc, m, _, _ in union]
    cof_a = [(loc, m - ma) for loc, m, ma, _ in union if m - ma > 0]
    cof_b = [(loc, m - mb) for loc, m, _, mb in union if m - mb > 0]
    return lcm, cof_a, cof_b


class RationalFunction:
    """Reduced quotient of two complex polynomials with a monic denominator.

    Construction cancels any numerator/denominator roots that match within
    `REDUCE_TOL`, so stored functions never carry removable singularities.
    The clustered zeros and poles found during reduction are kept on the
    instance ((location, multiplicity) tuples); products, quotients and
    boundary conjugates are computed on those multisets directly, so
    repeated factors never go through an expanded-polynomial root solve.
    """

    __slots__ = ("num", "den", "zero_clusters", "pole_clusters")

    def __init__(self, num, den=1.0):
        num = num if isinstance(num, Polynomial) else Polynomial(num)
        den = den if isinstance(den, Polynomial) else Polynomial(den)
        if den.is_zero:
            raise ZeroDenominator("rational function with zero denominator")
        if num.is_zero:
            self._install(Polynomial([0.0]), P_ONE, (), ())
            return
        zc = root_clusters(num) if num.degree > 0 else []
        pc = root_clusters(den) if den.degree > 0 else []
        lead_ratio = num.leading / den.leading
        self._install_from_parts(lead_ratio, zc, pc)

    def _install(self, num, den, zc, pc):
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)
        object.__setattr__(self, "zero_clusters", tuple(zc))
        object.__setattr__(self, "pole_clusters", tuple(pc))

    def _install_from_parts(self, lead_ratio, zeros, poles):
        zeros, poles, _ = _cancel_clusters(zeros, poles)
        num = Polynomial.from_roots(expand_clusters(zeros), leading=lead_ratio)
        den = Polynomial.from_roots(expand_clusters(poles))
        self._install(num, den, zeros, poles)

    @classmethod
    def _from_parts(cls, lead_ratio, zeros, poles):
        """Build from factored data: leading-coefficient ratio plus zero and
        pole (location, multiplicity) multisets."""
        obj = object.__new__(cls)
        if lead_ratio == 0:
            obj._install(Polynomial([0.0]), P_ONE, (), ())
            return obj
        obj._install_from_parts(complex(lead_ratio), list(zeros), list(poles))
        return obj

    @classmethod
    def _with_poles(cls, num, pole_clusters):
        """Build from a numerator polynomial and an already-factored
        denominator (monic, given by its pole multiset)."""
        obj = object.__new__(cls)
        if num.is_zero:
            obj._install(Polynomial([0.0]), P_ONE, (), ())
            return obj
        zc = root_clusters(num) if num.degree > 0 else []
        obj._install_from_parts(num.leading, zc, list(pole_clusters))
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @property
    def is_zero(self):
        return self.num.is_zero

    @property
    def is_constant(self):
        return self.num.degree == 0 and self.den.degree == 0

    def constant_value(self):
        if not self.is_constant:
            raise ValueError("not a constant rational function")
        return complex(self.num.coeffs[0] / self.den.coeffs[0])

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        vals = self.num(z) / self.den(z)
        return complex(vals) if np.ndim(vals) == 0 else vals

    def circle_samples(self, n=INNER_SAMPLES):
        z = np.exp(2j * np.pi * np.arange(n) / n)
        return self(z)

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, Polynomial):
            return RationalFunction(other)
        if isinstance(other, (int, float, complex)):
            return RationalFunction(Polynomial([other]))
        return NotImplemented

    def _add_signed(self, other, sign):
        if self.is_zero:
            return other if sign > 0 else -other
        if other.is_zero:
            return self
        lcm, cof_self, cof_other = _union_max(self.pole_clusters, other.pole_clusters)
        num = self.num * Polynomial.from_roots(expand_clusters(cof_self)) + (
            sign * other.num * Polynomial.from_roots(expand_clusters(cof_other))
        )
        return RationalFunction._with_poles(num, lcm)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._add_signed(other, 1.0)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._add_signed(other, -1.0)

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return RationalFunction(Polynomial([0.0]))
        return RationalFunction._from_parts(
            self.num.leading * other.num.leading,
            _merge_multisets(self.zero_clusters, other.zero_clusters),
            _merge_multisets(self.pole_clusters, other.pole_clusters),
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_zero:
            raise ZeroDenominator("division by the zero rational function")
        if self.is_zero:
            return RationalFunction(Polynomial([0.0]))
        return RationalFunction._from_parts(
            self.num.leading / other.num.leading,
            _merge_multisets(self.zero_clusters, other.pole_clusters),
            _merge_multisets(self.pole_clusters, other.zero_clusters),
        )

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __neg__(self):
        out = object.__new__(RationalFunction)
        out._install(-self.num, self.den, self.zero_clusters, self.pole_clusters)
        return out

    def __pow__(self, n):
        if not isinstance(n, int):
            raise ValueError("rational powers must be integers")
        if n < 0:
            return RationalFunction(P_ONE) / (self ** (-n))
        out = RationalFunction(P_ONE)
        for _ in range(n):
            out = out * self
        return out

    def __repr__(self):
        return "RationalFunction(num=%r, den=%r)" % (self.num, self.den)


RF_ZERO = RationalFunction(Polynomial([0.0]))
RF_ONE = RationalFunction(P_ONE)
RF_Z = RationalFunction(Polynomial([0.0, 1.0]))


def rational(num, den=1.0):
    """Shorthand constructor accepting coefficient lists or scalars."""
    return RationalFunction(
        num if isinstance(num, Polynomial) else Polynomial(np.atleast_1d(num)),
        den if isinstance(den, Polynomial) else Polynomial(np.atleast_1d(den)),
    )


@dataclass(frozen=True)
class BandedRoots:
    """Roots split by position relative to the unit circle, with multiplicity."""

    inside: tuple
    on_circle: tuple
    outside: tuple

    def count(self):
        return sum(m for _, m in self.inside + self.on_circle + self.outside)

    def count_inside(self):
        return sum(m for _, m in self.inside)

    def count_on_circle(self):
        return sum(m for _, m in self.on_circle)

    def count_outside(self):
        return sum(m for _, m in self.outside)


@dataclass(frozen=True)
class PoleZeroProfile:
    zeros: BandedRoots
    poles: BandedRoots


def _band(clusters, tol_boundary):
    inside, on_circle, outside = [], [], []
    for loc, mult in clusters:
        gap = abs(abs(loc) - 1.0)
        if abs(gap - tol_boundary) < tol_boundary / 10.0:
            raise BoundaryAmbiguous(
                "root at %s lies within the ambiguity band of the circle "
                "classification (|gap - tol| < tol/10)" % repr(loc)
            )
        if gap < tol_boundary:
            on_circle.append((loc, mult))
        elif abs(loc) < 1.0:
            inside.append((loc, mult))
        else:
            outside.append((loc, mult))
    return BandedRoots(tuple(inside), tuple(on_circle), tuple(outside))


def classify(f, tol_boundary=BOUNDARY_TOL):
    """Split the zeros and poles of ``f`` into inside/on-circle/outside bands.

    Raises `BoundaryAmbiguous` when a root sits within a tenth of the band
    half-width of the band edge, because a silent misclassification there
    changes kernel dimensions downstream.
    """
    return PoleZeroProfile(
        zeros=_band(f.zero_clusters, tol_boundary),
        poles=_band(f.pole_clusters, tol_boundary),
    )


def has_pole_on_circle(f, tol_boundary=BOUNDARY_TOL):
    return any(abs(abs(p) - 1.0) < tol_boundary for p, _ in f.pole_clusters)


def boundary_conjugate(f):
    """The rational function agreeing with conj(f) on the unit circle.

    ``R[f](z) = conj(f(1/conj(z)))``: zeros and poles reflect across the
    circle (origin roots trade against the compensating power of z), and the
    leading constant follows from writing each reflected factor
    ``1 - conj(r) z = -conj(r) (z - 1/conj(r))``.  An involution up to
    reduction; computed on the factored data, never by re-solving.
    """
    if f.is_zero:
        return f
    lead = np.conj(f.num.leading)
    zeros = []
    poles = []
    for loc, mult in f.zero_clusters:
        if abs(loc) < 1e-13:
            continue
        lead = lead * (-np.conj(loc)) ** mult
        zeros.append((1.0 / np.conj(loc), mult))
    for loc, mult in f.pole_clusters:
        if abs(loc) < 1e-13:
            continue
        lead = lead / (-np.conj(loc)) ** mult
        poles.append((1.0 / np.conj(loc), mult))
    k = f.den.degree - f.num.degree
    if k > 0:
        zeros.append((0.0 + 0.0j, k))
    elif k < 0:
        poles.append((0.0 + 0.0j, -k))
    return RationalFunction._from_parts(lead, zeros, poles)


def _taylor_shift(poly, p):
    """Ascending coefficients of poly(w + p)."""
    out = np.array(poly.coeffs, dtype=complex)
    n = len(out)
    for i in range(n):
        for j in range(n - 2, i - 1, -1):
            out[j] += p * out[j + 1]
    return out


def _series_div(a, b, m):
    """First m coefficients of the power series a(w)/b(w); requires b[0] != 0."""
    a = np.pad(np.asarray(a, dtype=complex), (0, max(0, m - len(a))))[:m]
    b = np.pad(np.asarray(b, dtype=complex), (0, max(0, m - len(b))))[:m]
    s = np.zeros(m, dtype=complex)
    for k in range(m):
        acc = a[k]
        for i in range(1, k + 1):
            acc -= b[i] * s[k - i]
        s[k] = acc / b[0]
    return s


def partial_fractions(f):
    """Decompose ``f = poly_part + sum c_{p,k} / (z - p)^k``.

    Returns ``(poly_part, terms)`` where terms is a list of
    ``(pole, multiplicity, coeffs)`` and ``coeffs[k-1]`` multiplies
    ``(z - p)^{-k}``.  Repeated poles are handled through Taylor series
    division at the pole, which is what makes clustered multiplicities safe.
    """
    quo, rem = divmod(f.num, f.den)
    terms = []
    if not rem.is_zero:
        poles = list(f.pole_clusters)
        for idx, (p, m) in enumerate(poles):
            others = []
            for j, (q, k) in enumerate(poles):
                if j != idx:
                    others.extend([q] * k)
            dother = Polynomial.from_roots(others)
            nshift = _taylor_shift(rem, p)
            dshift = _taylor_shift(dother, p)
            s = _series_div(nshift, dshift, m)
            coeffs = tuple(complex(s[m - k]) for k in range(1, m + 1))
            terms.append((complex(p), int(m), coeffs))
    return quo, terms


def project_plus(f, tol_boundary=BOUNDARY_TOL):
    """Analytic-in-the-closed-disk part of ``f``: the polynomial part plus all
    partial-fraction terms whose poles lie outside the disk.

    The complement ``f - project_plus(f)`` has poles only inside the disk and
    vanishes at infinity, i.e. it carries exactly the negative Fourier modes.
    """
    profile = classify(f, tol_boundary)
    if profile.poles.on_circle:
        raise PoleOnCircle("projection undefined for a symbol with poles on the circle")
    quo, terms = partial_fractions(f)
    outside = [(p, m, c) for (p, m, c) in terms if abs(p) > 1.0]
    if not outside:
        return RationalFunction(quo)
    den_roots = []
    for p, m, _ in outside:
        den_roots.extend([p] * m)
    den = Polynomial.from_roots(den_roots)
    num = quo * den
    for p, m, coeffs in outside:
        for k in range(1, m + 1):
            cofactor_roots = [q for q in den_roots]
            for _ in range(k):
                cofactor_roots.remove(p)
            num = num + coeffs[k - 1] * Polynomial.from_roots(cofactor_roots)
    return RationalFunction._with_poles(num, [(p, m) for p, m, _ in outside])


def l2_inner(f, g, n_samples=INNER_SAMPLES):
    """Trapezoidal approximation of the circle inner product
    ``(1/2pi) integral f conj(g)``.

    For rational functions without poles on the circle the rule converges
    geometrically, so the default sample count is far beyond the accuracy of
    anything else in the package.
    """
    for h in (f, g):
        if has_pole_on_circle(h):
            raise PoleOnCircle("inner product undefined with a pole on the circle")
    fv = f.circle_samples(n_samples)
    gv = g.circle_samples(n_samples)
    return complex(np.mean(fv * np.conj(gv)))


def l2_norm(f, n_samples=INNER_SAMPLES):
    val = l2_inner(f, f, n_samples)
    return float(np.sqrt(max(val.real, 0.0)))


def sup_circle(f, n_samples=INNER_SAMPLES):
    """Max of |f| over n uniform circle samples."""
    return float(np.max(np.abs(f.circle_samples(n_samples))))


def max_circle_diff(f, g, n_samples=512):
    """Max of |f - g| over n uniform circle samples (for agreement checks)."""
    return float(np.max(np.abs(f.circle_samples(n_samples) - g.circle_samples(n_samples))))
