"""Complex polynomial arithmetic: companion-matrix root finding with
multiplicity-aware clustering, coefficient reflection, and approximate gcd.

Coefficient vectors are stored in ascending degree order,
``p(z) = c[0] + c[1] z + ... + c[n] z^n``.  All coefficients are ordinary
complex floats; there is no exact arithmetic anywhere in the package, so
every root-based decision downstream is tolerance-based by design.
"""

from __future__ import annotations

import numpy as np
import numpy.polynomial.polynomial as npoly

from .errors import ZeroPolynomial

# Relative size below which a trailing coefficient is treated as noise.
TRIM_TOL = 1e-10
# Default relative radius for merging root clusters.
CLUSTER_TOL = 1e-8
# An m-fold root scatters by roughly FLOOR**(1/m) under coefficient
# rounding, so candidate clusters of size m are merged at that radius even
# when it exceeds the user tolerance.  Genuinely distinct roots closer than
# this floor are treated as one multiple root.
MULTIPLICITY_FLOOR = 1e-11


def _as_coeffs(data):
    c = np.atleast_1d(np.asarray(data, dtype=complex)).ravel()
    if c.size == 0:
        return np.zeros(1, dtype=complex)
    return c


def _trim(c, tol=TRIM_TOL):
    top = float(np.max(np.abs(c)))
    if top == 0.0:
        return np.zeros(1, dtype=complex)
    big = np.nonzero(np.abs(c) > tol * top)[0]
    return np.array(c[: int(big[-1]) + 1], dtype=complex)


class Polynomial:
    """Immutable dense complex polynomial.

    The zero polynomial is stored as the single coefficient ``[0]``; any
    other polynomial has a leading coefficient that is non-negligible
    relative to the largest one.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        c = _trim(_as_coeffs(coeffs))
        if not np.all(np.isfinite(c)):
            raise ValueError("polynomial coefficients must be finite")
        c.setflags(write=False)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def from_roots(cls, roots, leading=1.0):
        roots = np.asarray(list(roots), dtype=complex)
        if roots.size == 0:
            return cls([leading])
        return cls(np.asarray(npoly.polyfromroots(roots), dtype=complex) * leading)

    @classmethod
    def monomial(cls, k, coeff=1.0):
        c = np.zeros(k + 1, dtype=complex)
        c[k] = coeff
        return cls(c)

    @property
    def degree(self):
        return len(self.coeffs) - 1

    @property
    def is_zero(self):
        return len(self.coeffs) == 1 and self.coeffs[0] == 0

    @property
    def leading(self):
        return complex(self.coeffs[-1])

    @property
    def norm(self):
        return float(np.linalg.norm(self.coeffs))

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        vals = npoly.polyval(z, self.coeffs)
        return complex(vals) if vals.ndim == 0 else vals

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, float, complex)):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(npoly.polyadd(self.coeffs, other.coeffs))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Polynomial(npoly.polysub(self.coeffs, other.coeffs))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self.is_zero or other.is_zero:
            return Polynomial([0.0])
        return Polynomial(npoly.polymul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __neg__(self):
        return Polynomial(-self.coeffs)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomial powers must be non-negative integers")
        out = Polynomial([1.0])
        for _ in range(n):
            out = out * self
        return out

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero:
            raise ZeroPolynomial("division by the zero polynomial")
        quo, rem = npoly.polydiv(self.coeffs, other.coeffs)
        return Polynomial(quo), Polynomial(rem)

    def derivative(self):
        return Polynomial(npoly.polyder(self.coeffs))

    def monic(self):
        if self.is_zero:
            raise ZeroPolynomial("the zero polynomial has no monic form")
        return Polynomial(self.coeffs / self.leading)

    def allclose(self, other, tol=1e-9):
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        a = np.pad(a, (0, n - len(a)))
        b = np.pad(b, (0, n - len(b)))
        scale = max(1.0, float(np.max(np.abs(a))), float(np.max(np.abs(b))))
        return bool(np.max(np.abs(a - b)) <= tol * scale)

    def __repr__(self):
        return "Polynomial(%s)" % np.array2string(self.coeffs, precision=6, separator=", ")


P_ZERO = Polynomial([0.0])
P_ONE = Polynomial([1.0])
P_Z = Polynomial([0.0, 1.0])


def reflect(p):
    """Conjugate-reverse the coefficients: ``p*(z) = z^deg(p) conj(p(1/conj(z)))``.

    On |z| = 1 this realizes ``conj(p(z)) = z^{-deg p} p*(z)``.  An involution
    up to trailing-zero normalization (roots at the origin are dropped).
    """
    return Polynomial(np.conj(p.coeffs[::-1]))


def _components(locs, radius):
    # connected components of the "distance <= radius" graph (union-find)
    n = len(locs)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            if abs(locs[i] - locs[j]) <= radius:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    comps = {}
    for i in range(n):
        comps.setdefault(find(i), []).append(i)
    return list(comps.values())


def _agglomerate(points, pinned_zero_mult, tol):
    """Merge raw roots into (location, multiplicity, pinned) clusters.

    Walks candidate multiplicities from high to low; at multiplicity m the
    merge radius is the larger of the user tolerance and the backward-error
    floor for an m-fold root.  A pinned cluster (exact zeros read off the
    coefficients) keeps its location through merges.
    """
    clusters = [[complex(p), 1, False] for p in points]
    if pinned_zero_mult:
        clusters.append([0.0 + 0.0j, pinned_zero_mult, True])
    total = sum(c[1] for c in clusters)
    scale = max(1.0, max((abs(c[0]) for c in clusters), default=1.0))
    for m in range(total, 1, -1):
        radius = scale * max(tol, MULTIPLICITY_FLOOR ** (1.0 / m))
        merged = True
        while merged and len(clusters) > 1:
            merged = False
            comps = _components([c[0] for c in clusters], radius)
            for comp in comps:
                size = sum(clusters[i][1] for i in comp)
                if len(comp) > 1 and size >= m:
                    members = [clusters[i] for i in comp]
                    pinned = any(c[2] for c in members)
                    if pinned:
                        loc = 0.0 + 0.0j
                    else:
                        loc = sum(c[0] * c[1] for c in members) / size
                    clusters = [c for i, c in enumerate(clusters) if i not in comp]
                    clusters.append([loc, size, pinned])
                    merged = True
                    break
    return clusters


def _polish_cluster(p, loc, mult, radius):
    # a root of multiplicity m is a simple root of the (m-1)-th derivative
    q = p
    for _ in range(mult - 1):
        q = q.derivative()
    dq = q.derivative()
    x = loc
    for _ in range(8):
        qx = q(x)
        dqx = dq(x)
        if abs(dqx) == 0.0:
            break
        step = qx / dqx
        x = x - step
        if abs(step) < 1e-15 * max(1.0, abs(x)):
            break
    if abs(x - loc) <= max(radius, 1e-12) and abs(q(x)) <= abs(q(loc)):
        return x
    return loc


def root_clusters(p, tol=CLUSTER_TOL):
    """Roots of ``p`` as (location, multiplicity) pairs.

    Companion-matrix eigenvalues, followed by multiplicity-aware clustering
    (merged to the centroid) and a Newton polish of each multiple root on the
    appropriate derivative.  Exact zero roots are read off the low-order
    coefficients before the eigenvalue solve.
    """
    if p.is_zero:
        raise ZeroPolynomial("cannot take roots of the zero polynomial")
    if p.degree == 0:
        return []
    c = p.coeffs
    top = float(np.max(np.abs(c)))
    nz = np.nonzero(np.abs(c) > 1e-14 * top)[0]
    k0 = int(nz[0])
    body = c[k0:]
    if len(body) > 1:
        raw = npoly.polyroots(body)
    else:
        raw = np.array([], dtype=complex)
    clusters = _agglomerate(raw, k0, tol)
    scale = max(1.0, max((abs(c0[0]) for c0 in clusters), default=1.0))
    out = []
    for loc, mult, pinned in clusters:
        if not pinned and mult > 1:
            radius = scale * max(tol, MULTIPLICITY_FLOOR ** (1.0 / mult))
            loc = _polish_cluster(p, loc, mult, radius)
        out.append((complex(loc), int(mult)))
    out.sort(key=lambda t: (round(t[0].real, 12), round(t[0].imag, 12)))
    return out


def expand_clusters(clusters):
    """Flatten (location, multiplicity) pairs into a root multiset."""
    flat = []
    for loc, mult in clusters:
        flat.extend([loc] * mult)
    return flat


def roots(p, tol=CLUSTER_TOL):
    """Root multiset of ``p`` (length = deg p), clustered per `root_clusters`."""
    return np.asarray(expand_clusters(root_clusters(p, tol)), dtype=complex)


def approx_gcd(p, q, tol=CLUSTER_TOL):
    """Monic polynomial whose roots are the tol-matched root pairs of p and q.

    Matching is done on clustered roots with the minimum of the two
    multiplicities; returns 1 when nothing matches.  Far more stable than
    Euclidean remainder chains at these degrees.
    """
    if p.is_zero and q.is_zero:
        raise ZeroPolynomial("gcd of two zero polynomials")
    if p.is_zero:
        return q.monic()
    if q.is_zero:
        return p.monic()
    if p.degree == 0 or q.degree == 0:
        return P_ONE
    cp = root_clusters(p, tol)
    cq = [[loc, mult] for loc, mult in root_clusters(q, tol)]
    scale = max(
        1.0,
        max(abs(l) for l, _ in cp),
        max(abs(l) for l, _ in cq),
    )
    matched = []
    for loc, mult in cp:
        best = None
        best_dist = tol * scale
        for entry in cq:
            d = abs(entry[0] - loc)
            if entry[1] > 0 and d <= best_dist:
                best, best_dist = entry, d
        if best is not None:
            take = min(mult, best[1])
            best[1] -= take
            matched.extend([(loc + best[0]) / 2.0] * take)
    if not matched:
        return P_ONE
    return Polynomial.from_roots(matched)
