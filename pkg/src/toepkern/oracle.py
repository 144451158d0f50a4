"""Independent numerical validation of the symbolic engine.

Builds finite truncations of Toeplitz operators from exact Fourier
coefficients of rational symbols, extracts their numerical kernels by SVD,
and compares against predicted bases through principal angles.  Finite
truncations can misjudge kernels near rank boundaries, so the reported
dimension is gated by agreement between sizes M and 2M.  Disagreement
between the oracle and the symbolic engine is a hard failure for the test
suite, never auto-resolved.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg
from scipy.special import comb

from .errors import DimensionMismatch, PoleOnCircle, StabilityWarning
from .ratfun import RationalFunction, has_pole_on_circle, partial_fractions

DEFAULT_TOL_RANK = 1e-8
# FFT cross-check size; skipped when a pole sits close enough to the circle
# for aliasing to ruin the comparison.
FFT_CHECK_N = 4096
FFT_SAFE_GAP = 0.05


def fourier_coeffs(f, lo, hi, cross_check=True):
    """Fourier coefficients of a rational function on indices lo..hi.

    Exact through partial fractions: the polynomial part feeds nonnegative
    indices, poles outside the disk feed geometric series into nonnegative
    indices, and poles inside the disk feed negative indices.  When every
    pole is comfortably away from the circle the result is cross-checked
    against a plain discrete Fourier transform.
    """
    if has_pole_on_circle(f):
        raise PoleOnCircle("Fourier coefficients need a circle-free pole set")
    if lo > hi:
        raise ValueError("empty index range")
    out = np.zeros(hi - lo + 1, dtype=complex)
    if f.is_zero:
        return out

    def add(idx, val):
        if lo <= idx <= hi:
            out[idx - lo] += val

    quo, terms = partial_fractions(f)
    for k_idx, c in enumerate(quo.coeffs):
        if c != 0:
            add(k_idx, c)
    for p, m, coeffs in terms:
        if abs(p) > 1.0:
            n_arr = np.arange(0, hi + 1)
            for k in range(1, m + 1):
                c = coeffs[k - 1]
                if c == 0:
                    continue
                vals = (
                    c
                    * (-1.0) ** k
                    * comb(n_arr + k - 1, k - 1)
                    * p ** (-(k + n_arr).astype(float))
                )
                for n, v in zip(n_arr, vals):
                    add(int(n), v)
        else:
            i_arr = np.arange(1, -lo + 1)
            for k in range(1, m + 1):
                c = coeffs[k - 1]
                if c == 0:
                    continue
                for i in i_arr:
                    if i < k:
                        continue
                    v = c * comb(i - 1, k - 1) * p ** float(i - k)
                    add(-int(i), v)
    if cross_check and _fft_safe(f):
        approx = _fft_coeffs(f, lo, hi)
        scale = max(1.0, float(np.max(np.abs(out))))
        err = float(np.max(np.abs(out - approx)))
        if err > 1e-10 * scale:
            raise ArithmeticError(
                "partial-fraction and FFT Fourier coefficients disagree (%.3e)" % err
            )
    return out


def _fft_safe(f):
    return all(abs(abs(p) - 1.0) >= FFT_SAFE_GAP for p, _ in f.pole_clusters)


def _fft_coeffs(f, lo, hi, n=FFT_CHECK_N):
    vals = f.circle_samples(n)
    c = np.fft.fft(vals) / n
    idx = np.arange(lo, hi + 1)
    return c[np.mod(idx, n)]


@dataclass(frozen=True)
class ToeplitzTruncation:
    """M x M section of a Toeplitz operator: entries[j, k] = fourier(j - k)."""

    size: int
    entries: np.ndarray

    @classmethod
    def build(cls, g, M, cross_check=True):
        coeffs = fourier_coeffs(g, -(M - 1), M - 1, cross_check=cross_check)
        col = coeffs[M - 1 :]
        row = coeffs[: M][::-1]
        return cls(size=M, entries=scipy.linalg.toeplitz(col, row))


def toeplitz_truncation(g, M, cross_check=True):
    return ToeplitzTruncation.build(g, M, cross_check=cross_check)


@dataclass(frozen=True)
class NumericalSubspace:
    """Orthonormal coefficient vectors spanning a subspace of C^M (rows)."""

    vectors: np.ndarray
    tol_rank: float

    @property
    def dim(self):
        return int(self.vectors.shape[0])

    @property
    def ambient(self):
        return int(self.vectors.shape[1])


def _kernel_once(g, M, tol_rank, cross_check):
    T = toeplitz_truncation(g, M, cross_check=cross_check)
    _, s, vh = np.linalg.svd(T.entries)
    smax = s[0] if len(s) else 0.0
    if smax == 0.0:
        return NumericalSubspace(np.eye(M, dtype=complex), tol_rank)
    mask = s < tol_rank * smax
    d = int(np.sum(mask))
    vecs = np.conj(vh[M - d :]) if d else np.zeros((0, M), dtype=complex)
    return NumericalSubspace(vectors=vecs, tol_rank=tol_rank)


def numerical_kernel(g, M, tol_rank=DEFAULT_TOL_RANK, stability_check=True):
    """Numerical kernel of the M x M Toeplitz truncation of the symbol g.

    Kernel vectors are the right singular vectors whose singular value falls
    below tol_rank times the largest one.  When `stability_check` is on, the
    dimension is recomputed at size 2M and a `StabilityWarning` is emitted if
    the two disagree (the M-sized answer is still returned).
    """
    sub = _kernel_once(g, M, tol_rank, cross_check=True)
    if stability_check:
        sub2 = _kernel_once(g, 2 * M, tol_rank, cross_check=False)
        if sub2.dim != sub.dim:
            warnings.warn(
                StabilityWarning(
                    "kernel dimension %d at M=%d vs %d at M=%d; increase M"
                    % (sub.dim, M, sub2.dim, 2 * M)
                )
            )
    return sub


def subspace_angle(A, B):
    """Largest principal angle (radians) between the spans of A and B.

    Computed over min(dim A, dim B) canonical pairs; callers comparing
    subspaces for equality must check dimensions first.
    """
    if A.ambient != B.ambient:
        raise DimensionMismatch(
            "ambient sizes differ: %d vs %d" % (A.ambient, B.ambient)
        )
    if A.dim == 0 or B.dim == 0:
        return 0.0 if A.dim == B.dim else float(np.pi / 2)
    M = A.vectors.conj() @ B.vectors.T
    s = np.linalg.svd(M, compute_uv=False)
    return float(np.arccos(np.clip(np.min(s), -1.0, 1.0)))


def expand_basis(fns, M, tail_tol=1e-10):
    """Expand rational H2 functions into their first M Taylor coefficients as
    orthonormalized rows; returns (subspace, tail_ok).

    tail_ok is False when the relative coefficient energy beyond M exceeds
    tail_tol, in which case the expansion at this M under-represents the
    functions and the caller should double M.
    """
    rows = []
    tail_ok = True
    for f in fns:
        c = fourier_coeffs(f, 0, 2 * M - 1, cross_check=False)
        head, tail = c[:M], c[M:]
        total = float(np.sum(np.abs(c) ** 2))
        if total > 0 and float(np.sum(np.abs(tail) ** 2)) > tail_tol * total:
            tail_ok = False
        rows.append(head)
    mat = np.stack(rows)
    q, _ = np.linalg.qr(mat.conj().T)
    vectors = q.conj().T[: len(fns)]
    return NumericalSubspace(vectors=vectors, tol_rank=0.0), tail_ok


@dataclass(frozen=True)
class OracleReport:
    dim_predicted: int
    dim_numeric: int
    angle: float
    M_used: int

    @property
    def agreed(self):
        return self.dim_predicted == self.dim_numeric and self.angle < 1e-6


def check_prediction(symbol_rat, predicted_fns, M, tol_rank=DEFAULT_TOL_RANK, max_doublings=3):
    """Compare a predicted kernel basis against the truncation oracle.

    Expands the predicted elements at M (doubling M while their coefficient
    tails carry too much energy), takes the numerical kernel at the same
    size, and reports both dimensions and the largest principal angle.
    """
    M_cur = M
    for _ in range(max_doublings + 1):
        predicted, tail_ok = expand_basis(predicted_fns, M_cur)
        if tail_ok:
            break
        M_cur *= 2
    numeric = numerical_kernel(symbol_rat, M_cur, tol_rank, stability_check=True)
    if numeric.dim == len(predicted_fns):
        angle = subspace_angle(predicted, numeric)
    else:
        angle = float(np.pi / 2)
    return OracleReport(
        dim_predicted=len(predicted_fns),
        dim_numeric=numeric.dim,
        angle=angle,
        M_used=M_cur,
    )
