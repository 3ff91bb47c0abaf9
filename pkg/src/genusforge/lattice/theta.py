"""Short vectors and theta coefficients of positive definite even lattices.

Enumeration is Fincke-Pohst: an exact LDL^T decomposition gives the
bounds, floats prune the search tree (always widened outward, so a float
rounding error can only admit extra candidates, never drop one), and
every surviving candidate has its norm recomputed in integer arithmetic
before it is counted.
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np

from ..errors import (
    InternalError,
    LimitError,
    NotPositiveDefiniteError,
    ValidationError,
)
from .lattice import EvenLattice

_SLACK = 1e-6
_FLUSH_ROWS = 1 << 16


def _ldl(gram) -> tuple[list[Fraction], list[list[Fraction]]]:
    """G = L D L^T with L unit lower triangular, D diagonal positive."""
    n = len(gram)
    d = [Fraction(0)] * n
    low = [[Fraction(0)] * n for _ in range(n)]
    for j in range(n):
        acc = Fraction(gram[j][j])
        for k in range(j):
            acc -= low[j][k] * low[j][k] * d[k]
        if acc <= 0:
            raise NotPositiveDefiniteError(
                f"Gram matrix is not positive definite (pivot {j})")
        d[j] = acc
        low[j][j] = Fraction(1)
        for i in range(j + 1, n):
            val = Fraction(gram[i][j])
            for k in range(j):
                val -= low[i][k] * low[j][k] * d[k]
            low[i][j] = val / d[j]
    return d, low


def _enumerate(l: EvenLattice, max_norm: int, store: bool):
    """Counts {norm: #vectors} for 0 < norm <= max_norm, plus the vectors
    themselves when store is set.  Counts and stored vectors include both
    signs of each +/- pair."""
    n = l.rank
    gram = l.gram
    d, low = _ldl(gram)
    df = [float(x) for x in d]
    lf = [[float(x) for x in row] for row in low]
    gnp = np.array(gram, dtype=np.int64)
    counts: dict[int, int] = {}
    kept_blocks: list[np.ndarray] = []
    blocks: list[np.ndarray] = []
    pending = 0
    c = [0.0] * n
    x = [0] * n

    def flush() -> None:
        nonlocal blocks, pending
        if not blocks:
            return
        cand = np.concatenate(blocks)
        blocks = []
        pending = 0
        norms = np.einsum("ij,jk,ik->i", cand, gnp, cand)
        keep = (norms > 0) & (norms <= max_norm)
        vals, reps = np.unique(norms[keep], return_counts=True)
        for v, r in zip(vals, reps):
            if int(v) % 2:
                raise InternalError("odd vector norm in an even lattice")
            counts[int(v)] = counts.get(int(v), 0) + 2 * int(r)
        if store and keep.any():
            kept_blocks.append(cand[keep])

    def descend(j: int, rem: float, zero_prefix: bool) -> None:
        nonlocal pending
        if rem < -_SLACK:
            return
        radius = math.sqrt(max(rem, 0.0) / df[j]) + 1e-9
        lo = math.ceil(-c[j] - radius)
        hi = math.floor(-c[j] + radius)
        if zero_prefix:
            lo = max(lo, 0)
        if hi < lo:
            return
        if j == 0:
            block = np.empty((hi - lo + 1, n), dtype=np.int64)
            block[:, 0] = np.arange(lo, hi + 1)
            for t in range(1, n):
                block[:, t] = x[t]
            blocks.append(block)
            pending += len(block)
            if pending >= _FLUSH_ROWS:
                flush()
            return
        for v in range(lo, hi + 1):
            y = v + c[j]
            rem2 = rem - df[j] * y * y
            if rem2 < -_SLACK:
                continue
            x[j] = v
            for t in range(j):
                c[t] += lf[j][t] * v
            descend(j - 1, rem2, zero_prefix and v == 0)
            for t in range(j):
                c[t] -= lf[j][t] * v
        x[j] = 0

    if max_norm > 0:
        descend(n - 1, float(max_norm), True)
        flush()
    vectors = None
    if store:
        if kept_blocks:
            half = np.concatenate(kept_blocks)
            vectors = np.concatenate([half, -half])
        else:
            vectors = np.empty((0, n), dtype=np.int64)
    return counts, vectors


def short_vectors(l: EvenLattice, max_norm: int) -> list[tuple[int, ...]]:
    """All nonzero v with (v, v) <= max_norm, both signs included."""
    if not isinstance(max_norm, int) or max_norm < 0:
        raise ValidationError("max_norm must be a nonnegative integer")
    _, vectors = _enumerate(l, max_norm, store=True)
    return sorted(tuple(int(t) for t in row) for row in vectors)


def theta_coefficients(l: EvenLattice, k: int, cap: int = 64) -> tuple[int, ...]:
    """(c_0, ..., c_k) with c_m the number of vectors of norm 2m."""
    if not isinstance(k, int) or k < 0:
        raise ValidationError("theta needs a nonnegative term count")
    if k > cap:
        raise LimitError(f"theta term count {k} exceeds cap {cap}")
    counts, _ = _enumerate(l, 2 * k, store=False)
    return (1,) + tuple(counts.get(2 * m, 0) for m in range(1, k + 1))
