"""Greedy lexicographic codes.

The code is what the literal greedy scan produces: walk the integers
0..2^n - 1 (bit i is coordinate i, so the scan is least significant
position first) and admit a vector when its Hamming distance to the
span of the admitted vectors is at least d.  The admitted set is linear,
so the scan is equivalent to tracking cosets: within the block
[2^t, 2^(t+1)) at most one vector joins, namely 2^t + u for the
smallest u whose coset of the current code has minimum weight >= d - 1
(the leading bit contributes the remaining 1).  Keeping one
(leader, min weight) record per coset reproduces the scan without
touching all 2^n vectors.
"""

from __future__ import annotations

from ..errors import LimitError, ValidationError
from .binary import BinaryCode, build_code

_TABLE_CAP = 1 << 22


def _reduce(word, basis):
    # basis rows keyed by distinct top bits, highest first
    for top, b in basis:
        if word >> top & 1:
            word ^= b
    return word


def lexicode(n: int, d: int) -> BinaryCode:
    """Greedy lexicographic code of length n and design distance d."""
    if not isinstance(n, int) or not isinstance(d, int):
        raise ValidationError("length and distance must be integers")
    if not 1 <= n <= 64:
        raise ValidationError("length must be between 1 and 64")
    if d < 1:
        raise ValidationError("distance must be at least 1")
    basis: list[tuple[int, int]] = []  # (top bit, row), highest top first
    # cosets of the current code inside [0, 2^t): canonical residue ->
    # (lexicographically first element, minimum weight)
    table = {0: (0, 0)}
    for t in range(n):
        doubled = {}
        for res, (leader, mw) in table.items():
            doubled[res] = (leader, mw)
            doubled[res | (1 << t)] = (leader | (1 << t), mw + 1)
        if len(doubled) > _TABLE_CAP:
            raise LimitError("coset table exceeds the supported size")
        table = doubled
        best = None
        for res, (leader, mw) in table.items():
            if res >> t & 1 and mw >= d and (best is None or leader < best):
                best = leader
        if best is None:
            continue
        basis.insert(0, (t, best))
        merged = {}
        for res, rec in table.items():
            key = _reduce(res, basis)
            old = merged.get(key)
            if old is None:
                merged[key] = rec
            else:
                merged[key] = (min(old[0], rec[0]), min(old[1], rec[1]))
        table = merged
    code = build_code(n, [b for _, b in basis])
    assert code.dim == len(basis), "greedy output failed the linearity check"
    return code
