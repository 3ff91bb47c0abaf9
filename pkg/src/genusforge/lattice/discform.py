"""Discriminant forms, signatures, and genus symbols of even lattices.

The dual quotient L*/L is read off the Smith normal form of the Gram
matrix G: with U G V = D, the columns of U^(-1) give integer vectors
whose classes generate coker(G) with orders d_1 | d_2 | ... , and in
dual-basis coordinates those same vectors are the generators of L*/L.
The quadratic form q(x) = (x, x) mod 2Z is evaluated through the exact
rational inverse of G.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InternalError, ValidationError
from ..exactkernel import (
    int_inv_unimodular,
    mat_mul,
    rat_inv,
    rational_signature,
    smith_normal_form,
    transpose,
)
from ..quadspace import (
    FiniteQuadraticSpace,
    build_space,
    is_isometric,
    signature_mod8,
    trivial_space,
)
from .lattice import EvenLattice


def _disc_with_lifts(l: EvenLattice):
    """Discriminant form plus rational lift vectors, one per generator.

    Returns (space, lifts) where lifts[i] is a vector in Q^n, written in
    the basis of L, representing generator i of the space inside L*.
    """
    g = l.gram
    n = l.rank
    snf = smith_normal_form(g)
    w = int_inv_unimodular(snf.u)
    ginv = rat_inv(g)
    # m[i][j] = u_i^T G^(-1) u_j where u_i is column i of U^(-1).
    m = mat_mul(transpose(w), mat_mul(ginv, w))
    kept = [i for i in range(n) if snf.diagonal[i] != 1]
    orders = [snf.diagonal[i] for i in kept]
    if not orders:
        return trivial_space(), []
    q = [m[i][i] % 2 for i in kept]
    b = [[m[i][j] % 1 for j in kept] for i in kept]
    space = build_space(orders, q, b)
    if space.orders != tuple(orders):
        raise InternalError("SNF orders should survive canonicalization")
    lifts = []
    for i in kept:
        col = [w[r][i] for r in range(n)]
        lifts.append(tuple(sum(Fraction(ginv[r][c]) * col[c] for c in range(n))
                           for r in range(n)))
    return space, lifts


def discriminant_form(l: EvenLattice) -> FiniteQuadraticSpace:
    """The finite quadratic space (L*/L, q) with q(x) = (x, x) mod 2Z."""
    space, _ = _disc_with_lifts(l)
    return space


def signature(l: EvenLattice) -> tuple[int, int]:
    pos, neg, zero = rational_signature(l.gram)
    if zero:
        raise InternalError("nonsingular Gram matrix cannot have zero signature part")
    return pos, neg


@dataclass(frozen=True)
class GenusSymbol:
    """A genus, recorded as (discriminant form, signature pair)."""

    disc_form: FiniteQuadraticSpace
    signature: tuple[int, int]

    def __post_init__(self) -> None:
        pos, neg = self.signature
        if signature_mod8(self.disc_form) != (pos - neg) % 8:
            raise InternalError("signature and discriminant form violate the "
                                "mod-8 signature relation")


def genus_symbol(l: EvenLattice) -> GenusSymbol:
    return GenusSymbol(discriminant_form(l), signature(l))


def same_genus(l1: EvenLattice, l2: EvenLattice) -> bool:
    """Equal signature and isometric discriminant forms."""
    if signature(l1) != signature(l2):
        return False
    return is_isometric(discriminant_form(l1), discriminant_form(l2)) is not None


def exists_lattice(s: FiniteQuadraticSpace, sig: tuple[int, int]) -> str:
    """Existence of an even lattice with the given discriminant form and
    signature: returns "yes", "no", or "unknown".

    The mod-8 signature relation and rank(A) <= n are necessary; together
    with strict inequality they are sufficient.  Equality needs a finer
    local criterion that is out of scope, hence "unknown".
    """
    pos, neg = sig
    if pos < 0 or neg < 0:
        raise ValidationError("signature counts must be nonnegative")
    total = pos + neg
    if total < s.rank:
        return "no"
    if signature_mod8(s) != (pos - neg) % 8:
        return "no"
    if total > s.rank:
        return "yes"
    return "unknown"
