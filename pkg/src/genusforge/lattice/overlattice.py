"""Even overlattices via isotropic subgroups of the discriminant form.

Each isotropic subgroup C of L*/L determines the even overlattice
K = L + (lifts of C); the correspondence is a bijection.  The basis of K
is recovered by saturating the rows of L together with the lifted
generators, all scaled integral by the common denominator.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm

from ..errors import InternalError
from ..exactkernel import row_lattice_basis
from ..quadspace import Subgroup, is_isometric, isotropic_subgroups, quotient_space
from .discform import _disc_with_lifts, discriminant_form
from .lattice import EvenLattice, build_lattice


def _lift_vector(lifts, coords) -> tuple[Fraction, ...]:
    n = len(lifts[0]) if lifts else 0
    out = [Fraction(0)] * n
    for a, vec in zip(coords, lifts):
        for r in range(n):
            out[r] += a * vec[r]
    return tuple(out)


def overlattices(l: EvenLattice, cap: int = 4096) -> list[tuple[Subgroup, EvenLattice]]:
    """(C, K) for every isotropic subgroup C, with [K : L] = |C|.

    Every returned Gram matrix is re-verified: integral with even diagonal,
    determinant det(L)/|C|^2, and discriminant form isometric to the
    quotient of L's discriminant form by C.
    """
    disc, lifts = _disc_with_lifts(l)
    n = l.rank
    gram = l.gram
    det = l.det
    out = []
    for c in isotropic_subgroups(disc, cap=cap):
        gen_lifts = [_lift_vector(lifts, g) for g in c.generators]
        t = lcm(1, *(x.denominator for vec in gen_lifts for x in vec))
        rows = [[t if r == s else 0 for s in range(n)] for r in range(n)]
        rows.extend([int(x * t) for x in vec] for vec in gen_lifts)
        basis = row_lattice_basis(rows)
        if len(basis) != n:
            raise InternalError("overlattice basis must have full rank")
        new_gram = [[0] * n for _ in range(n)]
        for i in range(n):
            bi_g = [sum(basis[i][r] * gram[r][s] for r in range(n)) for s in range(n)]
            for j in range(n):
                num = sum(bi_g[s] * basis[j][s] for s in range(n))
                if num % (t * t):
                    raise InternalError("overlattice Gram entry not integral")
                new_gram[i][j] = num // (t * t)
        k = build_lattice(new_gram,
                          f"{l.name}^(+{c.order})" if l.name and c.order > 1 else l.name)
        if k.det * c.order ** 2 != det:
            raise InternalError("overlattice determinant does not match index")
        if is_isometric(discriminant_form(k), quotient_space(disc, c)) is None:
            raise InternalError("overlattice discriminant form does not match "
                                "the quotient form")
        out.append((c, k))
    return out
