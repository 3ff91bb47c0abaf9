"""Finite quadratic spaces (A, q) with exact rational phase values.

A space carries a finite abelian group in invariant-factor form, the values
of q on generators (mod 2) and the full bilinear matrix b on generator pairs
(mod 1).  build_space validates consistency, the polarization identity and
nondegeneracy, re-presenting arbitrary generator data into canonical form
first when needed.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from ..errors import ConsistencyError, DegenerateFormError, ValidationError
from ..exactkernel import PhaseMod1, PhaseMod2, as_fraction, smith_normal_form
from .present import present_subquotient, raw_eval_b, raw_eval_q


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Invariant factors d_1 | d_2 | ... | d_n, each at least 2."""

    invariant_factors: tuple[int, ...]

    def __post_init__(self):
        d = self.invariant_factors
        if any(not isinstance(x, int) or x < 2 for x in d):
            raise ValidationError("invariant factors must be integers >= 2")
        if any(d[i + 1] % d[i] != 0 for i in range(len(d) - 1)):
            raise ValidationError(f"invariant factors {d} violate the divisibility chain")

    @property
    def rank(self) -> int:
        return len(self.invariant_factors)

    @property
    def order(self) -> int:
        return math.prod(self.invariant_factors)

    def reduce(self, coords: Sequence[int]) -> tuple[int, ...]:
        if len(coords) != self.rank:
            raise ValidationError(f"expected {self.rank} coordinates, got {len(coords)}")
        return tuple(int(c) % d for c, d in zip(coords, self.invariant_factors))

    def add(self, x: Sequence[int], y: Sequence[int]) -> tuple[int, ...]:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.invariant_factors))

    def neg(self, x: Sequence[int]) -> tuple[int, ...]:
        return tuple((-a) % d for a, d in zip(x, self.invariant_factors))

    def element_order(self, x: Sequence[int]) -> int:
        out = 1
        for a, d in zip(x, self.invariant_factors):
            out = math.lcm(out, d // math.gcd(d, a))
        return out

    def elements(self) -> Iterator[tuple[int, ...]]:
        return itertools.product(*(range(d) for d in self.invariant_factors))


@dataclass(frozen=True)
class FiniteQuadraticSpace:
    group: FiniteAbelianGroup
    q_gen: tuple[PhaseMod2, ...]
    b_matrix: tuple[tuple[PhaseMod1, ...], ...]

    @property
    def rank(self) -> int:
        return self.group.rank

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def orders(self) -> tuple[int, ...]:
        return self.group.invariant_factors

    def _raw(self):
        q = tuple(p.value for p in self.q_gen)
        b = tuple(tuple(p.value for p in row) for row in self.b_matrix)
        return self.orders, q, b

    def eval_q(self, x: Sequence[int]) -> PhaseMod2:
        orders, q, b = self._raw()
        return PhaseMod2(raw_eval_q(orders, q, b, self.group.reduce(x)))

    def eval_b(self, x: Sequence[int], y: Sequence[int]) -> PhaseMod1:
        orders, _, b = self._raw()
        return PhaseMod1(raw_eval_b(orders, b, self.group.reduce(x), self.group.reduce(y)))

    def elements(self) -> Iterator[tuple[int, ...]]:
        return self.group.elements()

    def generators(self) -> tuple[tuple[int, ...], ...]:
        n = self.rank
        return tuple(tuple(1 if j == i else 0 for j in range(n)) for i in range(n))

    def q_values(self) -> dict[tuple[int, ...], PhaseMod2]:
        return {x: self.eval_q(x) for x in self.elements()}

    def __repr__(self) -> str:
        qs = ", ".join(str(p.value) for p in self.q_gen)
        return f"FiniteQuadraticSpace(orders={list(self.orders)}, q=[{qs}])"


def _consistency_checks(orders, q, b) -> None:
    n = len(orders)
    for i in range(n):
        if (q[i] * orders[i] * orders[i]) % 2 != 0:
            raise ConsistencyError(
                f"q[{i}] = {q[i]} is not defined on a generator of order {orders[i]}")
    for i in range(n):
        for j in range(n):
            if b[i][j] != b[j][i]:
                raise ConsistencyError(f"b is not symmetric at generator pair ({i}, {j})")
            if (b[i][j] * orders[i]) % 1 != 0:
                raise ConsistencyError(
                    f"b[{i}][{j}] = {b[i][j]} is not defined for generator order {orders[i]}")
    # Polarization on all generator pairs: b = (q(x+y) - q(x) - q(y))/2.
    basis = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            xy = [basis[i][k] + basis[j][k] for k in range(n)]
            lhs = raw_eval_b(orders, b, basis[i], basis[j])
            rhs = ((raw_eval_q(orders, q, b, xy) - raw_eval_q(orders, q, b, basis[i])
                    - raw_eval_q(orders, q, b, basis[j])) % 2) / 2
            if lhs != rhs % 1:
                raise ConsistencyError(
                    f"polarization fails at generator pair ({i}, {j}): "
                    f"b = {lhs} but (q(x+y) - q(x) - q(y))/2 = {rhs % 1}")


def _nondegenerate(orders, b) -> tuple[int, ...] | None:
    """None if nondegenerate, else a witness annihilated by b."""
    n = len(orders)
    if n == 0:
        return None
    total = math.prod(orders)
    ell = 1
    for row in b:
        for x in row:
            ell = math.lcm(ell, x.denominator)
    m = tuple(tuple(int(x * ell) for x in row) for row in b)
    diag = smith_normal_form(m).diagonal
    image = 1
    for k in range(n):
        dk = diag[k] if k < len(diag) else 0
        image *= ell // math.gcd(ell, dk)
    if image == total:
        return None
    # Recover a witness: x with x . (b-matrix) = 0 mod 1, x nonzero mod orders.
    from ..exactkernel import integer_kernel
    stacked = tuple(
        tuple([m[i][j] for i in range(n)] + [ell if t == j else 0 for t in range(n)])
        for j in range(n))
    kernel = integer_kernel(stacked)
    for vec in kernel:
        x = tuple(vec[i] % orders[i] for i in range(n))
        if any(x):
            return x
    raise AssertionError("degenerate form without witness")  # pragma: no cover


def _canonicalize(orders, q, b):
    """Re-present raw data with invariant factors in a divisibility chain."""
    keep = [i for i, d in enumerate(orders) if d > 1]
    orders2 = [orders[i] for i in keep]
    q2 = [q[i] for i in keep]
    b2 = [[b[i][j] for j in keep] for i in keep]
    order_perm = sorted(range(len(orders2)), key=lambda i: orders2[i])
    sorted_orders = [orders2[i] for i in order_perm]
    if all(sorted_orders[i + 1] % sorted_orders[i] == 0
           for i in range(len(sorted_orders) - 1)):
        return (tuple(sorted_orders),
                tuple(q2[i] for i in order_perm),
                tuple(tuple(b2[i][j] for j in order_perm) for i in order_perm))
    n = len(orders2)
    gens = [[1 if j == i else 0 for j in range(n)] for i in range(n)]
    (new_orders, new_q, new_b), _ = present_subquotient(orders2, q2, b2, gens)
    return new_orders, new_q, new_b


def build_space(group: FiniteAbelianGroup | Sequence[int],
                q_gen: Iterable[Fraction | int | str],
                b_matrix: Sequence[Sequence] | None = None) -> FiniteQuadraticSpace:
    """Validated space; generator data is canonicalized if the orders do not
    already form a divisibility chain.

    When b_matrix is omitted the generators are taken orthogonal, with the
    diagonal forced by polarization (b_ii = q_i mod 1).
    """
    if isinstance(group, FiniteAbelianGroup):
        orders = list(group.invariant_factors)
    else:
        orders = [int(d) for d in group]
        if any(d < 1 for d in orders):
            raise ValidationError("generator orders must be positive")
    q = [as_fraction(x) % 2 for x in q_gen]
    if len(q) != len(orders):
        raise ValidationError(
            f"got {len(q)} q-values for {len(orders)} generators")
    if b_matrix is None:
        b = [[q[i] % 1 if i == j else Fraction(0) for j in range(len(orders))]
             for i in range(len(orders))]
    else:
        b = [[as_fraction(x) % 1 for x in row] for row in b_matrix]
        if len(b) != len(orders) or any(len(row) != len(orders) for row in b):
            raise ValidationError("b matrix shape does not match generator count")
    _consistency_checks(orders, q, b)
    orders_c, q_c, b_c = _canonicalize(orders, q, b)
    witness = _nondegenerate(orders_c, b_c)
    if witness is not None:
        raise DegenerateFormError(
            f"form is degenerate: {witness} pairs to zero with every generator")
    return FiniteQuadraticSpace(
        group=FiniteAbelianGroup(tuple(orders_c)),
        q_gen=tuple(PhaseMod2(x) for x in q_c),
        b_matrix=tuple(tuple(PhaseMod1(x) for x in row) for row in b_c))


def trivial_space() -> FiniteQuadraticSpace:
    return FiniteQuadraticSpace(FiniteAbelianGroup(()), (), ())


def direct_sum(s1: FiniteQuadraticSpace, s2: FiniteQuadraticSpace) -> FiniteQuadraticSpace:
    orders = list(s1.orders) + list(s2.orders)
    q = [p.value for p in s1.q_gen] + [p.value for p in s2.q_gen]
    n1, n2 = s1.rank, s2.rank
    b = [[Fraction(0)] * (n1 + n2) for _ in range(n1 + n2)]
    for i in range(n1):
        for j in range(n1):
            b[i][j] = s1.b_matrix[i][j].value
    for i in range(n2):
        for j in range(n2):
            b[n1 + i][n1 + j] = s2.b_matrix[i][j].value
    return build_space(orders, q, b)


def space_to_json(s: FiniteQuadraticSpace) -> dict:
    return {
        "orders": list(s.orders),
        "q": [str(p.value) for p in s.q_gen],
        "b": [[str(p.value) for p in row] for row in s.b_matrix],
    }


def space_from_json(doc: dict) -> FiniteQuadraticSpace:
    if not isinstance(doc, dict) or "orders" not in doc or "q" not in doc:
        raise ValidationError("space JSON needs 'orders' and 'q' fields")
    return build_space(doc["orders"], doc["q"], doc.get("b"))
