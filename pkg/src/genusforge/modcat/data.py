"""Modular data: labels, s-tilde matrix, twists, and weights.

Everything is stored in the rescaled convention s_tilde = sqrt(D) * S,
which keeps all entries inside cyclotomic fields.  The discriminant
D = sum of dim^2 must come out a positive rational integer; twists are
rational phases (so automatically roots of unity) and must agree with
the conformal weights mod 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Sequence

from ..errors import ValidationError
from ..exactkernel import CyclotomicNumber, PhaseMod1, as_fraction
from ..quadspace import FiniteQuadraticSpace


def _as_cyclo(x) -> CyclotomicNumber:
    if isinstance(x, CyclotomicNumber):
        return x
    return CyclotomicNumber.from_rational(as_fraction(x))


@dataclass(frozen=True)
class ModularData:
    """Labels 0..n-1 with 0 the unit; dual is charge conjugation."""

    dual: tuple[int, ...]
    s_tilde: tuple[tuple[CyclotomicNumber, ...], ...]
    twists: tuple[PhaseMod1, ...]
    weights: tuple[PhaseMod1, ...]

    def __post_init__(self) -> None:
        n = len(self.dual)
        if n == 0:
            raise ValidationError("modular data needs at least the unit label")
        if sorted(self.dual) != list(range(n)):
            raise ValidationError("dual must be a permutation of the labels")
        if self.dual[0] != 0:
            raise ValidationError("the unit label must be self-dual")
        if any(self.dual[self.dual[i]] != i for i in range(n)):
            raise ValidationError("dual must be an involution")
        if len(self.s_tilde) != n or any(len(row) != n for row in self.s_tilde):
            raise ValidationError("s_tilde must be square over the labels")
        if len(self.twists) != n or len(self.weights) != n:
            raise ValidationError("twists and weights must match the labels")
        for i in range(n):
            for j in range(i + 1, n):
                if self.s_tilde[i][j] != self.s_tilde[j][i]:
                    raise ValidationError(f"s_tilde not symmetric at ({i},{j})")
        for i, d in enumerate(self.s_tilde[0]):
            if d.is_zero():
                raise ValidationError(f"dimension of label {i} vanishes")
        for i in range(n):
            if self.twists[i] != self.weights[i]:
                raise ValidationError(
                    f"twist and weight of label {i} differ mod 1")
        d = CyclotomicNumber.zero()
        for x in self.s_tilde[0]:
            d = d + x * x
        val = d.is_integer()
        if val is None or val <= 0:
            raise ValidationError("sum of squared dimensions must be a "
                                  "positive integer")
        object.__setattr__(self, "_disc", val)

    @property
    def n(self) -> int:
        return len(self.dual)

    @property
    def labels(self) -> range:
        return range(self.n)

    @property
    def dims(self) -> tuple[CyclotomicNumber, ...]:
        return self.s_tilde[0]

    @property
    def discriminant(self) -> int:
        return self._disc  # type: ignore[attr-defined]

    def __repr__(self) -> str:
        return f"ModularData(n={self.n}, D={self.discriminant})"


def build_modular_data(dual: Sequence[int],
                       s_tilde: Sequence[Sequence],
                       twists: Sequence,
                       weights: Sequence | None = None) -> ModularData:
    """Normalize raw entries (rationals allowed) into ModularData."""
    tw = tuple(t if isinstance(t, PhaseMod1) else PhaseMod1(as_fraction(t))
               for t in twists)
    if weights is None:
        wt = tw
    else:
        wt = tuple(w if isinstance(w, PhaseMod1) else PhaseMod1(as_fraction(w))
                   for w in weights)
    mat = tuple(tuple(_as_cyclo(x) for x in row) for row in s_tilde)
    return ModularData(tuple(dual), mat, tw, wt)


def from_quadratic_space(s: FiniteQuadraticSpace) -> ModularData:
    """The pointed modular data of (A, q): labels are the elements of A,
    s_tilde[x][y] = exp(-2 pi i b(x,y)), twist of x is q(x)/2 mod 1."""
    elems = list(s.elements())
    index = {x: i for i, x in enumerate(elems)}
    dual = tuple(index[s.group.neg(x)] for x in elems)
    phases = [[(-s.eval_b(x, y).value) % 1 for y in elems] for x in elems]
    twists = tuple(s.eval_q(x).half() for x in elems)
    memo: dict[Fraction, CyclotomicNumber] = {}

    def root(p: Fraction) -> CyclotomicNumber:
        z = memo.get(p)
        if z is None:
            z = CyclotomicNumber.from_exponents(p.denominator, {p.numerator: 1})
            memo[p] = z
        return z

    m = ModularData(dual, tuple(tuple(root(p) for p in row) for row in phases),
                    twists, twists)
    order = 1
    for row in phases:
        for p in row:
            order = lcm(order, p.denominator)
    for t in twists:
        order = lcm(order, t.value.denominator)
    if order <= 512:
        # the exponent form zeta_order^e of every entry is already known
        # here; stash it so downstream fast paths skip the rescan
        exps = tuple(tuple(int(p * order) for p in row) for row in phases)
        tau = tuple(int(t.value * order) % order for t in twists)
        object.__setattr__(m, "_root_exps", (order, exps, tau))
    return m


def product(m1: ModularData, m2: ModularData) -> ModularData:
    """Product category data: labels are pairs, s_tilde the tensor product,
    twists add."""
    n2 = m2.n
    dual = tuple(m1.dual[i] * n2 + m2.dual[j]
                 for i in m1.labels for j in m2.labels)
    rows = []
    for i1 in m1.labels:
        for i2 in m2.labels:
            rows.append(tuple(m1.s_tilde[i1][j1] * m2.s_tilde[i2][j2]
                              for j1 in m1.labels for j2 in m2.labels))
    twists = tuple(m1.twists[i] + m2.twists[j]
                   for i in m1.labels for j in m2.labels)
    weights = tuple(m1.weights[i] + m2.weights[j]
                    for i in m1.labels for j in m2.labels)
    return ModularData(dual, tuple(rows), twists, weights)


def ising_data() -> ModularData:
    """The three-object Ising data: weights (0, 1/2, 1/16), dims (1, 1, sqrt 2)."""
    rt2 = CyclotomicNumber.from_exponents(8, {1: 1, 7: 1})
    one = CyclotomicNumber.one()
    s = ((one, one, rt2),
         (one, one, -rt2),
         (rt2, -rt2, CyclotomicNumber.zero()))
    twists = (PhaseMod1(Fraction(0)), PhaseMod1(Fraction(1, 2)),
              PhaseMod1(Fraction(1, 16)))
    return ModularData((0, 1, 2), s, twists, twists)


def _cyclo_to_json(x: CyclotomicNumber):
    q = x.is_rational()
    if q is not None:
        return str(q)
    return {"order": x.order, "coeffs": [str(c) for c in x.coeffs]}


def _cyclo_from_json(doc) -> CyclotomicNumber:
    if isinstance(doc, bool) or isinstance(doc, float):
        raise ValidationError("cyclotomic entries must be exact")
    if isinstance(doc, (int, str)):
        return CyclotomicNumber.from_rational(as_fraction(doc))
    if isinstance(doc, dict) and "order" in doc and "coeffs" in doc:
        order = doc["order"]
        if not isinstance(order, int):
            raise ValidationError("cyclotomic order must be an integer")
        return CyclotomicNumber(order, [as_fraction(c) for c in doc["coeffs"]])
    raise ValidationError(f"cannot parse cyclotomic value {doc!r}")


def modular_data_to_json(m: ModularData) -> dict:
    return {
        "labels": m.n,
        "dual": list(m.dual),
        "s_tilde": [[_cyclo_to_json(x) for x in row] for row in m.s_tilde],
        "twists": [str(t.value) for t in m.twists],
        "weights": [str(w.value) for w in m.weights],
    }


def modular_data_from_json(doc: dict) -> ModularData:
    if not isinstance(doc, dict):
        raise ValidationError("modular data document must be an object")
    for key in ("labels", "dual", "s_tilde", "twists", "weights"):
        if key not in doc:
            raise ValidationError(f"modular data document lacks {key!r}")
    n = doc["labels"]
    dual = doc["dual"]
    if not isinstance(n, int) or not isinstance(dual, list) or len(dual) != n:
        raise ValidationError("'labels' must count the entries of 'dual'")
    mat = [[_cyclo_from_json(x) for x in row] for row in doc["s_tilde"]]
    return build_modular_data(dual, mat, doc["twists"], doc["weights"])
