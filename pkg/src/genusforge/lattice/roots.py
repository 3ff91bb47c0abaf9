"""Root systems of positive definite even lattices.

The norm-2 vectors of an even lattice always form a root system whose
components are simply laced, so classification only has to tell the ADE
shapes apart.  Simple roots are extracted as the positive roots (under a
generic exact linear functional) that are not sums of two positive ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ..errors import InternalError
from .lattice import EvenLattice
from .theta import short_vectors

_EXPECTED_COUNTS = {"A": lambda n: n * (n + 1),
                    "D": lambda n: 2 * n * (n - 1),
                    "E": {6: 72, 7: 126, 8: 240}}


@dataclass(frozen=True)
class RootSystemReport:
    """Irreducible components (type, rank) with the total number of roots."""

    components: tuple[tuple[str, int], ...]
    root_count: int


def _positive_roots(l: EvenLattice, roots):
    """Split the roots into +/- halves by a generic rational functional.

    The ladder (1, 1/p, 1/p^2, ...) vanishes on an integer vector only if
    that vector encodes a polynomial with root 1/p, which can happen for
    at most finitely many primes, so redrawing p always terminates.
    """
    p = 2
    while True:
        f = [Fraction(1, p ** i) for i in range(l.rank)]
        values = {r: sum(fi * ri for fi, ri in zip(f, r)) for r in roots}
        if all(v != 0 for v in values.values()):
            return [r for r in roots if values[r] > 0]
        p = next(q for q in range(p + 1, 10 * p) if all(q % t for t in range(2, q)))


def _classify_component(nodes, adj) -> tuple[str, int]:
    n = len(nodes)
    degrees = {v: len(adj[v]) for v in nodes}
    if any(d > 3 for d in degrees.values()):
        raise InternalError("degree > 3 in a simply laced Dynkin diagram")
    branches = [v for v in nodes if degrees[v] == 3]
    if not branches:
        return ("A", n)
    if len(branches) > 1:
        raise InternalError("two branch nodes in one Dynkin component")
    hub = branches[0]
    arms = []
    for start in adj[hub]:
        length = 1
        prev, cur = hub, start
        while True:
            nxt = [w for w in adj[cur] if w != prev]
            if not nxt:
                break
            if len(nxt) > 1:
                raise InternalError("branch inside a Dynkin arm")
            prev, cur = cur, nxt[0]
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] != 1:
        raise InternalError("Dynkin branch without a length-1 arm")
    if arms[1] == 1:
        return ("D", arms[2] + 3)
    if arms[1] == 2 and arms[2] in (2, 3, 4):
        return ("E", arms[2] + 4)
    raise InternalError(f"arm lengths {arms} are not an ADE shape")


def root_system(l: EvenLattice) -> RootSystemReport:
    roots = short_vectors(l, 2)
    if not roots:
        return RootSystemReport((), 0)
    positive = _positive_roots(l, roots)
    pos_set = set(positive)
    simple = []
    for r in positive:
        if not any(tuple(a - b for a, b in zip(r, q)) in pos_set
                   for q in positive):
            simple.append(r)

    adj = {i: [] for i in range(len(simple))}
    for i in range(len(simple)):
        for j in range(i + 1, len(simple)):
            prod = l.inner(simple[i], simple[j])
            if prod == 0:
                continue
            if prod != -1:
                raise InternalError("simple roots of an even lattice must "
                                    "pair to 0 or -1")
            adj[i].append(j)
            adj[j].append(i)

    components = []
    seen: set[int] = set()
    for start in range(len(simple)):
        if start in seen:
            continue
        comp = [start]
        seen.add(start)
        queue = [start]
        while queue:
            v = queue.pop()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        components.append(_classify_component(comp, adj))

    expected = 0
    for kind, rank in components:
        expected += (_EXPECTED_COUNTS[kind][rank] if kind == "E"
                     else _EXPECTED_COUNTS[kind](rank))
    if expected != len(roots):
        raise InternalError(f"components {components} predict {expected} "
                            f"roots, found {len(roots)}")
    return RootSystemReport(tuple(sorted(components)), len(roots))
