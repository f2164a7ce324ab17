"""Skew braces: two group tables on the same indices tied by the compatibility relation.

A pair (dot, circ) of groups on 0..n-1 with shared identity 0 is a skew brace
when a o (b . c) = (a o b) . a^-1 . (a o c) for all a, b, c, where o is circ
and . is dot.  Everything downstream (gamma maps, left ideals) lives here.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable

from .groups import FiniteGroup, Subgroup, subgroups
from .morphisms import minimal_generating_indices, propagate_partial_map, _search_homs
from .perms import Perm, compose


class BraceValidationError(ValueError):
    pass


class BraceRelationError(BraceValidationError):
    """The compatibility relation fails; carries the first violating triple."""

    def __init__(self, a: int, b: int, c: int):
        self.triple = (a, b, c)
        super().__init__(f"compatibility fails at (a, b, c) = ({a}, {b}, {c})")


@dataclass(frozen=True)
class SkewBrace:
    dot: FiniteGroup
    circ: FiniteGroup
    label: str = field(default="", compare=False)

    @property
    def order(self) -> int:
        return self.dot.order

    @property
    def is_trivial(self) -> bool:
        return self.circ.table == self.dot.table

    @property
    def is_almost_trivial(self) -> bool:
        n = self.order
        return all(self.circ.table[a][b] == self.dot.table[b][a]
                   for a in range(n) for b in range(n))


def validate(dot: FiniteGroup, circ: FiniteGroup, label: str = "") -> SkewBrace:
    """Check the compatibility relation over all n^3 triples; report the first failure."""
    n = dot.order
    if circ.order != n:
        raise BraceValidationError(f"order mismatch: dot has {n}, circ has {circ.order}")
    dt = dot.table
    ct = circ.table
    inv = dot.inv
    for a in range(n):
        ca = ct[a]
        ia = inv[a]
        # precompute (a o b) . a^-1 for every b
        left = [dt[ca[b]][ia] for b in range(n)]
        for b in range(n):
            db = dt[b]
            lb = dt[left[b]]
            for c in range(n):
                if ca[db[c]] != lb[ca[c]]:
                    raise BraceRelationError(a, b, c)
    return SkewBrace(dot=dot, circ=circ, label=label or f"({dot.label}, {circ.label})")


def trivial(g: FiniteGroup) -> SkewBrace:
    """circ = dot."""
    return validate(g, g, label=f"trivial({g.label})")


def almost_trivial(g: FiniteGroup) -> SkewBrace:
    """circ = opposite of dot; equals trivial(g) exactly when g is abelian."""
    return validate(g, g.opposite(), label=f"almost-trivial({g.label})")


@dataclass(frozen=True)
class GammaFunction:
    brace: SkewBrace
    maps: tuple[Perm, ...]

    def apply(self, a: int, x: int) -> int:
        return self.maps[a][x]


@lru_cache(maxsize=None)
def gamma(b: SkewBrace) -> GammaFunction:
    """gamma_a(x) = a^-1 . (a o x), materialized as one permutation per element.

    Checks that every map is an automorphism of dot and that a -> gamma_a is a
    homomorphism from circ; a failure means the brace object is corrupt, which
    is a hard fault rather than a caller error.
    """
    n = b.order
    dt = b.dot.table
    ct = b.circ.table
    inv = b.dot.inv
    maps = tuple(tuple(dt[inv[a]][ct[a][x]] for x in range(n)) for a in range(n))
    for a, m in enumerate(maps):
        if sorted(m) != list(range(n)):
            raise RuntimeError(f"gamma_{a} is not a bijection; brace is corrupt")
        for x in range(n):
            mx = m[x]
            for y in range(n):
                if m[dt[x][y]] != dt[mx][m[y]]:
                    raise RuntimeError(f"gamma_{a} is not an automorphism at ({x}, {y})")
    for a in range(n):
        ma = maps[a]
        for c in range(n):
            if maps[ct[a][c]] != compose(ma, maps[c]):
                raise RuntimeError(f"gamma is not a homomorphism at ({a}, {c})")
    return GammaFunction(brace=b, maps=maps)


@dataclass(frozen=True)
class LeftIdealFlag:
    members: tuple[int, ...]
    is_left_ideal: bool
    failing_pair: tuple[int, int] | None = None
    failure_kind: str | None = None  # "dot-closure" | "gamma"


def left_ideal_status(b: SkewBrace, members: Iterable[int]) -> LeftIdealFlag:
    """Decide left-ideal-ness for an arbitrary candidate set (usually a circ-subgroup).

    Dot-closure is checked first: a set that is not a dot-subgroup is by
    definition not a left ideal, and the first violating product is reported.
    Otherwise the gamma-stability scan runs over all of the brace.
    """
    ms = tuple(sorted(set(members)))
    if not ms or ms[0] != 0:
        raise ValueError("candidate set must contain the identity 0")
    mset = set(ms)
    dt = b.dot.table
    for a in ms:
        row = dt[a]
        for x in ms:
            if row[x] not in mset:
                return LeftIdealFlag(members=ms, is_left_ideal=False,
                                     failing_pair=(a, x), failure_kind="dot-closure")
    maps = gamma(b).maps
    for a in range(b.order):
        m = maps[a]
        for x in ms:
            if m[x] not in mset:
                return LeftIdealFlag(members=ms, is_left_ideal=False,
                                     failing_pair=(a, x), failure_kind="gamma")
    ct = b.circ.table
    cinv = b.circ.inv
    for a in ms:
        if cinv[a] not in mset or any(ct[a][x] not in mset for x in ms):
            raise RuntimeError("left ideal is not circ-closed; brace is corrupt")
    return LeftIdealFlag(members=ms, is_left_ideal=True)


def is_left_ideal(b: SkewBrace, s: Subgroup) -> LeftIdealFlag:
    """Left-ideal flag for a subgroup of the additive (dot) group."""
    if s.parent != b.dot:
        raise ValueError("subgroup does not belong to the additive group of this brace")
    flag = left_ideal_status(b, s.members)
    if flag.failure_kind == "dot-closure":
        raise RuntimeError("dot-subgroup failed dot-closure; inputs are corrupt")
    return flag


def left_ideals(b: SkewBrace) -> list[Subgroup]:
    """Dot-subgroups stable under every gamma map, in canonical (size, members) order."""
    return [s for s in subgroups(b.dot) if is_left_ideal(b, s).is_left_ideal]


def brace_isomorphic(x: SkewBrace, y: SkewBrace) -> tuple[int, ...] | None:
    """A bijection fixing 0 preserving both tables, or None.

    Backtracks over images of dot-generators; candidates must match on the
    (dot order, circ order) profile, and the circ table is verified on every
    completed assignment.
    """
    n = x.order
    if y.order != n:
        return None
    prof_x = [(x.dot.element_orders[a], x.circ.element_orders[a]) for a in range(n)]
    prof_y = [(y.dot.element_orders[a], y.circ.element_orders[a]) for a in range(n)]
    if sorted(prof_x) != sorted(prof_y):
        return None
    gens = minimal_generating_indices(x.dot)
    candidates = [[b for b in range(n) if prof_y[b] == prof_x[g]] for g in gens]
    xc = x.circ.table
    yc = y.circ.table

    def circ_ok(part: list[int]) -> bool:
        return all(part[xc[a][b]] == yc[part[a]][part[b]]
                   for a in range(n) for b in range(n))

    maps = _search_homs(x.dot.table, y.dot.table, gens, candidates, circ_ok, first_only=True)
    return maps[0] if maps else None
