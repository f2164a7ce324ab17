"""Finite groups as Cayley tables over element indices 0..n-1.

Conventions used throughout the package: elements of a group of order n are
the integers 0..n-1 and the identity is always index 0.  Tables are read as
table[a][b] = a*b.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from functools import cached_property, reduce
from typing import Iterable, Sequence

from .perms import Perm, PermGroup, compose, identity_perm, is_permutation


class CayleyTableError(ValueError):
    """A table fails one of the group axioms."""


@dataclass(frozen=True)
class FiniteGroup:
    table: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    label: str = field(default="", compare=False)

    @classmethod
    def from_table(cls, rows: Sequence[Sequence[int]], label: str = "") -> "FiniteGroup":
        """Validate a Cayley table (identity 0, closure, associativity, inverses)."""
        n = len(rows)
        if n == 0:
            raise CayleyTableError("empty table")
        table = tuple(tuple(row) for row in rows)
        for a, row in enumerate(table):
            if len(row) != n:
                raise CayleyTableError(f"row {a} has length {len(row)}, expected {n}")
            for b, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise CayleyTableError(f"entry table[{a}][{b}] = {v!r} out of range 0..{n - 1}")
        for a in range(n):
            if table[0][a] != a or table[a][0] != a:
                raise CayleyTableError(f"index 0 is not an identity at element {a}")
        inv = [-1] * n
        for a in range(n):
            for b in range(n):
                if table[a][b] == 0:
                    inv[a] = b
                    break
            if inv[a] == -1 or table[inv[a]][a] != 0:
                raise CayleyTableError(f"element {a} has no two-sided inverse")
        for a in range(n):
            ra = table[a]
            for b in range(n):
                rab = table[ra[b]]
                rb = table[b]
                for c in range(n):
                    if rab[c] != ra[rb[c]]:
                        raise CayleyTableError(f"not associative at ({a}, {b}, {c})")
        return cls(table=table, inv=tuple(inv), label=label)

    @classmethod
    def unchecked(cls, rows: Sequence[Sequence[int]], label: str = "") -> "FiniteGroup":
        """Skip axiom checks; only for tables a content digest already vouches for."""
        table = tuple(tuple(row) for row in rows)
        return cls(table=table, inv=tuple(row.index(0) for row in table), label=label)

    @property
    def order(self) -> int:
        return len(self.table)

    def elements(self) -> range:
        return range(len(self.table))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv_of(self, a: int) -> int:
        return self.inv[a]

    def conjugate(self, a: int, b: int) -> int:
        """a * b * a^-1."""
        return self.table[self.table[a][b]][self.inv[a]]

    def element_order(self, a: int) -> int:
        k = 1
        x = a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        return tuple(self.element_order(a) for a in self.elements())

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        n = self.order
        return all(t[a][b] == t[b][a] for a in range(n) for b in range(a + 1, n))

    @cached_property
    def is_cyclic(self) -> bool:
        return self.order in self.element_orders

    @cached_property
    def center(self) -> tuple[int, ...]:
        t = self.table
        n = self.order
        return tuple(a for a in range(n) if all(t[a][b] == t[b][a] for b in range(n)))

    def opposite(self) -> "FiniteGroup":
        """Same elements with reversed multiplication (inverses are unchanged)."""
        n = self.order
        rows = tuple(tuple(self.table[b][a] for b in range(n)) for a in range(n))
        return FiniteGroup(table=rows, inv=self.inv, label=f"{self.label}^op")


def relabel(g: FiniteGroup, label: str) -> FiniteGroup:
    return replace(g, label=label)


def transport(g: FiniteGroup, bij: Sequence[int], label: str = "") -> FiniteGroup:
    """Carry the group structure along a bijection with bij[0] == 0."""
    n = g.order
    if len(bij) != n or not is_permutation(bij):
        raise ValueError("transport map must be a permutation of the element indices")
    if bij[0] != 0:
        raise ValueError("transport map must fix the identity index 0")
    rows = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            rows[bij[a]][bij[b]] = bij[g.table[a][b]]
    return FiniteGroup.from_table(rows, label=label or f"{g.label}~")


# ---------------------------------------------------------------------------
# Constructors
# ---------------------------------------------------------------------------

def make_cyclic(n: int) -> FiniteGroup:
    """Cyclic group of order n under addition mod n."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    rows = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    inv = tuple((-a) % n for a in range(n))
    return FiniteGroup(table=rows, inv=inv, label=f"C{n}")


def make_abelian(factors: Sequence[int]) -> FiniteGroup:
    """Direct product of cyclic groups, encoded in mixed radix (first factor most significant)."""
    if not factors:
        raise ValueError("at least one factor required")
    g = make_cyclic(factors[0])
    for f in factors[1:]:
        g = direct_product(g, make_cyclic(f))
    return g


def direct_product(a: FiniteGroup, b: FiniteGroup, label: str = "") -> FiniteGroup:
    """Pairs (x, y) encoded as x * b.order + y."""
    na, nb = a.order, b.order
    n = na * nb
    rows = [[0] * n for _ in range(n)]
    for x1 in range(na):
        for y1 in range(nb):
            e1 = x1 * nb + y1
            row = rows[e1]
            for x2 in range(na):
                ax = a.table[x1][x2]
                for y2 in range(nb):
                    row[x2 * nb + y2] = ax * nb + b.table[y1][y2]
    inv = tuple(a.inv[e // nb] * nb + b.inv[e % nb] for e in range(n))
    return FiniteGroup(table=tuple(tuple(r) for r in rows), inv=inv,
                       label=label or f"{a.label}x{b.label}")


def make_dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order n (so D8 is the symmetries of a square).

    Degenerate low ends: D2 is C2 and D4 is C2xC2.
    """
    if n < 2 or n % 2 != 0:
        raise ValueError(f"dihedral order must be even and >= 2, got {n}")
    if n == 2:
        return make_cyclic(2)
    if n == 4:
        return make_abelian([2, 2])
    m = n // 2
    # element r^i s^j encoded as j*m + i
    rows = [[0] * n for _ in range(n)]
    for i in range(m):
        for j in range(2):
            e1 = j * m + i
            for k in range(m):
                for l in range(2):
                    i2 = (i + (k if j == 0 else -k)) % m
                    rows[e1][l * m + k] = ((j + l) % 2) * m + i2
    return FiniteGroup.from_table(rows, label=f"D{n}")


def make_dicyclic(m: int) -> FiniteGroup:
    """Dicyclic group of order 4m: <a, b | a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1>."""
    if m < 2:
        raise ValueError(f"dicyclic parameter must be >= 2, got {m}")
    n = 4 * m
    # element a^i b^j encoded as j*2m + i
    rows = [[0] * n for _ in range(n)]
    for i in range(2 * m):
        for j in range(2):
            e1 = j * 2 * m + i
            for k in range(2 * m):
                for l in range(2):
                    i2 = (i + (k if j == 0 else -k) + m * ((j + l) // 2)) % (2 * m)
                    rows[e1][l * 2 * m + k] = ((j + l) % 2) * 2 * m + i2
    return FiniteGroup.from_table(rows, label=f"Dic{m}")


def make_quaternion8() -> FiniteGroup:
    """Quaternion group: s^i t^j with i in 0..3, j in 0..1, encoded as j*4 + i."""
    return relabel(make_dicyclic(2), "Q8")


def semidirect_product(n_grp: FiniteGroup, h_grp: FiniteGroup,
                       action: Sequence[Sequence[int]], label: str = "") -> FiniteGroup:
    """N x| H for a homomorphism H -> Aut(N) given as one permutation per H element.

    Pairs (x, y) are encoded as x * h_grp.order + y and multiply as
    (x1, y1)(x2, y2) = (x1 * action[y1](x2), y1 * y2).
    """
    nn, nh = n_grp.order, h_grp.order
    if len(action) != nh:
        raise ValueError(f"action must assign one map per H element, got {len(action)} for order {nh}")
    maps = [tuple(a) for a in action]
    for y, m in enumerate(maps):
        if len(m) != nn or not is_permutation(m):
            raise ValueError(f"action[{y}] is not a permutation of 0..{nn - 1}")
        for a in range(nn):
            for b in range(nn):
                if m[n_grp.table[a][b]] != n_grp.table[m[a]][m[b]]:
                    raise ValueError(f"action[{y}] is not an automorphism of N")
    for y1 in range(nh):
        for y2 in range(nh):
            if maps[h_grp.table[y1][y2]] != compose(maps[y1], maps[y2]):
                raise ValueError(f"action is not a homomorphism at H pair ({y1}, {y2})")
    n = nn * nh
    rows = [[0] * n for _ in range(n)]
    for x1 in range(nn):
        for y1 in range(nh):
            row = rows[x1 * nh + y1]
            act = maps[y1]
            for x2 in range(nn):
                nx = n_grp.table[x1][act[x2]]
                for y2 in range(nh):
                    row[x2 * nh + y2] = nx * nh + h_grp.table[y1][y2]
    return FiniteGroup.from_table(rows, label=label or f"{n_grp.label}x|{h_grp.label}")


def make_alternating4() -> FiniteGroup:
    """A4 as (C2xC2) x| C3, the 3-cycle permuting the three involutions."""
    v4 = make_abelian([2, 2])
    alpha = (0, 2, 3, 1)
    alpha2 = compose(alpha, alpha)
    return relabel(semidirect_product(v4, make_cyclic(3), [identity_perm(4), alpha, alpha2]), "A4")


# ---------------------------------------------------------------------------
# Subgroups
# ---------------------------------------------------------------------------

def closure_of(g: FiniteGroup, seed: Iterable[int]) -> tuple[int, ...]:
    """Subgroup generated by the seed elements, as a sorted index tuple."""
    members = {0}
    members.update(seed)
    frontier = list(members)
    t = g.table
    while frontier:
        nxt = []
        for x in frontier:
            for y in list(members):
                for p in (t[x][y], t[y][x]):
                    if p not in members:
                        members.add(p)
                        nxt.append(p)
        frontier = nxt
    return tuple(sorted(members))


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    @classmethod
    def from_members(cls, parent: FiniteGroup, members: Iterable[int]) -> "Subgroup":
        ms = tuple(sorted(set(members)))
        if not ms or ms[0] != 0:
            raise ValueError("a subgroup must contain the identity 0")
        mset = set(ms)
        for a in ms:
            for b in ms:
                if parent.table[a][b] not in mset:
                    raise ValueError(f"set is not closed: {a}*{b} = {parent.table[a][b]} is outside")
        return cls(parent=parent, members=ms)

    @property
    def order(self) -> int:
        return len(self.members)


def subgroups(g: FiniteGroup) -> list[Subgroup]:
    """All subgroups, found by closure layering: extend each known subgroup by one element.

    Complete because any subgroup is reached from the trivial one by repeatedly
    adjoining a missing element and closing.
    """
    trivial = (0,)
    found = {trivial}
    frontier = [trivial]
    while frontier:
        nxt = []
        for base in frontier:
            bset = set(base)
            for a in g.elements():
                if a in bset:
                    continue
                closed = closure_of(g, base + (a,))
                if closed not in found:
                    found.add(closed)
                    nxt.append(closed)
        frontier = nxt
    ordered = sorted(found, key=lambda m: (len(m), m))
    return [Subgroup(parent=g, members=m) for m in ordered]


def is_normal(g: FiniteGroup, s: Subgroup) -> bool:
    mset = set(s.members)
    return all(g.conjugate(a, b) in mset for a in g.elements() for b in s.members)


# ---------------------------------------------------------------------------
# Regular representations
# ---------------------------------------------------------------------------

def left_regular(g: FiniteGroup) -> PermGroup:
    """lambda_a : x -> a*x for every a."""
    return PermGroup(degree=g.order, generators=tuple(g.table[a] for a in g.elements()))


def right_regular(g: FiniteGroup) -> PermGroup:
    """rho_a : x -> x*a^-1 for every a (a homomorphism, commuting with left_regular)."""
    n = g.order
    gens = tuple(tuple(g.table[x][g.inv[a]] for x in range(n)) for a in range(n))
    return PermGroup(degree=n, generators=gens)


def is_regular(pg: PermGroup, sub: Iterable[Perm]) -> bool:
    """Whether `sub` is a regular subgroup of pg: |sub| = degree, only the identity fixes 0.

    The candidate set must be composition-closed and contained in pg; anything
    else is rejected rather than answered.
    """
    perms = {tuple(p) for p in sub}
    if not perms <= pg.elements:
        raise ValueError("candidate set is not contained in the group")
    for p in perms:
        for q in perms:
            if compose(p, q) not in perms:
                raise ValueError("candidate set is not closed under composition")
    if len(perms) != pg.degree:
        return False
    ident = identity_perm(pg.degree)
    return all(p[0] != 0 for p in perms if p != ident)
