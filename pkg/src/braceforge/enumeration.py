"""Every multiplicative operation compatible with a fixed additive group.

The search walks regular subgroups of the holomorph: each element of the
holomorph is a pair (translation t, automorphism alpha) acting as
x -> t . alpha(x), and a compatible circ table corresponds exactly to a
subgroup containing one element sending 0 to each point.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from itertools import permutations

from .braces import BraceValidationError, SkewBrace, brace_isomorphic, validate
from .census import CENSUS_MAX_ORDER, CensusCapError, census, label_or_unknown
from .groups import FiniteGroup
from .morphisms import automorphism_group
from .perms import compose

ORACLE_MAX_ORDER = 6

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class BraceEnumeration:
    additive: FiniteGroup
    operations: tuple[SkewBrace, ...]
    iso_classes: tuple[tuple[int, ...], ...] | None = None
    by_mult_type: tuple[tuple[str, tuple[int, ...]], ...] | None = None

    @property
    def count(self) -> int:
        return len(self.operations)


def _regular_subgroup_tables(g: FiniteGroup) -> list[Table]:
    n = g.order
    auts = list(automorphism_group(g).sorted_elements)
    na = len(auts)
    gt = g.table
    aindex = {a: i for i, a in enumerate(auts)}
    acomp = [[aindex[compose(auts[i], auts[j])] for j in range(na)] for i in range(na)]
    total = n * na
    tpart = [e // na for e in range(total)]
    apart = [e % na for e in range(total)]
    e_id = aindex[tuple(range(n))]

    def emul(e1: int, e2: int) -> int:
        a1 = apart[e1]
        return gt[tpart[e1]][auts[a1][tpart[e2]]] * na + acomp[a1][apart[e2]]

    def eorder(e: int) -> int:
        k = 1
        x = e
        while x != e_id:
            x = emul(x, e)
            k += 1
        return k

    def eperm(e: int) -> tuple[int, ...]:
        row = gt[tpart[e]]
        al = auts[apart[e]]
        return tuple(row[al[x]] for x in range(n))

    buckets: list[list[int]] = [[] for _ in range(n)]
    for e in range(total):
        t = tpart[e]
        if t == 0:
            continue  # a second point-0 element always collides with the identity
        if n % eorder(e) == 0:
            buckets[t].append(e)
    for t in range(1, n):
        buckets[t].sort(key=eperm)

    results: list[tuple[int, ...]] = []

    def try_extend(lst: list[int], st: set[int], cov: list[int], h: int):
        lst2 = list(lst)
        st2 = set(st)
        cov2 = list(cov)
        p = tpart[h]
        if cov2[p] != -1:
            return None
        lst2.append(h)
        st2.add(h)
        cov2[p] = h
        i = len(lst2) - 1
        while i < len(lst2):
            x = lst2[i]
            i += 1
            for j in range(len(lst2)):
                y = lst2[j]
                for prod in (emul(x, y), emul(y, x)):
                    if prod not in st2:
                        t = tpart[prod]
                        if cov2[t] != -1:
                            return None
                        lst2.append(prod)
                        st2.add(prod)
                        cov2[t] = prod
                        if len(lst2) > n:
                            return None
        if n % len(lst2) != 0:
            return None
        return lst2, st2, cov2

    def search(lst: list[int], st: set[int], cov: list[int]) -> None:
        if len(lst) == n:
            results.append(tuple(cov))
            return
        a = next(p for p in range(n) if cov[p] == -1)
        for h in buckets[a]:
            ext = try_extend(lst, st, cov, h)
            if ext is not None:
                search(*ext)

    cov0 = [-1] * n
    cov0[0] = e_id
    search([e_id], {e_id}, cov0)

    tables = [tuple(eperm(cov[p]) for p in range(n)) for cov in results]
    tables.sort()
    return tables


_ENUM_MEMO: dict[tuple[str, Table], BraceEnumeration] = {}


def enumerate_circ(additive: FiniteGroup) -> BraceEnumeration:
    """All circ tables forming a skew brace with the given additive group.

    Operations come back sorted by circ table, so the order is canonical and
    independent of how the search tree was walked.  Every decoded table is
    re-validated; a failure there is an internal fault, not an input error.
    """
    if additive.order > CENSUS_MAX_ORDER:
        raise CensusCapError(f"enumeration is capped at order {CENSUS_MAX_ORDER}")
    key = (additive.label, additive.table)
    hit = _ENUM_MEMO.get(key)
    if hit is not None:
        return hit
    ops = []
    for i, t in enumerate(_regular_subgroup_tables(additive)):
        circ = FiniteGroup.from_table(t, label=f"{additive.label}-circ{i}")
        try:
            ops.append(validate(additive, circ, label=f"{additive.label}-op{i}"))
        except BraceValidationError as exc:  # pragma: no cover - internal fault
            raise RuntimeError(f"decoded table failed validation: {exc}") from exc
    enum = BraceEnumeration(additive=additive, operations=tuple(ops))
    _ENUM_MEMO[key] = enum
    return enum


def oracle_enumerate_circ(additive: FiniteGroup) -> list[Table]:
    """Independent cross-check: transport every census table of the same order
    through every identity-fixing bijection and keep what validates."""
    n = additive.order
    if n > ORACLE_MAX_ORDER:
        raise CensusCapError(f"oracle enumeration is capped at order {ORACLE_MAX_ORDER}")
    out: set[Table] = set()
    for entry in census(ORACLE_MAX_ORDER):
        if entry.order != n:
            continue
        mt = entry.group.table
        for rest in permutations(range(1, n)):
            f = (0,) + rest
            finv = [0] * n
            for i, v in enumerate(f):
                finv[v] = i
            t = tuple(tuple(f[mt[finv[a]][finv[b]]] for b in range(n)) for a in range(n))
            if t in out:
                continue
            try:
                validate(additive, FiniteGroup.from_table(t))
            except BraceValidationError:
                continue
            out.add(t)
    return sorted(out)


def _transport_table(t: Table, f: tuple[int, ...]) -> Table:
    n = len(t)
    rows = [[0] * n for _ in range(n)]
    for a in range(n):
        fa = f[a]
        for b in range(n):
            rows[fa][f[b]] = f[t[a][b]]
    return tuple(tuple(r) for r in rows)


def reduce_up_to_iso(enum: BraceEnumeration) -> BraceEnumeration:
    """Partition operations into isomorphism classes, two independent ways.

    Method one searches for bijections preserving both tables.  Method two
    takes orbits of the additive automorphism group acting on circ tables by
    transport.  The partitions must agree exactly; a mismatch is a fault.
    """
    ops = enum.operations
    tables = [b.circ.table for b in ops]
    index_of = {t: i for i, t in enumerate(tables)}

    auts = automorphism_group(enum.additive).sorted_elements
    seen = [False] * len(ops)
    orbit_classes: list[tuple[int, ...]] = []
    for i in range(len(ops)):
        if seen[i]:
            continue
        orbit = set()
        for alpha in auts:
            moved = _transport_table(tables[i], alpha)
            j = index_of.get(moved)
            if j is None:  # pragma: no cover - internal fault
                raise RuntimeError("transport of an operation left the enumeration")
            orbit.add(j)
        for j in orbit:
            seen[j] = True
        orbit_classes.append(tuple(sorted(orbit)))
    orbit_classes.sort()

    direct_classes: list[list[int]] = []
    for i, b in enumerate(ops):
        placed = False
        for cls in direct_classes:
            if brace_isomorphic(ops[cls[0]], b) is not None:
                cls.append(i)
                placed = True
                break
        if not placed:
            direct_classes.append([i])
    direct_sorted = sorted(tuple(sorted(c)) for c in direct_classes)

    if direct_sorted != orbit_classes:  # pragma: no cover - internal fault
        raise RuntimeError("isomorphism-class partitions disagree between methods")
    return replace(enum, iso_classes=tuple(orbit_classes))


def with_mult_types(enum: BraceEnumeration) -> BraceEnumeration:
    by_type: dict[str, list[int]] = {}
    for i, b in enumerate(enum.operations):
        by_type.setdefault(label_or_unknown(b.circ), []).append(i)
    pairs = tuple(sorted((label, tuple(idx)) for label, idx in by_type.items()))
    return replace(enum, by_mult_type=pairs)


def mult_type_census(enum: BraceEnumeration) -> dict[str, int]:
    """How many operations have each multiplicative isomorphism type."""
    typed = enum if enum.by_mult_type is not None else with_mult_types(enum)
    return {label: len(idx) for label, idx in typed.by_mult_type}


def braces_with_mult_group(circ_type) -> list[SkewBrace]:
    """All braces (over every census additive group of matching order) whose
    multiplicative group is isomorphic to the given census entry's group."""
    out = []
    for entry in census(CENSUS_MAX_ORDER):
        if entry.order != circ_type.order:
            continue
        enum = with_mult_types(enumerate_circ(entry.group))
        for label, idx in enum.by_mult_type:
            if label == circ_type.label:
                out.extend(enum.operations[i] for i in idx)
    return out
