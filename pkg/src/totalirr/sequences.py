"""Degree-sequence analytics: graphicality, realization, enumeration.

Because the total irregularity depends on the degree sequence alone,
extremal questions over whole graph families reduce to searches over
integer sequences; this module provides that fast path.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .graph import Graph, _require_sorted

__all__ = [
    "SequenceFamilyConstraint",
    "is_graphical",
    "has_connected_realization",
    "realize_connected",
    "enumerate_sequences",
]


def _graphical_defect(d: Sequence[int]) -> str | None:
    """Reason the sorted sequence is not graphical, or None if it is.

    Implements the Erdős–Gallai characterization: a non-increasing sequence
    of non-negative integers is graphical iff its sum is even and for every
    prefix length k, ``sum(d[:k]) <= k(k-1) + sum(min(d_i, k) for i > k)``.
    """
    n = len(d)
    if n == 0:
        return None
    if d[n - 1] < 0:
        return "negative degree"
    if d[0] >= n:
        return f"degree {d[0]} too large for {n} vertices"
    if sum(d) % 2:
        return "odd degree sum"
    prefix = 0
    for k in range(1, n + 1):
        prefix += d[k - 1]
        tail = sum(min(di, k) for di in d[k:])
        if prefix > k * (k - 1) + tail:
            return f"Erdős–Gallai inequality fails at k={k}"
    return None


def is_graphical(d: Sequence[int]) -> bool:
    """True iff some simple graph has ``d`` as its degree sequence."""
    _require_sorted(d)
    return _graphical_defect(d) is None


def has_connected_realization(d: Sequence[int]) -> bool:
    """True iff some connected simple graph realizes ``d``.

    A graphical sequence with minimum degree at least 1 and degree sum at
    least ``2(n-1)`` (enough edges for a spanning tree) always admits a
    connected realization.
    """
    _require_sorted(d)
    n = len(d)
    if n == 0:
        return False
    return (
        d[n - 1] >= 1
        and sum(d) >= 2 * (n - 1)
        and _graphical_defect(d) is None
    )


def realize_connected(d: Sequence[int]) -> Graph:
    """Connected simple graph with degree sequence ``d``.

    Construction: largest-first greedy matching (Havel–Hakimi), then 2-swap
    repairs that trade an edge of a cyclic component against an edge of
    another component until connected.  The swap partner is taken from a
    component that still contains a cycle, which keeps every repair step
    strictly decreasing the component count.
    """
    _require_sorted(d)
    n = len(d)
    if not has_connected_realization(d):
        defect = _graphical_defect(d)
        reason = defect or "not enough edges or an isolated vertex"
        raise ValueError(f"no connected realization: {reason}")

    remaining = [(di, i) for i, di in enumerate(d)]
    edges: set[tuple[int, int]] = set()
    while True:
        remaining.sort(key=lambda t: (-t[0], t[1]))
        top, u = remaining[0]
        if top == 0:
            break
        if top > len(remaining) - 1:
            raise ValueError("realization failed despite graphical input")
        for k in range(1, top + 1):
            dv, v = remaining[k]
            edges.add((min(u, v), max(u, v)))
            remaining[k] = (dv - 1, v)
        remaining[0] = (0, u)

    rows = [0] * n
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u

    # connectivity repair by degree-preserving 2-swaps
    limit = n * max(1, sum(d) // 2)
    for _ in range(limit):
        comps = _components(n, rows)
        if len(comps) <= 1:
            break
        donor = None
        for comp in comps:
            size = comp.bit_count()
            ecount = _edges_inside(rows, comp)
            if ecount >= size:  # has a cycle, so a non-bridge edge exists
                donor = comp
                break
        other = next(c for c in comps if c != donor)
        c, dd = _non_bridge_edge(n, rows, donor)
        a, b = _any_edge(rows, other)
        rows[c] &= ~(1 << dd)
        rows[dd] &= ~(1 << c)
        rows[a] &= ~(1 << b)
        rows[b] &= ~(1 << a)
        rows[a] |= 1 << c
        rows[c] |= 1 << a
        rows[b] |= 1 << dd
        rows[dd] |= 1 << b
    g = Graph.from_rows(rows)
    if not g.is_connected():
        raise RuntimeError("connectivity repair exceeded its step limit")
    return g


def _components(n: int, rows: list[int]) -> list[int]:
    comps = []
    todo = (1 << n) - 1
    while todo:
        seen = todo & -todo
        frontier = seen
        while frontier:
            nxt = 0
            w = frontier
            while w:
                v = (w & -w).bit_length() - 1
                nxt |= rows[v]
                w &= w - 1
            frontier = nxt & ~seen
            seen |= nxt
        comps.append(seen)
        todo &= ~seen
    return comps


def _edges_inside(rows: list[int], comp: int) -> int:
    total = 0
    w = comp
    while w:
        v = (w & -w).bit_length() - 1
        total += (rows[v] & comp).bit_count()
        w &= w - 1
    return total // 2


def _any_edge(rows: list[int], comp: int) -> tuple[int, int]:
    w = comp
    while w:
        v = (w & -w).bit_length() - 1
        if rows[v]:
            u = (rows[v] & -rows[v]).bit_length() - 1
            return v, u
        w &= w - 1
    raise ValueError("component has no edge")


def _non_bridge_edge(n: int, rows: list[int], comp: int) -> tuple[int, int]:
    """Some cycle edge of the component (removal keeps it connected)."""
    w = comp
    while w:
        v = (w & -w).bit_length() - 1
        w &= w - 1
        nb = rows[v] & comp
        while nb:
            u = (nb & -nb).bit_length() - 1
            nb &= nb - 1
            rows[v] &= ~(1 << u)
            rows[u] &= ~(1 << v)
            still = _reaches(rows, v, u)
            rows[v] |= 1 << u
            rows[u] |= 1 << v
            if still:
                return v, u
    raise ValueError("component is acyclic")


def _reaches(rows: list[int], src: int, dst: int) -> bool:
    seen = 1 << src
    frontier = seen
    target = 1 << dst
    while frontier:
        nxt = 0
        w = frontier
        while w:
            v = (w & -w).bit_length() - 1
            nxt |= rows[v]
            w &= w - 1
        if nxt & target:
            return True
        frontier = nxt & ~seen
        seen |= nxt
    return False


@dataclass(frozen=True)
class SequenceFamilyConstraint:
    """Constraint describing a family of degree sequences.

    ``n`` vertices, ``m`` edges (the degree sum is ``2m``), a minimum degree
    bound, an optional connected-realizability filter and an explicit
    exclusion list used by the second/third-minimum queries.
    """

    n: int
    m: int
    min_degree: int = 1
    require_connected_realizable: bool = False
    forbidden_sequences: tuple[tuple[int, ...], ...] = field(default=())


def enumerate_sequences(c: SequenceFamilyConstraint) -> Iterator[tuple[int, ...]]:
    """All non-increasing sequences matching the constraint.

    Emitted in lexicographically decreasing order, each exactly once.
    Entries are capped at ``n - 1`` (simple-graph bound).
    """
    n, target = c.n, 2 * c.m
    if n <= 0:
        return
    forbidden = set(c.forbidden_sequences)
    lo = c.min_degree
    prefix: list[int] = []

    def rec(pos: int, rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        slots = n - pos
        if slots == 0:
            if rest == 0:
                seq = tuple(prefix)
                if seq in forbidden:
                    return
                if c.require_connected_realizable and not has_connected_realization(
                    seq
                ):
                    return
                yield seq
            return
        hi = min(cap, rest - lo * (slots - 1))
        for val in range(hi, lo - 1, -1):
            if val * slots < rest:
                break
            prefix.append(val)
            yield from rec(pos + 1, rest - val, val)
            prefix.pop()

    yield from rec(0, target, n - 1)
