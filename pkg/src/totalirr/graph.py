"""Simple undirected graphs and their degree-based irregularity indices.

Graphs are immutable, live on labeled vertices ``0..n-1`` (``n <= 64``) and
store one adjacency bitset per vertex.  All arithmetic is exact integer
arithmetic; no floating point is used anywhere in the bounds or indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Sequence

__all__ = [
    "Graph",
    "GraphClass",
    "GraphKind",
    "DegreeProfile",
    "total_irregularity",
    "edge_irregularity",
    "degree_sequence",
    "irr_t_of_sequence",
    "degree_profile",
    "two_core",
    "classify",
    "make_infinity",
    "make_theta",
]

MAX_VERTICES = 64


class Graph:
    """Immutable simple undirected graph on ``n`` labeled vertices.

    Edges are unordered pairs of distinct vertex indices below ``n``.
    Self-loops and duplicate edges are rejected at construction time, so the
    handshake identity ``sum(degrees) == 2 * m`` holds for every instance.
    """

    __slots__ = ("n", "_rows", "_degrees")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0 or n > MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if rows[u] >> v & 1:
                raise ValueError(f"duplicate edge ({u}, {v})")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_rows", tuple(rows))
        object.__setattr__(self, "_degrees", tuple(r.bit_count() for r in rows))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        """Build a graph directly from adjacency bitsets (internal fast path)."""
        g = object.__new__(cls)
        object.__setattr__(g, "n", len(rows))
        object.__setattr__(g, "_rows", tuple(rows))
        object.__setattr__(g, "_degrees", tuple(r.bit_count() for r in rows))
        return g

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        if n < 3:
            raise ValueError("a cycle needs at least 3 vertices")
        return cls(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def star(cls, n: int) -> "Graph":
        return cls(n, [(0, i) for i in range(1, n)])

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @property
    def m(self) -> int:
        return sum(self._degrees) // 2

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        out = []
        for u in range(self.n):
            w = self._rows[u] >> (u + 1) << (u + 1)
            while w:
                v = (w & -w).bit_length() - 1
                out.append((u, v))
                w &= w - 1
        return tuple(out)

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._degrees

    @property
    def adjacency_rows(self) -> tuple[int, ...]:
        return self._rows

    def degree(self, v: int) -> int:
        return self._degrees[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        out = []
        w = self._rows[v]
        while w:
            out.append((w & -w).bit_length() - 1)
            w &= w - 1
        return tuple(out)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._rows[u] >> v & 1)

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        full = (1 << self.n) - 1
        while frontier:
            nxt = 0
            w = frontier
            while w:
                v = (w & -w).bit_length() - 1
                nxt |= self._rows[v]
                w &= w - 1
            frontier = nxt & ~seen
            seen |= nxt
        return seen == full

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self.n, self._rows))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"


def total_irregularity(g: Graph) -> int:
    """Sum of ``|deg(u) - deg(v)|`` over all unordered vertex pairs."""
    degs = g.degrees
    n = g.n
    total = 0
    for i in range(n):
        di = degs[i]
        for j in range(i + 1, n):
            total += abs(di - degs[j])
    return total


def edge_irregularity(g: Graph) -> int:
    """Sum of ``|deg(u) - deg(v)|`` over the edges only (Albertson's index)."""
    degs = g.degrees
    return sum(abs(degs[u] - degs[v]) for u, v in g.edges)


def degree_sequence(g: Graph) -> tuple[int, ...]:
    """Vertex degrees sorted in non-increasing order."""
    return tuple(sorted(g.degrees, reverse=True))


def _require_sorted(d: Sequence[int]) -> None:
    if any(d[i] < d[i + 1] for i in range(len(d) - 1)):
        raise ValueError("degree sequence must be non-increasing")


def irr_t_of_sequence(d: Sequence[int]) -> int:
    """Total irregularity of any graph realizing the sorted sequence ``d``.

    For a non-increasing sequence the pairwise sum collapses to the single
    pass ``sum((n + 1 - 2i) * d_i)`` over 1-based positions; the total
    irregularity is a function of the degree sequence alone.
    """
    _require_sorted(d)
    n = len(d)
    return sum((n + 1 - 2 * (i + 1)) * di for i, di in enumerate(d))


@dataclass(frozen=True)
class DegreeProfile:
    """Degree-class counts used throughout the extremal case analyses.

    ``s`` counts vertices of degree >= 3, ``h`` counts pendant vertices,
    ``t`` counts vertices of maximum degree and ``r`` (when a reference
    degree is given) counts vertices ``w`` with ``2 <= deg(w) < ref_degree``.
    """

    s: int
    h: int
    t: int
    max_degree: int
    r: int | None = None


def degree_profile(d: Sequence[int], u_degree: int | None = None) -> DegreeProfile:
    """Compute the degree-class profile of a sorted sequence.

    ``u_degree``, when given, must be at least 3 and selects the reference
    degree against which ``r`` is counted.
    """
    _require_sorted(d)
    if u_degree is not None and u_degree < 3:
        raise ValueError("reference degree must be at least 3")
    max_degree = d[0] if d else 0
    s = sum(1 for x in d if x >= 3)
    h = sum(1 for x in d if x == 1)
    t = sum(1 for x in d if x == max_degree) if d else 0
    r = None
    if u_degree is not None:
        r = sum(1 for x in d if 2 <= x < u_degree)
    return DegreeProfile(s=s, h=h, t=t, max_degree=max_degree, r=r)


class GraphKind(Enum):
    TREE = "Tree"
    UNICYCLIC = "Unicyclic"
    BICYCLIC_INFINITY_L1 = "BicyclicInfinityL1"
    BICYCLIC_INFINITY_L2PLUS = "BicyclicInfinityL2plus"
    BICYCLIC_THETA = "BicyclicTheta"
    OTHER = "Other"


@dataclass(frozen=True)
class GraphClass:
    """Structural classification of a graph.

    For the bicyclic kinds ``pql`` carries the core parameters ``(p, q, l)``:
    the two cycle lengths and either the connecting-path vertex count (the
    two-cycles-joined shapes) or the shared-path vertex count (the theta
    shape).  ``disconnected`` marks inputs classified Other for lack of
    connectivity rather than for their edge count.
    """

    kind: GraphKind
    pql: tuple[int, int, int] | None = None
    disconnected: bool = False


def two_core(g: Graph) -> Graph:
    """Maximal subgraph of minimum degree >= 2, vertices relabeled compactly.

    Obtained by iteratively deleting degree-1 vertices; trees peel down to
    the empty graph.  Relabeling preserves the relative order of the
    surviving vertex indices.
    """
    n = g.n
    rows = list(g.adjacency_rows)
    alive = (1 << n) - 1 if n else 0
    changed = True
    while changed:
        changed = False
        w = alive
        while w:
            v = (w & -w).bit_length() - 1
            w &= w - 1
            if (rows[v] & alive).bit_count() <= 1:
                alive &= ~(1 << v)
                changed = True
    keep = []
    w = alive
    while w:
        keep.append((w & -w).bit_length() - 1)
        w &= w - 1
    index = {v: i for i, v in enumerate(keep)}
    edges = []
    for v in keep:
        w = rows[v] & alive
        while w:
            u = (w & -w).bit_length() - 1
            w &= w - 1
            if u > v:
                edges.append((index[v], index[u]))
    return Graph(len(keep), edges)


def _bridges(g: Graph) -> set[tuple[int, int]]:
    """Bridge edges via an iterative DFS lowpoint computation."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    out: set[tuple[int, int]] = set()
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        stack = [(root, -1, iter(g.neighbors(root)))]
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue  # simple graph: the tree edge occurs once
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                low[v] = min(low[v], disc[w])
            if not advanced:
                stack.pop()
                if stack:
                    u = stack[-1][0]
                    low[u] = min(low[u], low[v])
                    if low[v] > disc[u]:
                        out.add((min(u, v), max(u, v)))
    return out


def _components_masks(n: int, rows: Sequence[int], alive: int) -> list[int]:
    comps = []
    todo = alive
    while todo:
        start = todo & -todo
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            w = frontier
            while w:
                v = (w & -w).bit_length() - 1
                nxt |= rows[v] & alive
                w &= w - 1
            frontier = nxt & ~seen
            seen |= nxt
        comps.append(seen)
        todo &= ~seen
    return comps


def classify(g: Graph) -> GraphClass:
    """Classify by edge count and, for bicyclic graphs, by core shape.

    Connected graphs with ``m = n - 1`` / ``n`` / ``n + 1`` edges are trees,
    unicyclic and bicyclic respectively.  A bicyclic graph is split on its
    2-core: a degree-4 core vertex means two cycles sharing one vertex; two
    degree-3 core vertices mean either two cycles joined by a path (core has
    a cut edge) or a theta shape (core 2-connected).  Anything else,
    including disconnected input, is Other.
    """
    n = g.n
    if n == 0:
        return GraphClass(GraphKind.OTHER)
    if not g.is_connected():
        return GraphClass(GraphKind.OTHER, disconnected=True)
    m = g.m
    if m == n - 1:
        return GraphClass(GraphKind.TREE)
    if m == n:
        return GraphClass(GraphKind.UNICYCLIC)
    if m != n + 1:
        return GraphClass(GraphKind.OTHER)

    core = two_core(g)
    rows = core.adjacency_rows
    degs = core.degrees
    if max(degs) == 4:
        hub = degs.index(4)
        alive = ((1 << core.n) - 1) & ~(1 << hub)
        comps = _components_masks(core.n, rows, alive)
        sizes = sorted(c.bit_count() for c in comps)
        p, q = sizes[0] + 1, sizes[1] + 1
        return GraphClass(GraphKind.BICYCLIC_INFINITY_L1, pql=(p, q, 1))

    branch = [v for v in range(core.n) if degs[v] == 3]
    a, b = branch
    bridges = _bridges(core)
    if bridges:
        alive = (1 << core.n) - 1
        non_bridge_rows = list(rows)
        for u, v in bridges:
            non_bridge_rows[u] &= ~(1 << v)
            non_bridge_rows[v] &= ~(1 << u)
        cycles = [
            c
            for c in _components_masks(core.n, non_bridge_rows, alive)
            if c.bit_count() > 1
        ]
        p, q = sorted(c.bit_count() for c in cycles)
        l = len(bridges) + 1
        return GraphClass(GraphKind.BICYCLIC_INFINITY_L2PLUS, pql=(p, q, l))

    # theta: walk the three internally disjoint paths between the two
    # degree-3 vertices and recover (p, q, l) from the sorted edge lengths
    lengths = []
    for start in core.neighbors(a):
        prev, cur, steps = a, start, 1
        while cur != b:
            nxt = [w for w in core.neighbors(cur) if w != prev]
            prev, cur = cur, nxt[0]
            steps += 1
        lengths.append(steps)
    l1, l2, l3 = sorted(lengths)
    return GraphClass(
        GraphKind.BICYCLIC_THETA, pql=(l1 + l2, l1 + l3, l1 + 1)
    )


def make_infinity(p: int, q: int, l: int) -> Graph:
    """Two disjoint cycles of lengths ``p`` and ``q`` joined by a path.

    The connecting path has ``l`` vertices (``l - 1`` edges); ``l == 1``
    identifies one vertex of each cycle.  The result has ``p + q + l - 2``
    vertices and one more edge than vertices.
    """
    if p < 3 or q < 3:
        raise ValueError("cycle lengths must be at least 3")
    if l < 1:
        raise ValueError("connecting path needs at least 1 vertex")
    edges: list[tuple[int, int]] = []
    # cycle one on 0..p-1
    edges += [(i, (i + 1) % p) for i in range(p)]
    if l == 1:
        # second cycle through the shared vertex 0
        second = [0] + list(range(p, p + q - 1))
    else:
        second = list(range(p, p + q))
    for i in range(len(second)):
        edges.append((second[i], second[(i + 1) % len(second)]))
    if l >= 2:
        chain = [0] + list(range(p + q, p + q + l - 2)) + [p]
        edges += [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)]
    n = p + q + l - 2 if l >= 2 else p + q - 1
    return Graph(n, [(min(u, v), max(u, v)) for u, v in edges])


def make_theta(p: int, q: int, l: int) -> Graph:
    """Two cycles of lengths ``p`` and ``q`` sharing a path of ``l`` vertices.

    Requires ``2 <= l <= min(p, q) - 1`` so both private arcs are genuine
    paths and the graph stays simple; the result has ``p + q - l`` vertices.
    """
    if p < 3 or q < 3:
        raise ValueError("cycle lengths must be at least 3")
    if not 2 <= l <= min(p, q) - 1:
        raise ValueError("shared path length must satisfy 2 <= l <= min(p, q) - 1")
    edges = [(i, i + 1) for i in range(l - 1)]  # shared path 0..l-1
    arc1 = [l - 1] + list(range(l, l + p - l)) + [0]
    arc2 = [l - 1] + list(range(p, p + q - l)) + [0]
    edges += [(arc1[i], arc1[i + 1]) for i in range(len(arc1) - 1)]
    edges += [(arc2[i], arc2[i + 1]) for i in range(len(arc2) - 1)]
    return Graph(p + q - l, [(min(u, v), max(u, v)) for u, v in edges])
