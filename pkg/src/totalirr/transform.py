"""Branch moves: relocating a hanging tree to a pendant vertex.

Detaching a hanging tree from a vertex of degree >= 3 and reattaching it
to a pendant vertex lowers the total irregularity by exactly
``2 * (r + 1)``, where ``r`` counts vertices whose degree lies in
``[2, deg(u))``.  Iterating the move while any is available drives a graph
to a local minimum of the index, losing one pendant vertex per step.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, total_irregularity

__all__ = [
    "HangingTree",
    "TransformStep",
    "TransformError",
    "DegreeTooSmallError",
    "TooFewPendantsError",
    "TargetNotPendantError",
    "TargetInsideSubtreeError",
    "NotAHangingTreeError",
    "hanging_trees_at",
    "branch_transform",
    "predicted_delta",
    "reduce_to_minimum",
]


class TransformError(ValueError):
    """A precondition of the branch move is violated."""


class DegreeTooSmallError(TransformError):
    """The source vertex has degree below 3."""


class TooFewPendantsError(TransformError):
    """The graph has fewer than two pendant vertices."""


class TargetNotPendantError(TransformError):
    """The target vertex is not a pendant vertex."""


class TargetInsideSubtreeError(TransformError):
    """The target vertex lies inside the subtree being moved."""


class NotAHangingTreeError(TransformError):
    """The subtree is not a hanging tree at the source vertex."""


@dataclass(frozen=True)
class HangingTree:
    """An induced subtree joined to the rest of the graph by one edge.

    ``bridge_edge`` is ``(root_attachment, w)`` with ``w`` inside
    ``subtree_vertices``; removing the subtree leaves the host connected.
    """

    root_attachment: int
    subtree_vertices: frozenset[int]
    bridge_edge: tuple[int, int]

    def __len__(self) -> int:
        return len(self.subtree_vertices)


@dataclass(frozen=True)
class TransformStep:
    """One applied branch move and its exact index change."""

    source: int
    target: int
    moved: HangingTree
    delta: int


def hanging_trees_at(g: Graph, u: int) -> list[HangingTree]:
    """All maximal hanging trees whose bridge edge is incident to ``u``.

    For each neighbor ``w`` of ``u``, the edge ``uw`` supports a hanging
    tree exactly when it is a bridge and the component of ``w`` after its
    removal induces a tree.  Results are ordered by (size, w).
    """
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range")
    rows = g.adjacency_rows
    out = []
    for w in g.neighbors(u):
        comp = _component_without_edge(g, w, u)
        if comp >> u & 1:
            continue  # uw lies on a cycle
        size = comp.bit_count()
        inside = 0
        x = comp
        while x:
            v = (x & -x).bit_length() - 1
            inside += (rows[v] & comp).bit_count()
            x &= x - 1
        if inside // 2 != size - 1:
            continue  # component contains a cycle, not a tree
        vertices = frozenset(_bits(comp))
        out.append(HangingTree(u, vertices, (u, w)))
    out.sort(key=lambda t: (len(t), t.bridge_edge[1]))
    return out


def _component_without_edge(g: Graph, start: int, banned_from: int) -> int:
    """Vertex mask reachable from ``start`` ignoring edge start-banned_from."""
    rows = list(g.adjacency_rows)
    rows[start] &= ~(1 << banned_from)
    rows[banned_from] &= ~(1 << start)
    seen = 1 << start
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
    return seen


def _bits(mask: int):
    while mask:
        yield (mask & -mask).bit_length() - 1
        mask &= mask - 1


def predicted_delta(g: Graph, u: int) -> int:
    """Exact index change of any valid branch move away from ``u``.

    Equals ``-2 * (r + 1)`` with ``r = |{w : 2 <= deg(w) < deg(u)}|``;
    always strictly negative.
    """
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range")
    du = g.degree(u)
    if du < 3:
        raise DegreeTooSmallError(f"vertex {u} has degree {du}, need at least 3")
    r = sum(1 for dw in g.degrees if 2 <= dw < du)
    return -2 * (r + 1)


def branch_transform(g: Graph, u: int, v: int, t: HangingTree) -> Graph:
    """Move the hanging tree ``t`` from vertex ``u`` to pendant vertex ``v``.

    The bridge edge ``u-w`` is replaced by ``v-w``; only the degrees of
    ``u`` (down one) and ``v`` (up to 2) change, and the result is again
    connected and simple with a strictly smaller total irregularity.
    """
    if not 0 <= u < g.n:
        raise ValueError(f"vertex {u} out of range")
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range")
    if g.degree(u) < 3:
        raise DegreeTooSmallError(f"vertex {u} has degree {g.degree(u)}, need at least 3")
    if sum(1 for d in g.degrees if d == 1) < 2:
        raise TooFewPendantsError("graph needs at least two pendant vertices")
    if g.degree(v) != 1:
        raise TargetNotPendantError(f"target {v} has degree {g.degree(v)}")
    if v in t.subtree_vertices:
        raise TargetInsideSubtreeError(f"target {v} lies inside the moved subtree")
    if t not in hanging_trees_at(g, u):
        raise NotAHangingTreeError(
            f"subtree {sorted(t.subtree_vertices)} does not hang from vertex {u}"
        )
    w = t.bridge_edge[1]
    rows = list(g.adjacency_rows)
    rows[u] &= ~(1 << w)
    rows[w] &= ~(1 << u)
    rows[v] |= 1 << w
    rows[w] |= 1 << v
    return Graph.from_rows(rows)


def _first_valid_move(g: Graph) -> tuple[int, int, HangingTree] | None:
    """Deterministic move choice: highest-degree source (lowest index on
    ties), smallest hanging tree, lowest-index pendant outside it."""
    degs = g.degrees
    pendants = [v for v in range(g.n) if degs[v] == 1]
    if len(pendants) < 2:
        return None
    for u in sorted(range(g.n), key=lambda x: (-degs[x], x)):
        if degs[u] < 3:
            break
        for t in hanging_trees_at(g, u):
            for v in pendants:
                if v not in t.subtree_vertices:
                    return u, v, t
    return None


def reduce_to_minimum(g: Graph) -> tuple[Graph, list[TransformStep]]:
    """Apply branch moves until none is valid, recording every step.

    The index strictly decreases and the pendant count drops by exactly one
    per step, so the loop terminates.  The final graph depends on the move
    policy; only its local minimality is guaranteed.
    """
    if not g.is_connected():
        raise ValueError("reduction requires a connected graph")
    steps: list[TransformStep] = []
    current = g
    irr = total_irregularity(current)
    while True:
        move = _first_valid_move(current)
        if move is None:
            return current, steps
        u, v, t = move
        nxt = branch_transform(current, u, v, t)
        nirr = total_irregularity(nxt)
        steps.append(TransformStep(source=u, target=v, moved=t, delta=nirr - irr))
        current, irr = nxt, nirr
