"""Isomorph-free exhaustive generation of small connected graphs.

Trees are grown by leaf augmentation, denser connected graphs by edge
augmentation (every connected graph with a cycle keeps connectivity after
removing some cycle edge, so level-by-level augmentation from trees reaches
everything).  Duplicates are removed with the canonical-form kernel; each
emitted stream is sorted by canonical code, so output is byte-stable across
runs and worker counts.
"""

from __future__ import annotations

from array import array
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator

from . import kernels
from .graph import Graph, GraphClass, classify

__all__ = [
    "CanonicalCode",
    "canonical_form",
    "enumerate_trees",
    "enumerate_connected",
    "enumerate_bicyclic_by_class",
    "SizeLimitError",
]

MAX_CANON_VERTICES = 12
MAX_TREE_VERTICES = 12
MAX_SPARSE_VERTICES = 11  # m in {n-1, n, n+1}
MAX_DENSE_VERTICES = 9  # unrestricted m

_CHUNK = 4096


class SizeLimitError(ValueError):
    """Requested size exceeds what exact enumeration supports."""


@dataclass(frozen=True)
class CanonicalCode:
    """Isomorphism certificate; equal codes mean isomorphic graphs."""

    bytes: bytes

    def __lt__(self, other: "CanonicalCode") -> bool:
        return self.bytes < other.bytes


def canonical_form(g: Graph) -> CanonicalCode:
    """Exact canonical certificate for graphs on at most 12 vertices."""
    if g.n > MAX_CANON_VERTICES:
        raise SizeLimitError(
            f"canonical form supports n <= {MAX_CANON_VERTICES}, got {g.n}"
        )
    return CanonicalCode(bytes([g.n]) + kernels.certificate(g.n, g.adjacency_rows))


def _cert_batch(n: int, all_rows: list[tuple[int, ...]], threads: int) -> list[bytes]:
    """Certificates for many row-tuples, deterministic regardless of threads."""
    count = len(all_rows)
    if count == 0:
        return []

    def run(chunk: list[tuple[int, ...]]) -> list[bytes]:
        flat = array("H")
        for rows in chunk:
            flat.extend(rows)
        return kernels.certificates(n, flat, len(chunk))

    chunks = [all_rows[i : i + _CHUNK] for i in range(0, count, _CHUNK)]
    if threads <= 1 or len(chunks) == 1:
        out: list[bytes] = []
        for chunk in chunks:
            out.extend(run(chunk))
        return out
    with ThreadPoolExecutor(max_workers=threads) as pool:
        out = []
        for part in pool.map(run, chunks):
            out.extend(part)
        return out


def _tree_levels(n: int, threads: int) -> list[dict[bytes, tuple[int, ...]]]:
    """Non-isomorphic trees for 1..n as {certificate: adjacency rows}."""
    levels: list[dict[bytes, tuple[int, ...]]] = [{b"": (0,)}]
    for size in range(2, n + 1):
        parents = list(levels[-1].values())
        cand_rows: list[tuple[int, ...]] = []
        for rows in parents:
            for v in range(size - 1):
                grown = [r for r in rows] + [1 << v]
                grown[v] |= 1 << (size - 1)
                cand_rows.append(tuple(grown))
        certs = _cert_batch(size, cand_rows, threads)
        level: dict[bytes, tuple[int, ...]] = {}
        for cert, rows in zip(certs, cand_rows):
            if cert not in level:
                level[cert] = rows
        levels.append(level)
    return levels


def _augment(
    n: int, parents: dict[bytes, tuple[int, ...]], threads: int
) -> dict[bytes, tuple[int, ...]]:
    """All connected graphs obtained by adding one edge, deduplicated."""
    cand_rows: list[tuple[int, ...]] = []
    seen_rows: set[tuple[int, ...]] = set()
    for cert in sorted(parents):
        rows = parents[cert]
        for u in range(n):
            free = ~rows[u] & ~(1 << u) & ((1 << n) - 1)
            free >>= u + 1
            v = u + 1
            while free:
                if free & 1:
                    grown = list(rows)
                    grown[u] |= 1 << v
                    grown[v] |= 1 << u
                    trows = tuple(grown)
                    if trows not in seen_rows:
                        seen_rows.add(trows)
                        cand_rows.append(trows)
                free >>= 1
                v += 1
    certs = _cert_batch(n, cand_rows, threads)
    level: dict[bytes, tuple[int, ...]] = {}
    for cert, rows in zip(certs, cand_rows):
        if cert not in level:
            level[cert] = rows
    return level


def _connected_levels(
    n: int, m_max: int, threads: int
) -> Iterator[tuple[int, dict[bytes, tuple[int, ...]]]]:
    """Yield (m, {certificate: rows}) for m = n-1 .. m_max."""
    level = _tree_levels(n, threads)[n - 1] if n >= 1 else {}
    m = n - 1
    yield m, level
    while m < m_max:
        level = _augment(n, level, threads)
        m += 1
        yield m, level


def _check_connected_limits(n: int, m: int | None) -> None:
    if n < 1:
        raise SizeLimitError("need at least one vertex")
    if m is None or m > n + 1:
        if n > MAX_DENSE_VERTICES:
            raise SizeLimitError(
                f"unrestricted edge counts support n <= {MAX_DENSE_VERTICES}, got {n}"
            )
    elif n > MAX_SPARSE_VERTICES:
        raise SizeLimitError(
            f"edge count {m} supports n <= {MAX_SPARSE_VERTICES}, got {n}"
        )


def enumerate_trees(n: int, threads: int = 1) -> Iterator[Graph]:
    """All non-isomorphic trees on ``n`` vertices, 1 <= n <= 12."""
    if not 1 <= n <= MAX_TREE_VERTICES:
        raise SizeLimitError(f"tree enumeration supports 1 <= n <= {MAX_TREE_VERTICES}")
    level = _tree_levels(n, threads)[n - 1]
    for cert in sorted(level):
        yield Graph.from_rows(level[cert])


def enumerate_connected(n: int, m: int | None = None, threads: int = 1) -> Iterator[Graph]:
    """All non-isomorphic connected graphs on ``n`` vertices.

    With ``m`` given, only graphs with exactly ``m`` edges (supported for
    n <= 11 when m is within 1 of the tree count, n <= 9 otherwise); with
    ``m=None`` every edge count from n-1 up to the complete graph (n <= 9).
    """
    _check_connected_limits(n, m)
    max_edges = n * (n - 1) // 2
    if m is not None:
        if m < n - 1 or m > max_edges:
            return
        target = m
    else:
        target = max_edges
    for level_m, level in _connected_levels(n, target, threads):
        if m is None or level_m == m:
            for cert in sorted(level):
                yield Graph.from_rows(level[cert])


def enumerate_bicyclic_by_class(
    n: int, threads: int = 1
) -> Iterator[tuple[Graph, GraphClass]]:
    """Connected graphs with ``n + 1`` edges, tagged with their core shape."""
    if n > MAX_SPARSE_VERTICES:
        raise SizeLimitError(
            f"bicyclic enumeration supports n <= {MAX_SPARSE_VERTICES}, got {n}"
        )
    for g in enumerate_connected(n, n + 1, threads=threads):
        yield g, classify(g)
