"""Pure-Python canonical-form kernel for graphs on at most 12 vertices.

The compiled extension in ``_canon.pyx`` implements the same algorithm;
both must produce bit-identical certificates.  The certificate is the
lexicographically smallest packing of the lower-triangle adjacency bits
over all vertex orderings compatible with an isomorphism-invariant color
partition, so two graphs share a certificate exactly when they are
isomorphic.

Algorithm outline:

1. Refine an initial degree coloring with neighborhood color multisets
   until stable (Weisfeiler-Lehman style, exact integer signatures).
2. Search over labelings: at each level pick the smallest color class of
   unplaced vertices, try its members ordered by their adjacency bits to
   the already-placed prefix, and prune branches whose bits exceed the
   best known certificate.
3. After placing a vertex, split the remaining classes by adjacency to it
   and re-rank classes by (size, previous rank, adjacency bit).
4. Skip a candidate when a previously tried sibling has an identical
   adjacency row outside the pair (swapping the two is an automorphism).

Only the partition rules need to be isomorphism-invariant; candidate order
inside a class affects speed, never the result.
"""

from __future__ import annotations

from typing import Sequence

BACKEND_NAME = "python"

MAX_N = 12
_INF = 1 << 14

# signature packing base: with n <= 12 there are at most 12 colors and at
# most 12 neighbors of any color, so base-13 digits never carry
_BASE = 13
_POW = [_BASE**i for i in range(MAX_N + 2)]


def _stable_colors(n: int, rows: Sequence[int]) -> list[int]:
    """Initial invariant coloring: degrees refined to a stable partition."""
    degs = [rows[v].bit_count() for v in range(n)]
    order = sorted(set(degs))
    colors = [order.index(d) for d in degs]
    ncolors = len(order)
    while True:
        sigs = []
        for v in range(n):
            sig = colors[v] * _POW[MAX_N + 1]
            w = rows[v]
            while w:
                u = (w & -w).bit_length() - 1
                sig += _POW[colors[u]]
                w &= w - 1
            sigs.append(sig)
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new_colors = [ranking[s] for s in sigs]
        if len(ranking) == ncolors:
            return new_colors
        colors = new_colors
        ncolors = len(ranking)


def certificate(n: int, rows: Sequence[int]) -> bytes:
    """Canonical certificate of the graph given as adjacency bitsets."""
    if n > MAX_N:
        raise ValueError(f"canonical form supports at most {MAX_N} vertices")
    if n <= 1:
        return b""

    colors = _stable_colors(n, rows)
    best = [_INF] * n
    vals = [0] * n
    used = [False] * n

    def rec(k: int, colors: list[int]) -> None:
        if k == n:
            return
        groups: dict[int, list[int]] = {}
        for v in range(n):
            if not used[v]:
                groups.setdefault(colors[v], []).append(v)
        cls = min(groups.items(), key=lambda item: (len(item[1]), item[0]))[1]
        cls.sort(key=lambda v: (vals[v], v))
        tried: list[int] = []
        for v in cls:
            if k >= 1 and vals[v] > best[k]:
                break
            skip = False
            for u in tried:
                pair = ~((1 << u) | (1 << v))
                if rows[u] & pair == rows[v] & pair:
                    skip = True
                    break
            if skip:
                continue
            if k >= 1 and vals[v] < best[k]:
                best[k] = vals[v]
                for j in range(k + 1, n):
                    best[j] = _INF
            used[v] = True
            saved = vals.copy()
            rowv = rows[v]
            for w in range(n):
                if not used[w]:
                    vals[w] = vals[w] << 1 | (rowv >> w & 1)
            # split classes by adjacency to v, re-rank by (size, rank, bit)
            keyed = {}
            for w in range(n):
                if not used[w]:
                    keyed.setdefault((colors[w], rowv >> w & 1), []).append(w)
            ordered = sorted(
                keyed.items(), key=lambda item: (len(item[1]), item[0])
            )
            new_colors = colors.copy()
            for rank, (_, members) in enumerate(ordered):
                for w in members:
                    new_colors[w] = rank
            rec(k + 1, new_colors)
            vals[:] = saved
            used[v] = False
            tried.append(v)

    rec(0, colors)
    return _pack(n, best)


def _pack(n: int, levels: Sequence[int]) -> bytes:
    """Pack level bit-values (level k carries k bits) into MSB-first bytes."""
    acc = 0
    nbits = 0
    for k in range(1, n):
        acc = acc << k | levels[k]
        nbits += k
    pad = -nbits % 8
    acc <<= pad
    return acc.to_bytes((nbits + pad) // 8, "big")


def certificates(n: int, rows_flat: Sequence[int], count: int) -> list[bytes]:
    """Batch variant: ``rows_flat`` holds ``count`` groups of ``n`` bitsets."""
    out = []
    for g in range(count):
        out.append(certificate(n, rows_flat[g * n : (g + 1) * n]))
    return out
