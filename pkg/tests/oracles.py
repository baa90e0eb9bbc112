"""Independent oracles used by the test suite.

Nothing here touches the package's enumeration or canonical-form code:
counts come from cycle-index (Polya) computations with an inverse Euler
transform, from the rooted/free tree recurrences, or from brute-force
sweeps over labeled graphs.  The package is then required to reproduce
these numbers exactly.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations
from math import factorial, gcd


def partitions(n: int, max_part: int | None = None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def _pair_cycle_lengths(parts: tuple[int, ...]) -> Counter:
    """Orbit lengths of the vertex-pair action of a permutation with the
    given cycle type."""
    out: Counter = Counter()
    for a in parts:
        if a % 2:
            if a >= 3:
                out[a] += (a - 1) // 2
        else:
            out[a // 2] += 1
            if a >= 4:
                out[a] += (a - 2) // 2
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            a, b = parts[i], parts[j]
            out[a * b // gcd(a, b)] += gcd(a, b)
    return out


def _z_lambda(parts: tuple[int, ...]) -> int:
    z = 1
    for part, mult in Counter(parts).items():
        z *= part**mult * factorial(mult)
    return z


def polya_graph_counts_by_edges(n: int, x_max: int | None = None) -> list[int]:
    """Number of unlabeled graphs on ``n`` vertices with m edges, m <= x_max."""
    full = n * (n - 1) // 2
    if x_max is None:
        x_max = full
    x_max = min(x_max, full)
    total = [Fraction(0)] * (x_max + 1)
    for parts in partitions(n):
        poly = [Fraction(0)] * (x_max + 1)
        poly[0] = Fraction(1, _z_lambda(parts))
        for length, cnt in _pair_cycle_lengths(parts).items():
            for _ in range(cnt):
                if length <= x_max:
                    for k in range(x_max, length - 1, -1):
                        poly[k] += poly[k - length]
        for k in range(x_max + 1):
            total[k] += poly[k]
    out = []
    for v in total:
        assert v.denominator == 1, "cycle-index sum must be integral"
        out.append(int(v))
    return out


def connected_graph_counts_by_edges(
    n_max: int, x_max: int
) -> dict[tuple[int, int], int]:
    """Connected unlabeled graph counts by (vertices, edges).

    Inverts the two-variable Euler transform of the Polya counts: with
    ``b(n,m) = sum over j dividing (n,m) of (n/j) c(n/j,m/j)``, the counts
    satisfy ``n g(n,m) = sum b(k,l) g(n-k,m-l)``.
    """
    g: dict[tuple[int, int], int] = {(0, 0): 1}
    for n in range(1, n_max + 1):
        row = polya_graph_counts_by_edges(n, x_max)
        for m, v in enumerate(row):
            g[(n, m)] = v
    b: dict[tuple[int, int], int] = {}
    c: dict[tuple[int, int], int] = {}
    for n in range(1, n_max + 1):
        for m in range(0, min(x_max, n * (n - 1) // 2) + 1):
            acc = n * g[(n, m)]
            for k in range(1, n):
                for l in range(0, m + 1):
                    if (k, l) in b and (n - k, m - l) in g:
                        acc -= b[(k, l)] * g[(n - k, m - l)]
            bb = acc
            b[(n, m)] = bb
            rem = bb
            j = 2
            while j <= n:
                if n % j == 0 and m % j == 0 and (n // j, m // j) in c:
                    rem -= (n // j) * c[(n // j, m // j)]
                j += 1
            assert rem % n == 0
            c[(n, m)] = rem // n
    return c


def otter_tree_counts(n_max: int) -> list[int]:
    """Free tree counts via the rooted-tree recurrence and Otter's formula."""
    r = [0] * (n_max + 2)
    r[1] = 1
    for n in range(1, n_max):
        total = 0
        for k in range(1, n + 1):
            sd = sum(d * r[d] for d in range(1, k + 1) if k % d == 0)
            total += sd * r[n - k + 1]
        r[n + 1] = total // n
    t = [0] * (n_max + 1)
    for n in range(1, n_max + 1):
        s = sum(r[i] * r[n - i] for i in range(1, n))
        if n % 2 == 0:
            s -= r[n // 2]
        t[n] = r[n] - s // 2
    return t


def labeled_degree_sequences(n: int) -> set[tuple[int, ...]]:
    """Sorted degree sequences of ALL labeled simple graphs on n vertices.

    Brute force over every edge subset, vectorized; practical for n <= 7.
    """
    import numpy as np

    pairs = list(combinations(range(n), 2))
    e = len(pairs)
    masks = np.arange(1 << e, dtype=np.uint32)
    degs = np.zeros((1 << e, n), dtype=np.uint8)
    for idx, (u, v) in enumerate(pairs):
        bit = ((masks >> idx) & 1).astype(np.uint8)
        degs[:, u] += bit
        degs[:, v] += bit
    degs.sort(axis=1)
    uniq = np.unique(degs[:, ::-1], axis=0)
    return {tuple(int(x) for x in row) for row in uniq}


def connected_labeled_degree_sequences(n: int) -> set[tuple[int, ...]]:
    """Sorted degree sequences of connected labeled graphs; n <= 6."""
    pairs = list(combinations(range(n), 2))
    out: set[tuple[int, ...]] = set()
    full = (1 << n) - 1
    for mask in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if mask >> i & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            w = frontier
            while w:
                v = (w & -w).bit_length() - 1
                nxt |= rows[v]
                w &= w - 1
            frontier = nxt & ~seen
            seen |= nxt
        if seen == full:
            out.add(tuple(sorted((r.bit_count() for r in rows), reverse=True)))
    return out


def to_networkx(g):
    import networkx as nx

    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def pairwise_irr_t(degrees) -> int:
    """Direct quadratic evaluation used as the reference everywhere."""
    ds = list(degrees)
    return sum(
        abs(ds[i] - ds[j]) for i in range(len(ds)) for j in range(i + 1, len(ds))
    )
