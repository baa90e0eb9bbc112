import sys
from pathlib import Path

import pytest
from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

from totalirr.enumeration import enumerate_connected

settings.register_profile("default", deadline=None)
settings.load_profile("default")


def _edge_mask(g) -> int:
    """Pack the edge set of a graph into the lexicographic pair bitmask."""
    n = g.n
    index = {}
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            index[(i, j)] = k
            k += 1
    mask = 0
    for e in g.edges:
        mask |= 1 << index[e]
    return mask


def mask_to_graph(n: int, mask: int):
    from totalirr.graph import Graph

    edges = []
    k = 0
    for i in range(n):
        for j in range(i + 1, n):
            if mask >> k & 1:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


@pytest.fixture(scope="session")
def connected_upto9():
    """Edge masks of every connected graph on 1..9 vertices.

    Shared by the acceptance tests that sweep the full n <= 9 universe;
    computing the n = 9 level once keeps the suite affordable.
    """
    out = {}
    for n in range(1, 10):
        out[n] = [_edge_mask(g) for g in enumerate_connected(n, None, threads=4)]
    return out
