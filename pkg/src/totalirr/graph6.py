"""graph6 records: the compact printable encoding of simple graphs.

Supported range is n <= 62 (single-byte header ``n + 63``).  The
upper-triangle adjacency bits are listed column by column -- pair (i, j)
with i < j ordered by j then i -- padded with zero bits to a multiple of
six; every six-bit group is stored as ``value + 63``, keeping all bytes
printable in ``[63, 126]``.
"""

from __future__ import annotations

from .graph import Graph

__all__ = ["Graph6Error", "parse_graph6", "write_graph6", "MAX_GRAPH6_VERTICES"]

MAX_GRAPH6_VERTICES = 62


class Graph6Error(ValueError):
    """Malformed graph6 record; the message carries the byte position."""


def write_graph6(g: Graph) -> str:
    """Encode a graph as a one-line graph6 record."""
    n = g.n
    if n > MAX_GRAPH6_VERTICES:
        raise ValueError(f"graph6 single-byte records support n <= {MAX_GRAPH6_VERTICES}")
    out = [n + 63]
    acc = 0
    nbits = 0
    for j in range(1, n):
        for i in range(j):
            acc = acc << 1 | (1 if g.has_edge(i, j) else 0)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out).decode("ascii")


def parse_graph6(line: str) -> Graph:
    """Decode one graph6 record, rejecting malformed input with positions."""
    s = line.rstrip("\n")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as exc:
        raise Graph6Error(f"byte {exc.start}: non-ASCII character") from None
    if not data:
        raise Graph6Error("empty record")
    header = data[0]
    if header == 126:
        raise Graph6Error("byte 0: multi-byte headers (n > 62) are not supported")
    if not 63 <= header <= 125:
        raise Graph6Error(f"byte 0: bad header byte {header}")
    n = header - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - 1 < nbytes:
        raise Graph6Error(
            f"byte {len(data)}: truncated bit region, need {nbytes} data bytes"
        )
    if len(data) - 1 > nbytes:
        raise Graph6Error(f"byte {1 + nbytes}: trailing garbage")
    for k in range(1, len(data)):
        if not 63 <= data[k] <= 126:
            raise Graph6Error(f"byte {k}: bad data byte {data[k]}")
    edges = []
    bit = 0
    for j in range(1, n):
        for i in range(j):
            if (data[1 + bit // 6] - 63) >> (5 - bit % 6) & 1:
                edges.append((i, j))
            bit += 1
    if nbits % 6:
        mask = (1 << (6 - nbits % 6)) - 1
        if (data[nbytes] - 63) & mask:
            raise Graph6Error(f"byte {nbytes}: nonzero padding bits")
    return Graph(n, edges)
