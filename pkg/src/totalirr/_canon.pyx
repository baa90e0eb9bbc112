# cython: boundscheck=False, wraparound=False, cdivision=True, language_level=3
"""Compiled canonical-form kernel; bit-identical twin of ``_canon_py``.

See the pure-Python module for the algorithm description.  This version
keeps everything in fixed-size C arrays (n <= 12) and releases the GIL in
the batch entry point so enumeration can use worker threads.
"""

from cpython.bytes cimport PyBytes_FromStringAndSize

BACKEND_NAME = "cython"

DEF MAXN = 12
DEF INF = 16384
DEF CERT_BYTES = 9  # ceil(12 * 11 / 2 / 8)


cdef void _stable_colors(int n, const unsigned short *rows, int *colors) noexcept nogil:
    cdef long long pow13[14]
    cdef long long sigs[MAXN]
    cdef long long uniq[MAXN]
    cdef int degs[MAXN]
    cdef int v, u, i, j, w, ncolors, nuniq, prev
    cdef long long s

    pow13[0] = 1
    for i in range(1, 14):
        pow13[i] = pow13[i - 1] * 13

    for v in range(n):
        w = rows[v]
        degs[v] = 0
        while w:
            degs[v] += 1
            w &= w - 1

    # initial colors: rank of degree among sorted distinct degrees
    nuniq = 0
    for v in range(n):
        s = degs[v]
        i = 0
        while i < nuniq and uniq[i] < s:
            i += 1
        if i == nuniq or uniq[i] != s:
            for j in range(nuniq, i, -1):
                uniq[j] = uniq[j - 1]
            uniq[i] = s
            nuniq += 1
    for v in range(n):
        for i in range(nuniq):
            if uniq[i] == degs[v]:
                colors[v] = i
                break
    ncolors = nuniq

    while True:
        for v in range(n):
            s = colors[v] * pow13[13]
            w = rows[v]
            while w:
                u = 0
                while not (w >> u) & 1:
                    u += 1
                s += pow13[colors[u]]
                w &= w - 1
            sigs[v] = s
        nuniq = 0
        for v in range(n):
            s = sigs[v]
            i = 0
            while i < nuniq and uniq[i] < s:
                i += 1
            if i == nuniq or uniq[i] != s:
                for j in range(nuniq, i, -1):
                    uniq[j] = uniq[j - 1]
                uniq[i] = s
                nuniq += 1
        prev = ncolors
        for v in range(n):
            for i in range(nuniq):
                if uniq[i] == sigs[v]:
                    colors[v] = i
                    break
        ncolors = nuniq
        if ncolors == prev:
            return


cdef void _rec(
    int n,
    const unsigned short *rows,
    int k,
    unsigned short used,
    int *colors,   # colors for this depth (length n)
    int *vals,     # vals for this depth (length n)
    int *best,
    int *colors_buf,  # (MAXN+1) * MAXN scratch, depth-indexed
    int *vals_buf,
) noexcept nogil:
    cdef int cnt[MAXN]
    cdef int cand[MAXN]
    cdef int tried[MAXN]
    cdef int rank_of[2 * MAXN]
    cdef int cnt2[2 * MAXN]
    cdef int v, u, w, i, j, c, ncand, ntried, best_color, best_size
    cdef int key, nkeys, rank, bit, tw
    cdef int *ncolors
    cdef int *nvals
    cdef unsigned short pairmask

    if k == n:
        return

    for c in range(n):
        cnt[c] = 0
    for v in range(n):
        if not (used >> v) & 1:
            cnt[colors[v]] += 1
    best_color = -1
    best_size = n + 1
    for c in range(n):
        if cnt[c] and cnt[c] < best_size:
            best_size = cnt[c]
            best_color = c

    ncand = 0
    for v in range(n):
        if not (used >> v) & 1 and colors[v] == best_color:
            cand[ncand] = v
            ncand += 1
    # insertion sort by (vals, vertex); vertex order is the tie-break
    for i in range(1, ncand):
        v = cand[i]
        j = i - 1
        while j >= 0 and vals[cand[j]] > vals[v]:
            cand[j + 1] = cand[j]
            j -= 1
        cand[j + 1] = v

    ncolors = colors_buf + (k + 1) * MAXN
    nvals = vals_buf + (k + 1) * MAXN
    ntried = 0
    for i in range(ncand):
        v = cand[i]
        if k >= 1 and vals[v] > best[k]:
            break
        tw = 0
        for j in range(ntried):
            u = tried[j]
            pairmask = <unsigned short> ~((1 << u) | (1 << v))
            if (rows[u] & pairmask) == (rows[v] & pairmask):
                tw = 1
                break
        if tw:
            continue
        if k >= 1 and vals[v] < best[k]:
            best[k] = vals[v]
            for j in range(k + 1, n):
                best[j] = INF
        for w in range(n):
            if not (used >> w) & 1 and w != v:
                nvals[w] = (vals[w] << 1) | ((rows[v] >> w) & 1)
        # split classes by adjacency to v; rank by (size, old color, bit)
        for j in range(2 * n):
            cnt2[j] = 0
        for w in range(n):
            if not (used >> w) & 1 and w != v:
                cnt2[colors[w] * 2 + ((rows[v] >> w) & 1)] += 1
        nkeys = 0
        for j in range(2 * n):
            if cnt2[j]:
                nkeys += 1
        rank = 0
        while rank < nkeys:
            # next smallest (count, key) not yet ranked
            key = -1
            for j in range(2 * n):
                if cnt2[j] > 0 and (
                    key == -1
                    or cnt2[j] < cnt2[key]
                    or (cnt2[j] == cnt2[key] and j < key)
                ):
                    key = j
            rank_of[key] = rank
            cnt2[key] = -cnt2[key]  # mark ranked
            rank += 1
        for w in range(n):
            if not (used >> w) & 1 and w != v:
                ncolors[w] = rank_of[colors[w] * 2 + ((rows[v] >> w) & 1)]
        _rec(
            n,
            rows,
            k + 1,
            used | <unsigned short> (1 << v),
            ncolors,
            nvals,
            best,
            colors_buf,
            vals_buf,
        )
        tried[ntried] = v
        ntried += 1


cdef void _one(int n, const unsigned short *rows, unsigned char *out) noexcept nogil:
    cdef int best[MAXN]
    cdef int colors_buf[(MAXN + 1) * MAXN]
    cdef int vals_buf[(MAXN + 1) * MAXN]
    cdef int k, j, nbits, nbytes, bitpos
    cdef unsigned char cur

    _stable_colors(n, rows, colors_buf)
    for k in range(n):
        best[k] = INF
        vals_buf[k] = 0
    _rec(n, rows, 0, 0, colors_buf, vals_buf, best, colors_buf, vals_buf)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 7) // 8
    for j in range(nbytes):
        out[j] = 0
    bitpos = 0
    for k in range(1, n):
        for j in range(k - 1, -1, -1):
            if (best[k] >> j) & 1:
                out[bitpos >> 3] |= <unsigned char> (1 << (7 - (bitpos & 7)))
            bitpos += 1


def certificate(int n, rows):
    """Canonical certificate of the graph given as adjacency bitsets."""
    cdef unsigned short crows[MAXN]
    cdef unsigned char out[CERT_BYTES]
    cdef int i
    if n > MAXN:
        raise ValueError(f"canonical form supports at most {MAXN} vertices")
    if n <= 1:
        return b""
    for i in range(n):
        crows[i] = rows[i]
    _one(n, crows, out)
    return PyBytes_FromStringAndSize(<char *> out, (n * (n - 1) // 2 + 7) // 8)


def certificates(int n, rows_flat, int count):
    """Batch variant: ``rows_flat`` holds ``count`` groups of ``n`` bitsets."""
    cdef const unsigned short[::1] flat
    cdef unsigned char[::1] ob
    cdef int g, cert_len
    if n > MAXN:
        raise ValueError(f"canonical form supports at most {MAXN} vertices")
    if count == 0:
        return []
    if n <= 1:
        return [b""] * count
    flat = rows_flat
    cert_len = (n * (n - 1) // 2 + 7) // 8
    buf = bytearray(count * cert_len)
    ob = buf
    with nogil:
        for g in range(count):
            _one(n, &flat[g * n], &ob[g * cert_len])
    return [bytes(buf[g * cert_len : (g + 1) * cert_len]) for g in range(count)]
