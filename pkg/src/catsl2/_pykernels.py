"""Pure-Python versions of the hot loops.

Polynomials are plain dicts ``{exponent tuple: coefficient}``.  Sparse rows
for exact elimination are dicts ``{column: int}`` kept primitive, with the
pivot (smallest column) positive.  ``_ckernels.pyx`` mirrors this file
function for function; ``kernels`` picks one at import.
"""

from heapq import heapify, heappop, heappush
from math import gcd

BACKEND = "python"


def poly_mul(a, b):
    out = {}
    get = out.get
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple([x + y for x, y in zip(ea, eb)])
            out[e] = get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def poly_add_scaled(acc, b, scale):
    """acc += scale * b, in place; returns acc."""
    for e, c in b.items():
        v = acc.get(e, 0) + scale * c
        if v:
            acc[e] = v
        else:
            acc.pop(e, None)
    return acc


def poly_swap(a, i):
    """Apply the transposition of variables i, i+1 (0-based)."""
    out = {}
    for e, c in a.items():
        e = list(e)
        e[i], e[i + 1] = e[i + 1], e[i]
        out[tuple(e)] = c
    return out


def divided_difference(a, i):
    """(f - s_i f)/(x_i - x_{i+1}) on a dict polynomial, i 0-based.

    Uses the closed form for a monomial x_i^p x_{i+1}^r:
    p > r gives sum_{k<p-r} x_i^(p-1-k) x_{i+1}^(r+k), p < r the negated
    mirror, p == r zero.
    """
    out = {}
    get = out.get
    for e, c in a.items():
        p = e[i]
        r = e[i + 1]
        if p == r:
            continue
        base = list(e)
        if p > r:
            sign = c
            lo, hi = r, p
        else:
            sign = -c
            lo, hi = p, r
        for k in range(hi - lo):
            base[i] = hi - 1 - k
            base[i + 1] = lo + k
            if p < r:
                base[i], base[i + 1] = base[i + 1], base[i]
            key = tuple(base)
            out[key] = get(key, 0) + sign
    return {e: c for e, c in out.items() if c}


def _normalize_row(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g != 1:
        row = {k: v // g for k, v in row.items()}
    return row


def reduce_row(pivots, row):
    """Reduce an integer row against ``{pivot column: row}``.

    Every stored pivot row has its pivot as smallest column, so eliminating
    column c only introduces columns larger than c.  A heap yields the next
    pivot column to clear.
    """
    if not row:
        return row
    row = dict(row)
    heap = [c for c in row if c in pivots]
    heapify(heap)
    while heap:
        c = heappop(heap)
        rc = row.get(c)
        if not rc:
            continue
        prow = pivots[c]
        lp = prow[c]
        g = gcd(lp, rc)
        mr = lp // g
        mp = rc // g
        if mr != 1:
            for k in row:
                row[k] *= mr
        for k, v in prow.items():
            old = row.get(k)
            if old is None:
                row[k] = -mp * v
                if k in pivots:
                    heappush(heap, k)
            else:
                nv = old - mp * v
                if nv:
                    row[k] = nv
                else:
                    del row[k]
        if row and mr != 1:
            row = _normalize_row(row)
    return row


def insert_row(pivots, row):
    """Reduce and, if nonzero, add as a new pivot; return True if rank grew."""
    row = reduce_row(pivots, row)
    if not row:
        return False
    row = _normalize_row(row)
    pivots[min(row)] = row
    return True


def rank(rows):
    pivots = {}
    r = 0
    for row in rows:
        if insert_row(pivots, row):
            r += 1
    return r


def insert_row_mod(pivots, row, p):
    """Modular elimination: rows are {column: residue}, pivots monic.

    A full rank found mod p certifies full rank over Q, since reduction mod
    p can only lower the rank.
    """
    row = {k: v % p for k, v in row.items() if v % p}
    heap = [c for c in row if c in pivots]
    heapify(heap)
    while heap:
        c = heappop(heap)
        f = row.get(c)
        if not f:
            continue
        for k, v in pivots[c].items():
            old = row.get(k)
            if old is None:
                row[k] = -f * v % p
                if k in pivots:
                    heappush(heap, k)
            else:
                nv = (old - f * v) % p
                if nv:
                    row[k] = nv
                else:
                    del row[k]
    if not row:
        return False
    lead = min(row)
    inv = pow(row[lead], -1, p)
    pivots[lead] = {k: v * inv % p for k, v in row.items()}
    return True
