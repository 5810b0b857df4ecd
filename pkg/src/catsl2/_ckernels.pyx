# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the hot loops; same contracts as ``_pykernels``."""

from heapq import heapify, heappop, heappush
from math import gcd

BACKEND = "cython"


def poly_mul(dict a, dict b):
    cdef dict out = {}
    cdef tuple ea, eb, e
    cdef Py_ssize_t n, j
    cdef list buf
    for ea, ca in a.items():
        n = len(ea)
        for eb, cb in b.items():
            buf = [0] * n
            for j in range(n):
                buf[j] = <long>ea[j] + <long>eb[j]
            e = tuple(buf)
            v = out.get(e)
            if v is None:
                out[e] = ca * cb
            else:
                out[e] = v + ca * cb
    return {e: c for e, c in out.items() if c}


def poly_add_scaled(dict acc, dict b, scale):
    for e, c in b.items():
        v = acc.get(e, 0) + scale * c
        if v:
            acc[e] = v
        else:
            acc.pop(e, None)
    return acc


def poly_swap(dict a, Py_ssize_t i):
    cdef dict out = {}
    cdef list e
    for key, c in a.items():
        e = list(key)
        e[i], e[i + 1] = e[i + 1], e[i]
        out[tuple(e)] = c
    return out


def divided_difference(dict a, Py_ssize_t i):
    cdef dict out = {}
    cdef long p, r, lo, hi, k
    cdef list base
    cdef tuple key
    for e, c in a.items():
        p = e[i]
        r = e[i + 1]
        if p == r:
            continue
        base = list(e)
        if p > r:
            sign = c
            lo = r
            hi = p
        else:
            sign = -c
            lo = p
            hi = r
        for k in range(hi - lo):
            if p > r:
                base[i] = hi - 1 - k
                base[i + 1] = lo + k
            else:
                base[i] = lo + k
                base[i + 1] = hi - 1 - k
            key = tuple(base)
            v = out.get(key)
            out[key] = sign if v is None else v + sign
    return {e: c for e, c in out.items() if c}


cdef dict _normalize_row(dict row):
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


def reduce_row(dict pivots, dict row):
    if not row:
        return row
    row = dict(row)
    cdef list heap = [c for c in row if c in pivots]
    cdef dict prow
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
                row[k] = row[k] * mr
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


def insert_row(dict pivots, dict row):
    row = reduce_row(pivots, row)
    if not row:
        return False
    row = _normalize_row(row)
    pivots[min(row)] = row
    return True


def rank(rows):
    cdef dict pivots = {}
    cdef long r = 0
    for row in rows:
        if insert_row(pivots, row):
            r += 1
    return r


def insert_row_mod(dict pivots, dict row, long long p):
    cdef long long f, v, nv, inv
    cdef list heap
    cdef dict prow
    row = {kk: vv % p for kk, vv in row.items() if vv % p}
    heap = [c for c in row if c in pivots]
    heapify(heap)
    while heap:
        c = heappop(heap)
        if c not in row:
            continue
        f = row[c]
        prow = pivots[c]
        for k, v in prow.items():
            old = row.get(k)
            if old is None:
                nv = (-f * v) % p
                if nv < 0:
                    nv += p
                row[k] = nv
                if k in pivots:
                    heappush(heap, k)
            else:
                nv = (<long long>old - f * v) % p
                if nv < 0:
                    nv += p
                if nv:
                    row[k] = nv
                else:
                    del row[k]
    if not row:
        return False
    lead = min(row)
    inv = pow(row[lead], -1, p)
    pivots[lead] = {kk: (vv * inv) % p for kk, vv in row.items()}
    return True
