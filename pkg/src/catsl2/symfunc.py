"""Symmetric functions in the elementary basis.

A partition is a weakly decreasing tuple of positive ints; as a key of a
``SymFunc`` the partition ``lam`` stands for e_lam = e_{lam_1} e_{lam_2} ...
Degrees are doubled: deg e_r = 2r.  Complete and Schur functions are
computed into this basis on demand.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .multipoly import MultiPoly
from .qscalar import _clean


def partition(parts):
    """Normalize an iterable of positive ints to a partition tuple."""
    parts = tuple(sorted((int(p) for p in parts), reverse=True))
    if parts and parts[-1] <= 0:
        raise ValueError(f"partition parts must be positive: {parts}")
    return parts


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > i) for i in range(lam[0]))


def partitions(n, max_part=None, max_len=None):
    """All partitions of n, optionally bounded in part size and length."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rest, bound, slots):
        if rest == 0:
            yield ()
            return
        if slots == 0:
            return
        for p in range(min(rest, bound), 0, -1):
            for tail in rec(rest - p, p, slots - 1):
                yield (p,) + tail

    return list(rec(n, max_part, max_len))


def merge(lam, mu):
    return tuple(sorted(lam + mu, reverse=True))


class SymFunc:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for lam, c in dict(terms).items():
                if c:
                    clean[partition(lam)] = _clean(c)
        self.terms = clean

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def one(cls):
        return cls._raw({(): 1})

    @classmethod
    def zero(cls):
        return cls._raw({})

    @classmethod
    def e(cls, r):
        """e_r, with e_0 = 1 and e_r = 0 for r < 0."""
        if r < 0:
            return cls.zero()
        if r == 0:
            return cls.one()
        return cls._raw({(r,): 1})

    @classmethod
    def coerce(cls, x):
        if isinstance(x, SymFunc):
            return x
        if isinstance(x, (int, Fraction)):
            return cls._raw({(): _clean(x)} if x else {})
        raise TypeError(f"cannot coerce {x!r} to SymFunc")

    def __add__(self, other):
        try:
            other = SymFunc.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self.terms)
        for lam, c in other.terms.items():
            v = out.get(lam, 0) + c
            if v:
                out[lam] = _clean(v)
            else:
                out.pop(lam, None)
        return SymFunc._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return SymFunc._raw({lam: -c for lam, c in self.terms.items()})

    def __sub__(self, other):
        try:
            other = SymFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return SymFunc.coerce(other) - self

    def __mul__(self, other):
        try:
            other = SymFunc.coerce(other)
        except TypeError:
            return NotImplemented
        out = {}
        for l1, c1 in self.terms.items():
            for l2, c2 in other.terms.items():
                lam = merge(l1, l2)
                out[lam] = out.get(lam, 0) + c1 * c2
        return SymFunc._raw({lam: _clean(c) for lam, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        out = SymFunc.one()
        for _ in range(k):
            out = out * self
        return out

    def scale(self, c):
        return SymFunc._raw({lam: _clean(v * c) for lam, v in self.terms.items() if v * c})

    def truncate(self, a):
        """Image in Lambda_a: drop every e_lam with a part larger than a."""
        return SymFunc._raw({lam: c for lam, c in self.terms.items() if not lam or lam[0] <= a})

    def coeff(self, lam):
        return self.terms.get(partition(lam), 0)

    def is_zero(self):
        return not self.terms

    def degrees(self):
        return {2 * sum(lam) for lam in self.terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def __eq__(self, other):
        try:
            other = SymFunc.coerce(other)
        except TypeError:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (-sum(t[0]), tuple(-p for p in t[0])))

    def __str__(self):
        return format_symfunc(self)

    def __repr__(self):
        return f"SymFunc({format_symfunc(self)!r})"


def format_symfunc(f):
    if not f.terms:
        return "0"
    out = ""
    for idx, (lam, c) in enumerate(f.sorted_terms()):
        mono = "*".join(f"e{p}" for p in lam)
        neg = c < 0
        mag = -c if neg else c
        if not mono:
            body = str(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{mag}*{mono}"
        if idx == 0:
            out = ("-" if neg else "") + body
        else:
            out += (" - " if neg else " + ") + body
    return out


def sf_multiply(a, b):
    return a * b


@lru_cache(maxsize=None)
def h_in_e(r):
    """Complete symmetric function h_r in the e-basis.

    h_r = sum_{l=1}^{r} (-1)^(l+1) e_l h_{r-l}, h_0 = 1, h_r = 0 for r < 0.
    """
    if r < 0:
        return SymFunc.zero()
    if r == 0:
        return SymFunc.one()
    out = SymFunc.zero()
    for l in range(1, r + 1):
        term = SymFunc.e(l) * h_in_e(r - l)
        out = out + term if l % 2 else out - term
    return out


def determinant(matrix):
    """Cofactor expansion along the first row over a commutative ring."""
    n = len(matrix)
    if n == 0:
        return SymFunc.one()
    memo = {}

    def det(row, cols):
        if row == n:
            return SymFunc.one()
        key = (row, cols)
        if key in memo:
            return memo[key]
        total = SymFunc.zero()
        sign = 1
        for j in range(n):
            if cols & (1 << j):
                continue
            entry = matrix[row][j]
            if entry:
                minor = det(row + 1, cols | (1 << j))
                total = total + entry * minor if sign > 0 else total - entry * minor
            sign = -sign
        memo[key] = total
        return total

    return det(0, 0)


@lru_cache(maxsize=None)
def _jt(lam, basis):
    if basis == "h":
        gen, parts = h_in_e, lam
    elif basis == "e":
        gen, parts = SymFunc.e, conjugate(lam)
    else:
        raise ValueError(f"basis must be 'e' or 'h', got {basis!r}")
    n = len(parts)
    matrix = [[gen(parts[i] + j - i) for j in range(n)] for i in range(n)]
    return determinant(matrix)


def schur_jacobi_trudi(lam, basis="e"):
    """Schur function s_lam in the e-basis via a Jacobi-Trudi determinant.

    basis='h' uses det(h_{lam_i+j-i}); basis='e' uses det(e_{lam'_i+j-i})
    with lam' the conjugate partition.
    """
    return _jt(partition(lam), basis)


@lru_cache(maxsize=None)
def elementary_poly(r, a):
    """e_r(x_1, ..., x_a) as a MultiPoly."""
    if r < 0 or r > a:
        return MultiPoly(a)
    if r == 0:
        return MultiPoly.const(a)
    # e_r(x_1..x_a) = e_r(x_1..x_{a-1}) + x_a e_{r-1}(x_1..x_{a-1})
    lower_r = elementary_poly(r, a - 1)
    lower_r1 = elementary_poly(r - 1, a - 1)
    terms = {e + (0,): c for e, c in lower_r.terms.items()}
    for e, c in lower_r1.terms.items():
        key = e + (1,)
        terms[key] = terms.get(key, 0) + c
    return MultiPoly(a, terms)


def evaluate_in_vars(f, a):
    """Substitute e_r -> e_r(x_1..x_a) (zero when r > a)."""
    out = MultiPoly(a)
    for lam, c in f.terms.items():
        term = MultiPoly.const(a, c)
        for p in lam:
            if p > a:
                term = MultiPoly(a)
                break
            term = term * elementary_poly(p, a)
        out = out + term
    return out
