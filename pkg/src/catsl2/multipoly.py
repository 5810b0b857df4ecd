"""Commutative polynomials over Q in a fixed number of variables.

Each variable carries a weight; the (doubled) degree of a monomial is
``2 * sum(weight_i * exponent_i)``.  Polynomial variables x_i have weight 1,
Chern classes c_i have weight i.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations

from . import kernels
from .qscalar import _clean


class MultiPoly:
    __slots__ = ("nvars", "terms", "var", "weights")

    def __init__(self, nvars, terms=None, var="x", weights=None):
        self.nvars = nvars
        self.var = var
        self.weights = tuple(weights) if weights is not None else (1,) * nvars
        clean = {}
        if terms:
            for e, c in dict(terms).items():
                if c:
                    e = tuple(e)
                    if len(e) != nvars:
                        raise ValueError(f"exponent {e} has wrong length for {nvars} variables")
                    clean[e] = _clean(c)
        self.terms = clean

    def _new(self, terms):
        obj = MultiPoly.__new__(MultiPoly)
        obj.nvars = self.nvars
        obj.var = self.var
        obj.weights = self.weights
        obj.terms = {e: _clean(c) for e, c in terms.items() if c}
        return obj

    # constructors ----------------------------------------------------------
    @classmethod
    def const(cls, nvars, c=1, **kw):
        return cls(nvars, {(0,) * nvars: c}, **kw)

    @classmethod
    def gen(cls, nvars, i, **kw):
        """The i-th variable, 1-based."""
        if not 1 <= i <= nvars:
            raise ValueError(f"variable index {i} out of range 1..{nvars}")
        e = [0] * nvars
        e[i - 1] = 1
        return cls(nvars, {tuple(e): 1}, **kw)

    @classmethod
    def monomial(cls, exps, c=1, **kw):
        return cls(len(exps), {tuple(exps): c}, **kw)

    def like(self, terms):
        return self._new(dict(terms))

    def zero(self):
        return self._new({})

    def one(self):
        return self._new({(0,) * self.nvars: 1})

    # ring structure --------------------------------------------------------
    def _check(self, other):
        if isinstance(other, MultiPoly):
            if other.nvars != self.nvars:
                raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
            return other
        return self.const(self.nvars, other, var=self.var, weights=self.weights)

    def __add__(self, other):
        other = self._check(other)
        return self._new(kernels.poly_add_scaled(dict(self.terms), other.terms, 1))

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = self._check(other)
        return self._new(kernels.poly_add_scaled(dict(self.terms), other.terms, -1))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            self._check(other)
            return self._new(kernels.poly_mul(self.terms, other.terms))
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c):
        if not c:
            return self.zero()
        return self._new({e: v * c for e, v in self.terms.items()})

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = self.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, MultiPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            if not other:
                return not self.terms
            return self.terms == {(0,) * self.nvars: other}
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    # gradings --------------------------------------------------------------
    def mono_degree(self, e):
        return 2 * sum(w * x for w, x in zip(self.weights, e))

    def degree(self):
        if not self.terms:
            raise ValueError("degree of zero polynomial")
        return max(self.mono_degree(e) for e in self.terms)

    def is_homogeneous(self):
        return len({self.mono_degree(e) for e in self.terms}) <= 1

    def homogeneous_part(self, d):
        return self._new({e: c for e, c in self.terms.items() if self.mono_degree(e) == d})

    # symmetric group action ------------------------------------------------
    def swap(self, i):
        """s_i f: exchange x_i and x_{i+1} (1-based)."""
        if not 1 <= i < self.nvars:
            raise ValueError(f"index {i} out of range 1..{self.nvars - 1}")
        return self._new(kernels.poly_swap(self.terms, i - 1))

    def permute(self, perm):
        """Substitute x_j -> x_{perm[j-1]} for a one-line permutation."""
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for j, x in enumerate(e):
                ne[perm[j] - 1] = x
            out[tuple(ne)] = c
        return self._new(out)

    def is_symmetric(self):
        return all(self.swap(i) == self for i in range(1, self.nvars))

    def divided_difference(self, i):
        if not 1 <= i < self.nvars:
            raise ValueError(f"divided difference index {i} out of range 1..{self.nvars - 1}")
        return self._new(kernels.divided_difference(self.terms, i - 1))

    def substitute(self, images, target):
        """Ring map sending variable i to images[i-1] (MultiPolys in ``target``)."""
        out = target.zero()
        cache = {}
        for e, c in self.terms.items():
            term = target.one().scale(c)
            for i, x in enumerate(e):
                if x:
                    key = (i, x)
                    if key not in cache:
                        cache[key] = images[i] ** x
                    term = term * cache[key]
            out = out + term
        return out

    # display ---------------------------------------------------------------
    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (-self.mono_degree(t[0]), tuple(-x for x in t[0])))

    def __str__(self):
        return format_multipoly(self)

    def __repr__(self):
        return f"MultiPoly({self.nvars}, {format_multipoly(self)!r})"


def format_monomial(e, var):
    parts = []
    for i, x in enumerate(e, start=1):
        if x == 1:
            parts.append(f"{var}{i}")
        elif x:
            parts.append(f"{var}{i}^{x}")
    return "*".join(parts)


def format_multipoly(p):
    if not p.terms:
        return "0"
    out = ""
    for idx, (e, c) in enumerate(p.sorted_terms()):
        mono = format_monomial(e, p.var)
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


def all_permutations(n):
    return list(permutations(range(1, n + 1)))
