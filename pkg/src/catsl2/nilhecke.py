"""The nilHecke algebra NH_a and its matrix realization.

Elements are kept as sums f_w(xi) d_w with polynomials on the left.  The
polynomial ring P_a is free over the symmetric polynomials with the
staircase monomials x^alpha (alpha_i <= a - i) as basis; writing the action
of NH_a in that basis gives theta: NH_a -> Mat(a!, Lambda_a).

Permutations are one-line tuples on 1..a, composed as (uv)(i) = u(v(i)).
d_w is the product of d_i along the lexicographically smallest reduced
word of w.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import factorial

from .multipoly import MultiPoly
from .symfunc import SymFunc, evaluate_in_vars, format_symfunc

DEFAULT_MAX_STRANDS = 4


class Permutation(tuple):
    """One-line notation; ``Permutation((2, 1, 3))`` is s_1 in S_3."""

    def __new__(cls, images):
        images = tuple(int(v) for v in images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def identity(cls, a):
        return cls(range(1, a + 1))

    @classmethod
    def simple(cls, i, a):
        if not 1 <= i < a:
            raise ValueError(f"simple transposition s_{i} not in S_{a}")
        img = list(range(1, a + 1))
        img[i - 1], img[i] = img[i], img[i - 1]
        return cls(img)

    @classmethod
    def longest(cls, a):
        return cls(range(a, 0, -1))

    @property
    def size(self):
        return len(self)

    def length(self):
        return _length(tuple(self))

    def compose(self, other):
        """(self * other)(i) = self(other(i))."""
        return Permutation(self[other[i] - 1] for i in range(len(self)))

    def left_simple(self, i):
        """s_i * self: exchange the values i and i+1."""
        return Permutation(i + 1 if v == i else i if v == i + 1 else v for v in self)

    def has_left_descent(self, i):
        return self.index(i) > self.index(i + 1)

    def reduced_word(self):
        return _reduced_word(tuple(self))

    def __repr__(self):
        return f"Permutation({tuple(self)})"


@lru_cache(maxsize=None)
def _length(images):
    n = len(images)
    return sum(1 for i in range(n) for j in range(i + 1, n) if images[i] > images[j])


@lru_cache(maxsize=None)
def _reduced_word(images):
    w = Permutation(images)
    for i in range(1, len(w)):
        if w.has_left_descent(i):
            return (i,) + _reduced_word(tuple(w.left_simple(i)))
    return ()


def permutation_from_word(word, a):
    w = Permutation.identity(a)
    for i in reversed(word):
        w = w.left_simple(i)
    return w


# --------------------------------------------------------------------------

def _poly(a, terms):
    return MultiPoly(a, terms)


class NilHeckeElt:
    """Sum over permutations w of f_w(xi) * d_w."""

    __slots__ = ("a", "terms")

    def __init__(self, a, terms=None):
        self.a = a
        clean = {}
        if terms:
            for w, f in dict(terms).items():
                w = Permutation(w)
                if len(w) != a:
                    raise ValueError(f"permutation {w} is not in S_{a}")
                if not isinstance(f, MultiPoly):
                    f = MultiPoly.const(a, f)
                if f.nvars != a:
                    raise ValueError("coefficient polynomial has the wrong number of variables")
                if f:
                    clean[w] = clean[w] + f if w in clean else f
        self.terms = {w: f for w, f in clean.items() if f}

    @classmethod
    def one(cls, a):
        return cls(a, {Permutation.identity(a): MultiPoly.const(a)})

    @classmethod
    def zero(cls, a):
        return cls(a)

    @classmethod
    def xi(cls, i, a):
        return cls(a, {Permutation.identity(a): MultiPoly.gen(a, i)})

    @classmethod
    def d(cls, i, a):
        return cls(a, {Permutation.simple(i, a): MultiPoly.const(a)})

    @classmethod
    def d_w(cls, w):
        w = Permutation(w)
        return cls(len(w), {w: MultiPoly.const(len(w))})

    @classmethod
    def poly(cls, f):
        return cls(f.nvars, {Permutation.identity(f.nvars): f})

    def _check(self, other):
        if isinstance(other, NilHeckeElt):
            if other.a != self.a:
                raise ValueError(f"strand count mismatch: {self.a} vs {other.a}")
            return other
        if isinstance(other, MultiPoly):
            return NilHeckeElt.poly(other)
        return NilHeckeElt(self.a, {Permutation.identity(self.a): MultiPoly.const(self.a, other)})

    def __add__(self, other):
        other = self._check(other)
        terms = dict(self.terms)
        for w, f in other.terms.items():
            terms[w] = terms[w] + f if w in terms else f
        return NilHeckeElt(self.a, terms)

    __radd__ = __add__

    def __neg__(self):
        return NilHeckeElt(self.a, {w: -f for w, f in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if isinstance(other, (NilHeckeElt, MultiPoly)):
            return nh_multiply(self, self._check(other))
        return NilHeckeElt(self.a, {w: f.scale(other) for w, f in self.terms.items()})

    def __rmul__(self, other):
        if isinstance(other, MultiPoly):
            return nh_multiply(self._check(other), self)
        return NilHeckeElt(self.a, {w: f.scale(other) for w, f in self.terms.items()})

    def __pow__(self, k):
        out = NilHeckeElt.one(self.a)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NilHeckeElt):
            return self.a == other.a and self.terms == other.terms
        if isinstance(other, int):
            return self == self._check(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.a, frozenset(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def degrees(self):
        return {f.mono_degree(e) - 2 * w.length() for w, f in self.terms.items() for e in f.terms}

    def is_homogeneous(self):
        return len(self.degrees()) <= 1

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (t[0].length(), tuple(t[0])))

    def __str__(self):
        return format_nh(self)

    def __repr__(self):
        return f"NilHeckeElt({self.a}, {format_nh(self)!r})"


def format_d(w):
    word = w.reduced_word()
    return "*".join(f"d{i}" for i in word)


def format_nh(x):
    if not x.terms:
        return "0"
    pieces = []
    for w, f in x.sorted_terms():
        dw = format_d(w)
        ptxt = str(f)
        if not dw:
            pieces.append(ptxt if len(f.terms) == 1 else f"({ptxt})")
        elif f == 1:
            pieces.append(dw)
        elif f == -1:
            pieces.append(f"-{dw}")
        elif len(f.terms) == 1:
            pieces.append(f"{ptxt}*{dw}")
        else:
            pieces.append(f"({ptxt})*{dw}")
    out = pieces[0]
    for p in pieces[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


# --------------------------------------------------------------------------
# multiplication

def _d_times_d(u, v):
    """d_u d_v as (permutation or None)."""
    uv = u.compose(v)
    if uv.length() == u.length() + v.length():
        return uv
    return None


@lru_cache(maxsize=None)
def _push(u, exps):
    """d_u * x^exps rewritten as ((w, {exp: coeff}), ...) with polynomials left."""
    a = len(exps)
    if u.length() == 0:
        return ((u, {tuple(exps): 1}),)
    i = u.reduced_word()[0]
    rest = u.left_simple(i)
    inner = _push(rest, exps)
    out = {}
    si = Permutation.simple(i, a)
    for w, h in inner:
        hp = MultiPoly(a, h)
        sw = _d_times_d(si, w)
        if sw is not None:
            acc = out.setdefault(sw, MultiPoly(a))
            out[sw] = acc + hp.swap(i)
        dh = hp.divided_difference(i)
        if dh:
            out[w] = out.get(w, MultiPoly(a)) + dh
    return tuple((w, f.terms) for w, f in out.items() if f)


def push_through(u, g):
    """d_u * g for a polynomial g, returned as {w: polynomial}."""
    a = g.nvars
    out = {}
    for e, c in g.terms.items():
        for w, h in _push(u, e):
            hp = MultiPoly(a, h).scale(c)
            out[w] = out[w] + hp if w in out else hp
    return out


def nh_multiply(x, y):
    if x.a != y.a:
        raise ValueError(f"strand count mismatch: {x.a} vs {y.a}")
    a = x.a
    out = {}
    for u, f in x.terms.items():
        for v, g in y.terms.items():
            for w, h in push_through(u, g).items():
                wv = _d_times_d(w, v)
                if wv is None:
                    continue
                term = f * h
                out[wv] = out[wv] + term if wv in out else term
    return NilHeckeElt(a, out)


def apply_d(w, f):
    """d_w(f): apply the reduced word right to left."""
    for i in reversed(w.reduced_word()):
        f = f.divided_difference(i)
        if not f:
            break
    return f


def nh_act(x, f):
    if x.a != f.nvars:
        raise ValueError(f"strand count mismatch: {x.a} vs {f.nvars}")
    out = MultiPoly(x.a)
    for w, g in x.terms.items():
        out = out + g * apply_d(w, f)
    return out


def divided_difference(i, f):
    return f.divided_difference(i)


def delta(a):
    """delta_a = x_1^(a-1) x_2^(a-2) ... x_(a-1)."""
    return MultiPoly.monomial(tuple(a - i for i in range(1, a + 1)))


def nh_e_idempotent(a):
    if a < 1:
        raise ValueError("need a >= 1")
    return NilHeckeElt(a, {Permutation.longest(a): delta(a)})


# --------------------------------------------------------------------------
# staircase basis

def staircase_exponents(a):
    """Ordered staircase basis: blocks by ascending (alpha_2..alpha_a),
    inside a block x_1^(a-1), ..., x_1, 1."""
    tails = sorted(product(*[range(a - i + 1) for i in range(2, a + 1)]))
    return [(m,) + tail for tail in tails for m in range(a - 1, -1, -1)]


def _xpoly_add(p, q):
    out = dict(p)
    for m, c in q.items():
        v = out[m] + c if m in out else c
        if v:
            out[m] = v
        else:
            out.pop(m, None)
    return out


def _xpoly_mul(p, q):
    out = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            v = c1 * c2
            if v:
                out = _xpoly_add(out, {m1 + m2: v})
    return out


@lru_cache(maxsize=None)
def _eprime(r):
    """e_r(x_2..x_a) = sum_s (-1)^s x_1^s e_{r-s}(x_1..x_a), as {s: SymFunc}."""
    return {s: SymFunc.e(r - s).scale(-1 if s % 2 else 1) for s in range(r + 1)}


@lru_cache(maxsize=None)
def _stair_mono(exps):
    a = len(exps)
    if a == 0:
        return {(): SymFunc.one()}
    k = exps[0]
    sub = _stair_mono(exps[1:])
    out = {}
    for beta, coeff in sub.items():
        # rewrite coeff(e(x_2..)) as a polynomial in x_1 over Lambda_a
        xp = {}
        for lam, c in coeff.terms.items():
            term = {k: SymFunc.coerce(c)}
            for r in lam:
                term = _xpoly_mul(term, _eprime(r))
            xp = _xpoly_add(xp, term)
        # x_1^a = sum_{j=1}^{a} (-1)^(j+1) x_1^(a-j) e_j
        while xp and max(xp) >= a:
            m = max(xp)
            g = xp.pop(m)
            for j in range(1, a + 1):
                t = SymFunc.e(j) * g
                xp = _xpoly_add(xp, {m - j: t if j % 2 else -t})
        for m, c in xp.items():
            c = c.truncate(a)
            if c:
                out[(m,) + beta] = c
    return out


def staircase_decompose(f):
    """f = sum_alpha c_alpha(e) x^alpha with c_alpha in Lambda_a."""
    out = {}
    for e, c in f.terms.items():
        for alpha, s in _stair_mono(tuple(e)).items():
            v = out[alpha] + s.scale(c) if alpha in out else s.scale(c)
            if v:
                out[alpha] = v
            else:
                out.pop(alpha, None)
    return out


def staircase_recombine(decomp, a):
    out = MultiPoly(a)
    for alpha, c in decomp.items():
        out = out + evaluate_in_vars(c, a) * MultiPoly.monomial(alpha)
    return out


# --------------------------------------------------------------------------
# matrices over Lambda_a

class SymMatrix:
    __slots__ = ("a", "rows")

    def __init__(self, a, rows):
        self.a = a
        self.rows = [[SymFunc.coerce(x).truncate(a) for x in row] for row in rows]

    @classmethod
    def identity(cls, a, n):
        return cls(a, [[SymFunc.one() if i == j else SymFunc.zero() for j in range(n)] for i in range(n)])

    @classmethod
    def unit(cls, a, n, i, j):
        m = cls.identity(a, n)
        m.rows = [[SymFunc.one() if (r, c) == (i, j) else SymFunc.zero() for c in range(n)] for r in range(n)]
        return m

    @property
    def size(self):
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __mul__(self, other):
        n = self.size
        cols = list(zip(*other.rows))
        out = []
        for i in range(n):
            row = []
            for j in range(len(cols)):
                acc = SymFunc.zero()
                for k in range(n):
                    x, y = self.rows[i][k], cols[j][k]
                    if x and y:
                        acc = acc + x * y
                row.append(acc)
            out.append(row)
        return SymMatrix(self.a, out)

    def __add__(self, other):
        return SymMatrix(self.a, [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        return SymMatrix(self.a, [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __pow__(self, k):
        out = SymMatrix.identity(self.a, self.size)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self.rows == other.rows

    def block(self, start, size):
        return SymMatrix(self.a, [row[start:start + size] for row in self.rows[start:start + size]])

    def column(self, j):
        return [row[j] for row in self.rows]

    def entries(self):
        return {(i, j): x for i, row in enumerate(self.rows) for j, x in enumerate(row) if x}

    def __str__(self):
        return "\n".join("[" + ", ".join(format_symfunc(x) for x in row) + "]" for row in self.rows)

    def __repr__(self):
        return f"SymMatrix({self.a}, {self.size}x{self.size})"


def companion_block(a):
    """First column (e_1, -e_2, e_3, ...), ones on the superdiagonal."""
    rows = []
    for i in range(a):
        row = [SymFunc.zero()] * a
        row[0] = SymFunc.e(i + 1).scale(-1 if i % 2 else 1)
        if i + 1 < a:
            row[i + 1] = SymFunc.one()
        rows.append(row)
    return SymMatrix(a, rows)


def check_size(a, max_strands=None):
    bound = DEFAULT_MAX_STRANDS if max_strands is None else max_strands
    if a > bound:
        raise ValueError(f"{a} strands exceeds the configured bound of {bound} (matrix size {factorial(a)})")


def theta_matrix(x, max_strands=None):
    """Matrix of the action of x on P_a in the ordered staircase basis."""
    a = x.a
    check_size(a, max_strands)
    basis = staircase_exponents(a)
    index = {alpha: i for i, alpha in enumerate(basis)}
    n = len(basis)
    rows = [[SymFunc.zero()] * n for _ in range(n)]
    for j, alpha in enumerate(basis):
        image = nh_act(x, MultiPoly.monomial(alpha))
        for beta, c in staircase_decompose(image).items():
            rows[index[beta]][j] = c
    return SymMatrix(a, rows)


def nh_monomials(a, degree):
    """All xi^beta d_w of the given (doubled) degree."""
    out = []
    for w in sorted(Permutation(p) for p in _perms(a)):
        s = degree + 2 * w.length()
        if s < 0 or s % 2:
            continue
        for beta in _compositions(s // 2, a):
            out.append(NilHeckeElt(a, {w: MultiPoly.monomial(beta)}))
    return out


def _perms(a):
    from itertools import permutations
    return permutations(range(1, a + 1))


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest
