"""Cohomology of Grassmannians Gr(k, N) and one-step flags Fl(k, k+1, N).

Two models of H*(Gr(k, N)) live here:

* polynomials in Chern classes c_1..c_k (deg c_i = 2i) modulo the ideal
  spanned by the first column of a power of the companion matrix, and
* integer combinations of Schur classes s_lam with lam in the k x (N-k)
  box, multiplied by the Pieri rule with out-of-box terms dropped.

Each model is tested against the other.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

from .linalg import Echelon, ModularEchelon
from .multipoly import MultiPoly
from .qscalar import LaurentPoly, gauss_binomial, t_multinomial, _clean
from .symfunc import conjugate, partitions, partition, schur_jacobi_trudi


def _check_range(k, N, strict=False):
    if N < 0 or k < 0 or k > N or (strict and k == N):
        rel = "<" if strict else "<="
        raise ValueError(f"need 0 <= k {rel} N, got k={k}, N={N}")


def cpoly_ring(k):
    """Zero polynomial in c_1..c_k with weights deg c_i = 2i."""
    return MultiPoly(k, var="c", weights=range(1, k + 1))


def cgen(i, k):
    return MultiPoly.gen(k, i, var="c", weights=range(1, k + 1))


class GrassIdeal:
    __slots__ = ("k", "N", "generators")

    def __init__(self, k, N, generators):
        self.k = k
        self.N = N
        self.generators = list(generators)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self):
        return len(self.generators)

    def __repr__(self):
        return f"GrassIdeal({self.k}, {self.N}, {[str(g) for g in self.generators]})"


def companion_column_power(entries, power, zero, one):
    """First column of C^power for the companion matrix whose first column
    is ``entries`` (already signed) and whose superdiagonal is ``one``."""
    k = len(entries)
    col = [one if i == 0 else zero for i in range(k)]
    for _ in range(power):
        # (C v)_i = entries[i] * v_0 + v_{i+1}
        col = [entries[i] * col[0] + (col[i + 1] if i + 1 < k else zero) for i in range(k)]
    return col


def ideal_generators(k, N):
    _check_range(k, N)
    if k == 0:
        return GrassIdeal(k, N, [])
    ring = cpoly_ring(k)
    entries = [cgen(i, k).scale(-1 if (i - 1) % 2 else 1) for i in range(1, k + 1)]
    gens = companion_column_power(entries, N - k + 1, ring, ring.one())
    return GrassIdeal(k, N, gens)


def solve_chern_bars(k, N):
    """cbar_1..cbar_{N-k} from (1 + c_1 t + ...)(1 + cbar_1 t + ...) = 1."""
    _check_range(k, N)
    ring = cpoly_ring(k)
    bars = [ring.one()]
    for r in range(1, N - k + 1):
        acc = ring.zero()
        for i in range(1, min(r, k) + 1):
            acc = acc - cgen(i, k) * bars[r - i]
        bars.append(acc)
    return bars[1:]


# --------------------------------------------------------------------------
# Schur model

def in_box(lam, k, N):
    return len(lam) <= k and (not lam or lam[0] <= N - k)


def box_partitions(k, N):
    out = []
    for size in range(k * (N - k) + 1):
        out.extend(partitions(size, max_part=N - k, max_len=k))
    return out


class SchurClass:
    __slots__ = ("k", "N", "terms")

    def __init__(self, k, N, terms=None):
        self.k = k
        self.N = N
        clean = {}
        for lam, c in (terms or {}).items():
            lam = partition(lam)
            if not in_box(lam, k, N):
                raise ValueError(f"partition {lam} does not fit the {k}x{N - k} box")
            if c:
                clean[lam] = _clean(c)
        self.terms = clean

    @classmethod
    def _raw(cls, k, N, terms):
        obj = cls.__new__(cls)
        obj.k, obj.N, obj.terms = k, N, terms
        return obj

    @classmethod
    def one(cls, k, N):
        return cls._raw(k, N, {(): 1})

    def _check(self, other):
        if (self.k, self.N) != (other.k, other.N):
            raise ValueError(f"mismatched Grassmannians ({self.k},{self.N}) vs ({other.k},{other.N})")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for lam, c in other.terms.items():
            v = out.get(lam, 0) + c
            if v:
                out[lam] = v
            else:
                out.pop(lam, None)
        return SchurClass._raw(self.k, self.N, out)

    def scale(self, c):
        return SchurClass._raw(self.k, self.N, {l: _clean(v * c) for l, v in self.terms.items() if v * c})

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        return schur_multiply_box(self, other)

    def __eq__(self, other):
        if not isinstance(other, SchurClass):
            return NotImplemented
        return (self.k, self.N, self.terms) == (other.k, other.N, other.terms)

    def __hash__(self):
        return hash((self.k, self.N, frozenset(self.terms.items())))

    def is_zero(self):
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: (sum(t[0]), t[0]))

    def __str__(self):
        if not self.terms:
            return "0"
        out = ""
        for idx, (lam, c) in enumerate(self.sorted_terms()):
            name = "s(" + ",".join(map(str, lam)) + ")"
            neg = c < 0
            mag = -c if neg else c
            body = name if mag == 1 else f"{mag}*{name}"
            if idx == 0:
                out = ("-" if neg else "") + body
            else:
                out += (" - " if neg else " + ") + body
        return out

    def __repr__(self):
        return f"SchurClass({self.k}, {self.N}, {str(self)!r})"


@lru_cache(maxsize=None)
def pieri_e(r, lam, k, N):
    """e_r * s_lam: add a vertical strip of r boxes, keep only in-box shapes."""
    rows = list(lam) + [0] * (k - len(lam))
    out = []

    def rec(i, left, cur):
        if i == k:
            if left == 0:
                mu = tuple(p for p in cur if p)
                out.append(mu)
            return
        # box added to row i keeps the shape a partition if the row above
        # was already longer (or also received a box)
        for add in (0, 1):
            if add > left:
                continue
            new = rows[i] + add
            if new > N - k:
                continue
            if i > 0 and new > cur[i - 1]:
                continue
            rec(i + 1, left - add, cur + [new])

    if r > k:
        return ()
    rec(0, r, [])
    return tuple(out)


def _apply_e(r, cls):
    out = {}
    for lam, c in cls.terms.items():
        for mu in pieri_e(r, lam, cls.k, cls.N):
            v = out.get(mu, 0) + c
            if v:
                out[mu] = v
            else:
                out.pop(mu, None)
    return SchurClass._raw(cls.k, cls.N, out)


def _apply_symfunc(f, cls):
    out = SchurClass._raw(cls.k, cls.N, {})
    for lam, c in f.terms.items():
        cur = cls
        for r in lam:
            cur = _apply_e(r, cur)
            if cur.is_zero():
                break
        out = out + cur.scale(c)
    return out


def schur_multiply_box(x, y):
    x._check(y)
    out = SchurClass._raw(x.k, x.N, {})
    for lam, c in y.terms.items():
        out = out + _apply_symfunc(schur_jacobi_trudi(lam, "e"), x).scale(c)
    return out


def reduce_to_schur(f, k, N):
    """Image of a c-polynomial under c_i -> e_i -> s_(1^i)."""
    _check_range(k, N)
    if f.nvars != k:
        raise ValueError(f"polynomial has {f.nvars} variables, expected {k}")
    out = SchurClass._raw(k, N, {})
    for e, c in f.terms.items():
        cur = SchurClass.one(k, N)
        for i, x in enumerate(e, start=1):
            for _ in range(x):
                cur = _apply_e(i, cur)
        out = out + cur.scale(c)
    return out


def schur_class(lam, k, N):
    return SchurClass(k, N, {partition(lam): 1})


def graded_dimension_gr(k, N):
    _check_range(k, N)
    out = {}
    for lam in box_partitions(k, N):
        d = 2 * sum(lam)
        out[d] = out.get(d, 0) + 1
    return LaurentPoly(out)


# --------------------------------------------------------------------------
# degreewise linear algebra for weighted polynomial quotients

def weighted_monomials(weights, d):
    """Exponent vectors with sum(w_i e_i) == d."""
    n = len(weights)
    out = []

    def rec(i, left, cur):
        if i == n:
            if left == 0:
                out.append(tuple(cur))
            return
        w = weights[i]
        for x in range(left // w, -1, -1):
            rec(i + 1, left - w * x, cur + [x])

    rec(0, d, [])
    return out


def _half_degree(p, e):
    return sum(w * x for w, x in zip(p.weights, e))


def ideal_slice(gens, weights, d, modular=False):
    """Echelon form of the degree-d part of the ideal generated by ``gens``
    (all homogeneous) in the polynomial ring with the given weights."""
    monos = weighted_monomials(weights, d)
    # pivots go to the smallest column; putting the monomials heavy in the
    # late variables first keeps the echelon rows sparse (about 15x less
    # fill than the natural order on the flag relations)
    order = monos[::-1]
    ech = ModularEchelon(order=order) if modular else Echelon(order=order)
    full = len(monos)
    for g in gens:
        if not g:
            continue
        gd = _half_degree(g, next(iter(g.terms)))
        if gd > d:
            continue
        for m in weighted_monomials(weights, d - gd):
            vec = {}
            for e, c in g.terms.items():
                key = tuple(x + y for x, y in zip(e, m))
                vec[key] = vec.get(key, 0) + c
            ech.add(vec)
            if ech.rank == full:
                return ech
    return ech


def quotient_graded_dimension(gens, weights, top, verify_top=False):
    """dim_d of Q[vars]/(gens) for half-degrees 0..top, as a LaurentPoly in
    q with q^(2d) marking half-degree d.

    With ``verify_top`` the quotient is also shown to vanish on a window above
    ``top`` as wide as the largest weight, which forces every higher degree to
    vanish.  Full rank there is certified mod a prime first (a full rank mod
    p is a full rank over Q) and only redone exactly if that fails.
    """
    out = {}
    last = top + (max(weights, default=1) if verify_top else 0)
    for d in range(last + 1):
        total = len(weighted_monomials(weights, d))
        if d > top and ideal_slice(gens, weights, d, modular=True).rank == total:
            continue
        r = ideal_slice(gens, weights, d).rank
        if total - r:
            if d > top:
                raise RuntimeError(f"quotient is nonzero in half-degree {d} above the expected top {top}")
            out[2 * d] = total - r
    return LaurentPoly(out)


def ideal_contains(gens, weights, f):
    """Membership of a polynomial in a homogeneous ideal, degree by degree."""
    for d in {_half_degree(f, e) for e in f.terms}:
        part = {e: c for e, c in f.terms.items() if _half_degree(f, e) == d}
        if not ideal_slice(gens, weights, d).contains(part):
            return False
    return True


def grass_quotient_dimension(k, N, verify_top=False):
    """Graded dimension of Q[c_1..c_k]/I_{k,N} computed by linear algebra."""
    _check_range(k, N)
    gens = ideal_generators(k, N).generators
    return quotient_graded_dimension(gens, tuple(range(1, k + 1)), k * (N - k), verify_top)


# --------------------------------------------------------------------------
# one-step flags

def flag_relations(k, N):
    """Relations of H*(Fl(k, k+1, N)) in Q[c_1..c_k, xi].

    With D(t) = 1/(C(t)(1 + xi t)) = sum d_r t^r, the bar classes are
    cbar_r = d_r for r < N-k and the presentation forces d_r = 0 for
    N-k <= r <= N.
    """
    _check_range(k, N, strict=True)
    weights = tuple(range(1, k + 1)) + (1,)
    ring = MultiPoly(k + 1, var="y", weights=weights)

    def gen(i):
        return MultiPoly.gen(k + 1, i, var="y", weights=weights)

    # coefficients of C(t)(1 + xi t), with xi the last variable
    prod_coeffs = [ring.one()] + [ring.zero()] * (k + 1)
    for i in range(1, k + 1):
        prod_coeffs[i] = prod_coeffs[i] + gen(i)
        prod_coeffs[i + 1] = prod_coeffs[i + 1] + gen(i) * gen(k + 1)
    prod_coeffs[1] = prod_coeffs[1] + gen(k + 1)
    d = [ring.one()]
    for r in range(1, N + 1):
        acc = ring.zero()
        for i in range(1, min(r, k + 1) + 1):
            acc = acc - prod_coeffs[i] * d[r - i]
        d.append(acc)
    return [d[r] for r in range(N - k, N + 1)], weights


def flag_graded_dimension(k, N, verify_top=False):
    """Graded dimension of the flag presentation, degree by degree up to the
    complex dimension k(N-k) + (N-k-1) of Fl(k, k+1, N)."""
    gens, weights = flag_relations(k, N)
    top = k * (N - k) + (N - k - 1)
    return quotient_graded_dimension(gens, weights, top, verify_top)


def flag_multinomial(k, N):
    """The q^2-multinomial [N]!/([k]![1]![N-k-1]!) in the nonsymmetric form."""
    _check_range(k, N, strict=True)
    return t_multinomial([k, 1, N - k - 1], step=2)


def ef_scalars(k, N):
    """(e_k, f_{k+1}) from graded ranks of the flag over either Grassmannian."""
    _check_range(k, N, strict=True)
    flag = flag_graded_dimension(k, N)
    try:
        over_k = flag.exact_div(graded_dimension_gr(k, N))
        over_k1 = flag.exact_div(graded_dimension_gr(k + 1, N))
    except ValueError as exc:
        raise RuntimeError(f"flag module is not free of the expected rank at k={k}, N={N}: {exc}")
    return over_k.shift(1 - N + k), over_k1.shift(-k)


def ef_commutator(k, N):
    """e_{k-1} f_k - f_{k+1} e_k, with absent functors set to zero."""
    _check_range(k, N)
    zero = LaurentPoly()
    first = zero
    if k >= 1:
        e_prev, f_k = ef_scalars(k - 1, N)
        first = e_prev * f_k
    second = zero
    if k < N:
        e_k, f_next = ef_scalars(k, N)
        second = f_next * e_k
    return first - second


def ef_check(N):
    """Rows (k, n, commutator) for 0 <= k <= N with n = 2k - N."""
    return [(k, 2 * k - N, ef_commutator(k, N)) for k in range(N + 1)]
