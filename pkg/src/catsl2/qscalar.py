"""Exact scalars in one variable q.

``LaurentPoly`` is an element of Q[q, q^-1] stored as ``{exponent: coefficient}``
with no zero coefficients.  ``RationalQ`` is a reduced fraction of Laurent
polynomials kept in a canonical form so that ``==`` and ``hash`` are
structural.  ``QSeries`` is a truncated expansion at q = 0.

Everything is exact: coefficients are ``int`` or ``fractions.Fraction``.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from numbers import Rational


def _clean(coeff):
    """Demote integral Fractions to int so hashing/printing is uniform."""
    if isinstance(coeff, Fraction) and coeff.denominator == 1:
        return coeff.numerator
    return coeff


class LaurentPoly:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for exp, c in dict(terms).items():
                if c:
                    clean[int(exp)] = _clean(c)
        self._terms = clean
        self._hash = None

    # construction helpers -------------------------------------------------
    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def monomial(cls, exp, coeff=1):
        return cls({exp: coeff})

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def coerce(cls, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (int, Rational)):
            return cls.const(other)
        raise TypeError(f"cannot coerce {other!r} to LaurentPoly")

    # accessors -------------------------------------------------------------
    @property
    def terms(self):
        return dict(self._terms)

    def items(self):
        return sorted(self._terms.items())

    def coeff(self, exp):
        return self._terms.get(exp, 0)

    def is_zero(self):
        return not self._terms

    def degree(self):
        if not self._terms:
            raise ValueError("degree of zero polynomial")
        return max(self._terms)

    def valuation(self):
        if not self._terms:
            raise ValueError("valuation of zero polynomial")
        return min(self._terms)

    def is_monomial(self):
        return len(self._terms) == 1

    def at_one(self):
        """Value at q = 1."""
        return _clean(sum(self._terms.values(), 0))

    def __call__(self, value):
        value = Fraction(value)
        return _clean(sum(Fraction(c) * value ** e for e, c in self._terms.items()))

    # arithmetic ------------------------------------------------------------
    def __add__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = _clean(v)
            else:
                out.pop(e, None)
        return LaurentPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, RationalQ):
            return NotImplemented
        try:
            other = LaurentPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly({e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if self.is_monomial():
                (e, c), = self._terms.items()
                return LaurentPoly({e * k: Fraction(1, 1) / Fraction(c) ** (-k)})
            raise ValueError("negative power of a non-monomial Laurent polynomial")
        result = LaurentPoly.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, k):
        """Multiply by q^k."""
        return LaurentPoly._raw({e + k: c for e, c in self._terms.items()})

    def scale(self, c):
        if not c:
            return LaurentPoly()
        return LaurentPoly._raw({e: _clean(v * c) for e, v in self._terms.items()})

    def bar(self):
        """The involution q -> q^-1."""
        return LaurentPoly._raw({-e: c for e, c in self._terms.items()})

    def substitute_power(self, k):
        """q -> q^k."""
        return LaurentPoly._raw({e * k: c for e, c in self._terms.items()})

    def exact_div(self, other):
        """Divide exactly in Q[q, q^-1]; raise ValueError if not divisible."""
        other = LaurentPoly.coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero Laurent polynomial")
        if self.is_zero():
            return LaurentPoly()
        num, nv = _as_poly(self)
        den, dv = _as_poly(other)
        quo, rem = _poly_divmod(num, den)
        if any(rem):
            raise ValueError(f"{self} is not divisible by {other}")
        return _from_poly(quo, nv - dv)

    # comparison ------------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Rational)):
            return self._terms == ({0: other} if other else {})
        if isinstance(other, RationalQ):
            return other == self
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    def __repr__(self):
        return f"LaurentPoly({format_laurent(self)!r})"

    def __str__(self):
        return format_laurent(self)


Q = LaurentPoly.monomial(1)
ONE = LaurentPoly.const(1)
ZERO = LaurentPoly()


def format_laurent(p, ascending=False):
    """Render as ``q^2 + 1 + q^-2`` (descending exponents by default)."""
    if p.is_zero():
        return "0"
    parts = []
    for exp, c in sorted(p._terms.items(), reverse=not ascending):
        sign = "-" if c < 0 else "+"
        mag = -c if c < 0 else c
        if exp == 0:
            body = str(mag)
        else:
            var = "q" if exp == 1 else f"q^{exp}"
            body = var if mag == 1 else f"{mag}{var}" if isinstance(mag, int) else f"({mag}){var}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# --------------------------------------------------------------------------
# dense univariate helpers (coefficient lists, lowest degree first)

def _as_poly(p):
    """Laurent -> (dense list, valuation) with a nonzero constant term."""
    v = p.valuation()
    d = p.degree()
    return [p._terms.get(v + i, 0) for i in range(d - v + 1)], v


def _from_poly(coeffs, shift=0):
    return LaurentPoly({i + shift: c for i, c in enumerate(coeffs) if c})


def _trim(a):
    while a and not a[-1]:
        a.pop()
    return a


def _poly_divmod(a, b):
    a = [Fraction(x) for x in a]
    b = _trim([Fraction(x) for x in b])
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if len(a) < len(b):
        return [0], a
    lead = b[-1]
    quo = [Fraction(0)] * (len(a) - len(b) + 1)
    rem = list(a)
    for i in range(len(quo) - 1, -1, -1):
        c = rem[i + len(b) - 1] / lead
        quo[i] = c
        if c:
            for j, bj in enumerate(b):
                rem[i + j] -= c * bj
    rem = _trim(rem[: len(b) - 1])
    return [_clean(c) for c in quo], [_clean(c) for c in rem]


def _primitive(a):
    """Scale a rational coefficient list to a primitive integer list."""
    a = [Fraction(x) for x in a]
    den = 1
    for x in a:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in a]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return [x // g for x in ints] if g else ints


def _poly_gcd(a, b):
    a = _trim(_primitive(a))
    b = _trim(_primitive(b))
    while b:
        _, r = _poly_divmod(a, b)
        a, b = b, _trim(_primitive(r)) if any(r) else []
    if not a:
        return [1]
    if a[-1] < 0:
        a = [-x for x in a]
    return a


# --------------------------------------------------------------------------

class RationalQ:
    """Reduced fraction num/den with a canonical normal form.

    The denominator is an honest polynomial in q with nonzero constant term,
    integer coefficients, content 1 and positive leading coefficient; all
    powers of q live in the numerator.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=1):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise ZeroDivisionError("RationalQ with zero denominator")
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num, den):
        obj = cls.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    @classmethod
    def coerce(cls, other):
        if isinstance(other, RationalQ):
            return other
        if isinstance(other, LaurentPoly):
            return cls._raw(other, ONE)
        if isinstance(other, (int, Rational)):
            return cls._raw(LaurentPoly.const(other), ONE)
        raise TypeError(f"cannot coerce {other!r} to RationalQ")

    def is_zero(self):
        return self.num.is_zero()

    def is_laurent(self):
        return self.den == ONE

    def as_laurent(self):
        if not self.is_laurent():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self.num

    def __add__(self, other):
        try:
            o = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        if self.den == o.den:
            return RationalQ(self.num + o.num, self.den)
        return RationalQ(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalQ._raw(-self.num, self.den)

    def __sub__(self, other):
        try:
            o = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return RationalQ.coerce(other) - self

    def __mul__(self, other):
        try:
            o = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or o.is_zero():
            return RationalQ._raw(ZERO, ONE)
        if self.is_laurent() and o.is_laurent():
            return RationalQ._raw(self.num * o.num, ONE)
        return RationalQ(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RationalQ(self.den, self.num)

    def __truediv__(self, other):
        return self * RationalQ.coerce(other).inverse()

    def __rtruediv__(self, other):
        return RationalQ.coerce(other) * self.inverse()

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalQ(self.num ** k, self.den ** k)

    def bar(self):
        return RationalQ(self.num.bar(), self.den.bar())

    def cross_equal(self, other):
        """Equality by cross-multiplication, independent of normalization."""
        o = RationalQ.coerce(other)
        return self.num * o.den == o.num * self.den

    def __eq__(self, other):
        try:
            o = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        if self.is_laurent():
            return hash(self.num)
        return hash((self.num, self.den))

    def __bool__(self):
        return not self.is_zero()

    def __repr__(self):
        return f"RationalQ({format_rational(self)!r})"

    def __str__(self):
        return format_rational(self)


def _normalize(num, den):
    if num.is_zero():
        return ZERO, ONE
    nd, nv = _as_poly(num)
    dd, dv = _as_poly(den)
    g = _poly_gcd(nd, dd)
    if len(g) > 1:
        nd, r1 = _poly_divmod(nd, g)
        dd, r2 = _poly_divmod(dd, g)
        assert not any(r1) and not any(r2)
    # make the denominator a primitive integer polynomial with positive lead
    dd_f = [Fraction(x) for x in _trim(list(dd))]
    prim = _primitive(dd_f)
    # prim = dd_f * s for a rational scalar s
    s = Fraction(prim[-1]) / dd_f[-1]
    if prim[-1] < 0:
        prim = [-x for x in prim]
        s = -s
    nd = [_clean(Fraction(x) * s) for x in nd]
    return _from_poly(nd, nv - dv), _from_poly(prim)


def format_rational(r):
    if r.is_laurent():
        return format_laurent(r.num)
    num, den = r.num, r.den
    if den.coeff(0) < 0:
        num, den = -num, -den
    ntxt = format_laurent(num)
    if not num.is_monomial() or ntxt.startswith("-"):
        ntxt = f"({ntxt})"
    return f"{ntxt}/({format_laurent(den, ascending=True)})"


def rat_normalize(num, den):
    return RationalQ(num, den)


def rat_add(x, y):
    return RationalQ.coerce(x) + RationalQ.coerce(y)


def rat_mul(x, y):
    return RationalQ.coerce(x) * RationalQ.coerce(y)


def rat_eq(x, y):
    return RationalQ.coerce(x) == RationalQ.coerce(y)


# --------------------------------------------------------------------------

class NoSeriesError(ValueError):
    pass


class QSeries:
    """Truncated Laurent series: all stored exponents are < ``order``."""

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs, order):
        self.order = order
        self.coeffs = {e: _clean(c) for e, c in dict(coeffs).items() if c and e < order}

    def __mul__(self, other):
        order = min(self.order, other.order)
        if self.coeffs and other.coeffs:
            # a low valuation on one side lowers the trustworthy order
            order = min(self.order + min(other.coeffs), other.order + min(self.coeffs))
        out = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                if e1 + e2 < order:
                    out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return QSeries(out, order)

    def truncate(self, order):
        return QSeries(self.coeffs, min(order, self.order))

    def __eq__(self, other):
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def as_laurent(self):
        return LaurentPoly(self.coeffs)

    def __repr__(self):
        return f"QSeries({format_laurent(self.as_laurent(), ascending=True)} + O(q^{self.order}))"


def series_expand(r, order):
    """Expand a RationalQ at q = 0 keeping exponents below ``order``."""
    r = RationalQ.coerce(r)
    if r.is_zero():
        return QSeries({}, order)
    d0 = r.den.coeff(0)
    if not d0 or r.den.valuation() < 0:
        raise NoSeriesError(f"{r} has no expansion at q = 0")
    den = [Fraction(c) for c in _as_poly(r.den)[0]]
    num, nv = _as_poly(r.num)
    n = max(0, order - nv)
    out = [Fraction(0)] * n
    for k in range(n):
        acc = Fraction(num[k]) if k < len(num) else Fraction(0)
        for i in range(1, min(k, len(den) - 1) + 1):
            acc -= den[i] * out[k - i]
        out[k] = acc / den[0]
    return QSeries({k + nv: c for k, c in enumerate(out)}, order)


# --------------------------------------------------------------------------
# quantum numbers

@lru_cache(maxsize=None)
def quantum_integer(n):
    """[n] = (q^n - q^-n)/(q - q^-1); in particular [-n] = -[n]."""
    if n < 0:
        return -quantum_integer(-n)
    return LaurentPoly({n - 1 - 2 * i: 1 for i in range(n)})


@lru_cache(maxsize=None)
def quantum_factorial(a):
    if a < 0:
        raise ValueError("quantum factorial of a negative integer")
    out = ONE
    for j in range(1, a + 1):
        out = out * quantum_integer(j)
    return out


@lru_cache(maxsize=None)
def quantum_binomial(n, k):
    """Balanced [n choose k] = [n]!/([k]![n-k]!) for 0 <= k <= n."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    return quantum_factorial(n).exact_div(quantum_factorial(k) * quantum_factorial(n - k))


def _t_integer(m, step):
    # (m)_t = 1 + t + ... + t^(m-1) with t = q^step
    return LaurentPoly({step * i: 1 for i in range(m)})


def t_factorial(a, step=2):
    """Nonsymmetric factorial (a)!_t with t = q^step."""
    out = ONE
    for m in range(1, a + 1):
        out = out * _t_integer(m, step)
    return out


_T_STEPS = {"q": 1, "q2": 2, "q^2": 2, "q²": 2}


def gauss_binomial(N, k, t="q2"):
    """Gaussian binomial in t = q or t = q^2, via the product formula."""
    if t not in _T_STEPS:
        raise ValueError(f"t must be one of 'q', 'q2'; got {t!r}")
    if N < 0 or k < 0 or k > N:
        raise ValueError(f"need 0 <= k <= N, got N={N}, k={k}")
    step = _T_STEPS[t]
    num = ONE
    den = ONE
    for i in range(k):
        num = num * (ONE - LaurentPoly.monomial(step * (N - i)))
        den = den * (ONE - LaurentPoly.monomial(step * (i + 1)))
    return num.exact_div(den)


def t_multinomial(parts, step=2):
    """(sum parts)!_t / prod (p)!_t with t = q^step."""
    num = t_factorial(sum(parts), step)
    den = ONE
    for p in parts:
        den = den * t_factorial(p, step)
    return num.exact_div(den)
