"""The idempotented quantum group of sl2 over Q(q).

A monomial F^b E^a 1_n is stored as the key ``(n, a, b)``: E is applied a
times to weight n, then F b times, landing in weight n + 2(a - b).  Words are
read right to left, so ``"EF"`` at weight n means E F 1_n.
"""

from __future__ import annotations

import re
from functools import lru_cache

from .qscalar import LaurentPoly, Q, RationalQ, quantum_factorial, quantum_integer

ONE_R = RationalQ.coerce(1)


def target(key):
    n, a, b = key
    return n + 2 * (a - b)


def _qpow(k):
    return RationalQ.coerce(LaurentPoly.monomial(k))


class UdotElt:
    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for key, c in (terms or {}).items():
            n, a, b = key
            if a < 0 or b < 0:
                raise ValueError(f"negative exponent in monomial {key}")
            c = RationalQ.coerce(c)
            if not c.is_zero():
                clean[(int(n), int(a), int(b))] = c
        self.terms = clean

    @classmethod
    def _raw(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    @classmethod
    def monomial(cls, n, a=0, b=0, coeff=1):
        return cls({(n, a, b): coeff})

    @classmethod
    def idem(cls, n):
        return cls.monomial(n)

    @classmethod
    def E(cls, n):
        return cls.monomial(n, 1, 0)

    @classmethod
    def F(cls, n):
        return cls.monomial(n, 0, 1)

    def __add__(self, other):
        out = dict(self.terms)
        for key, c in UdotElt.coerce(other).terms.items():
            v = out[key] + c if key in out else c
            if v.is_zero():
                out.pop(key, None)
            else:
                out[key] = v
        return UdotElt._raw(out)

    @classmethod
    def coerce(cls, other):
        if isinstance(other, UdotElt):
            return other
        raise TypeError(f"cannot coerce {other!r} to UdotElt")

    def __neg__(self):
        return UdotElt._raw({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = RationalQ.coerce(c)
        if c.is_zero():
            return UdotElt()
        return UdotElt._raw({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, UdotElt):
            return udot_multiply(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, UdotElt):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(self.terms.items())

    def __str__(self):
        return format_udot(self)

    def __repr__(self):
        return f"UdotElt({format_udot(self)!r})"


def format_key(key):
    n, a, b = key
    parts = []
    if b:
        parts.append("F" if b == 1 else f"F^{b}")
    if a:
        parts.append("E" if a == 1 else f"E^{a}")
    parts.append(f"1_{{{n}}}")
    return "*".join(parts)


def format_udot(x):
    if not x.terms:
        return "0"
    pieces = []
    for key, c in x.sorted_terms():
        mono = format_key(key)
        if c == ONE_R:
            pieces.append(mono)
        elif c == -ONE_R:
            pieces.append(f"-{mono}")
        else:
            txt = str(c)
            pieces.append(f"{txt}*{mono}" if " " not in txt and "/" not in txt else f"({txt})*{mono}")
    out = pieces[0]
    for p in pieces[1:]:
        out += f" - {p[1:]}" if p.startswith("-") else f" + {p}"
    return out


# --------------------------------------------------------------------------
# normal-form multiplication

@lru_cache(maxsize=None)
def _e_times(key):
    """E * F^b E^a 1_n = F^b E^(a+1) 1_n + [b][n+2a-b+1] F^(b-1) E^a 1_n."""
    n, a, b = key
    out = [((n, a + 1, b), ONE_R)]
    if b:
        c = quantum_integer(b) * quantum_integer(n + 2 * a - b + 1)
        if c:
            out.append(((n, a, b - 1), RationalQ.coerce(c)))
    return tuple(out)


def _apply_E(terms):
    out = {}
    for key, c in terms.items():
        for k2, c2 in _e_times(key):
            v = out[k2] + c * c2 if k2 in out else c * c2
            if v.is_zero():
                out.pop(k2, None)
            else:
                out[k2] = v
    return out


def _apply_F(terms):
    return {(n, a, b + 1): c for (n, a, b), c in terms.items()}


@lru_cache(maxsize=None)
def _mono_times(left_ab, right_key):
    """F^b' E^a' (applied at the target of right_key) times a monomial."""
    a2, b2 = left_ab
    terms = {right_key: ONE_R}
    for _ in range(a2):
        terms = _apply_E(terms)
    for _ in range(b2):
        terms = _apply_F(terms)
    return tuple(terms.items())


def udot_multiply(x, y):
    out = {}
    for ky, cy in y.terms.items():
        m = target(ky)
        for (n, a, b), cx in x.terms.items():
            if n != m:
                continue
            for k, c in _mono_times((a, b), ky):
                v = c * cx * cy
                v = out[k] + v if k in out else v
                if v.is_zero():
                    out.pop(k, None)
                else:
                    out[k] = v
    return UdotElt._raw(out)


def word_element(letters, n):
    """Product of generators listed left to right, acting on 1_n.

    ``letters`` is a sequence of (symbol, exponent, divided) triples.
    """
    x = UdotElt.idem(n)
    for sym, exp, divided in reversed(letters):
        for _ in range(exp):
            w = _target_of(x)
            gen = UdotElt.E(w) if sym == "E" else UdotElt.F(w)
            x = gen * x
        if divided:
            x = x.scale(RationalQ(1, quantum_factorial(exp)))
    return x


def _target_of(x):
    targets = {target(k) for k in x.terms}
    if len(targets) != 1:
        raise ValueError("element is not a single weight block")
    return targets.pop()


_LETTER = re.compile(r"([EF])(?:\^(\d+)|\((\d+)\))?")


def parse_word(text):
    """Parse words such as ``EF``, ``E^2F``, ``E(2)F(3)``, ``1``."""
    text = text.replace(" ", "").replace("*", "")
    if text in ("", "1"):
        return []
    letters = []
    pos = 0
    while pos < len(text):
        m = _LETTER.match(text, pos)
        if not m:
            raise ValueError(f"cannot parse word {text!r} at position {pos}")
        sym, power, div = m.groups()
        if div is not None:
            letters.append((sym, int(div), True))
        else:
            letters.append((sym, int(power) if power else 1, False))
        pos = m.end()
    return letters


def word(text, n):
    return word_element(parse_word(text), n)


def divided_power(letters, n):
    """Product of divided powers E^(a) / F^(b), given as [(symbol, a), ...]."""
    return word_element([(s, a, True) for s, a in letters], n)


# --------------------------------------------------------------------------
# tau

def _bar_shift(c, s):
    return c.bar() * _qpow(s)


def e_left_form(x):
    """Rewrite x as a sum of E^a F^b 1_n; returns {(n, a, b): coeff}."""
    out = {}
    for key, c in x.terms.items():
        for k, v in _to_e_left(key):
            v = v * c
            v = out[k] + v if k in out else v
            if v.is_zero():
                out.pop(k, None)
            else:
                out[k] = v
    return out


@lru_cache(maxsize=None)
def _f_times_eleft(key):
    """F * E^a F^b 1_n = E^a F^(b+1) 1_n - [a][n-2b+a-1] E^(a-1) F^b 1_n."""
    n, a, b = key
    out = [((n, a, b + 1), ONE_R)]
    if a:
        c = quantum_integer(a) * quantum_integer(n - 2 * b + a - 1)
        if c:
            out.append(((n, a - 1, b), -RationalQ.coerce(c)))
    return tuple(out)


@lru_cache(maxsize=None)
def _to_e_left(key):
    n, a, b = key
    terms = {(n, a, 0): ONE_R}
    for _ in range(b):
        new = {}
        for k, c in terms.items():
            for k2, c2 in _f_times_eleft(k):
                v = new[k2] + c * c2 if k2 in new else c * c2
                if v.is_zero():
                    new.pop(k2, None)
                else:
                    new[k2] = v
        terms = new
    return tuple(terms.items())


def from_e_left(terms):
    """Turn {(n, a, b): c} meaning E^a F^b 1_n back into normal form."""
    out = UdotElt()
    for (n, a, b), c in terms.items():
        x = UdotElt.monomial(n, 0, b)
        for _ in range(a):
            x = UdotElt.E(_target_of(x)) * x
        out = out + x.scale(c)
    return out


def tau(x):
    """c F^b E^a 1_n -> bar(c) q^{-(a-b)(a-b+n)} E^b F^a 1_m, m = n + 2(a-b)."""
    out = {}
    for (n, a, b), c in x.terms.items():
        m = n + 2 * (a - b)
        key = (m, b, a)
        out[key] = out[key] + _bar_shift(c, -(a - b) * (a - b + n)) if key in out else _bar_shift(c, -(a - b) * (a - b + n))
    return from_e_left({k: v for k, v in out.items() if not v.is_zero()})


def tau_inv(x):
    """Inverse of ``tau``: c E^b F^a 1_m -> bar(c) q^{-(a-b)(a-b+n)} F^b E^a 1_n
    with n = m - 2(a - b)."""
    out = UdotElt()
    for (m, b, a), c in e_left_form(x).items():
        n = m - 2 * (a - b)
        # tau(c' F^b E^a 1_n) = bar(c') q^{-(a-b)(a-b+n)} E^b F^a 1_m
        out = out + UdotElt.monomial(n, a, b, _bar_shift(c, -(a - b) * (a - b + n)))
    return out


# --------------------------------------------------------------------------
# semilinear form

def _pure_e_value(a):
    fact = RationalQ.coerce(quantum_factorial(a))
    out = fact * fact
    for j in range(1, a + 1):
        out = out * RationalQ(1, LaurentPoly({0: 1, 2 * j: -1}))
    return out


@lru_cache(maxsize=None)
def _semilinear_mono(k1, k2):
    if k1[0] != k2[0] or target(k1) != target(k2):
        return RationalQ.coerce(0)
    n, a, b = k1
    if b:
        # <F x', y> = <x', tau(F) y>, tau(F 1_w) = q^{w-1} E 1_{w-2}
        x_prime = (n, a, b - 1)
        w = target(x_prime)
        moved = UdotElt.E(w - 2) * UdotElt.monomial(*k2)
        total = RationalQ.coerce(0)
        for k, c in moved.terms.items():
            total = total + c * _semilinear_mono(x_prime, k)
        return total * _qpow(w - 1)
    n2, a2, b2 = k2
    if b2:
        # <x, F y'> = <tau^{-1}(F) x, y'>, tau^{-1}(F 1_w) = q^{-(w-1)} E 1_{w-2};
        # the scalar leaves the antilinear slot barred
        y_prime = (n2, a2, b2 - 1)
        w = target(y_prime)
        return _qpow(w - 1) * _semilinear_mono((n, a + 1, 0), y_prime)
    return _pure_e_value(a)


def semilinear(x, y):
    """The form: antilinear in x, linear in y."""
    total = RationalQ.coerce(0)
    for k1, c1 in x.terms.items():
        cb = c1.bar()
        for k2, c2 in y.terms.items():
            v = _semilinear_mono(k1, k2)
            if not v.is_zero():
                total = total + cb * c2 * v
    return total


def word_weight_check(x, n):
    return all(k[0] == n for k in x.terms)
