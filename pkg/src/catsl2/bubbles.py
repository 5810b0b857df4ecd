"""Dotted bubbles in END(1_n), evaluated as symmetric functions.

A bubble in the region of weight n is described by its orientation and an
offset alpha >= 0: the printed dot count is n - 1 + alpha (clockwise) or
-n - 1 + alpha (counterclockwise), and the degree is 2 alpha.  The
orientation whose dot count is never negative (clockwise for n > 0,
counterclockwise for n < 0) is called dominant here; its degree 2r bubble is
e_r.  The other orientation gives (-1)^r h_r, and for small r those are the
fake bubbles, defined by the recursion that makes the two generating series
inverse to each other.  At n = 0 clockwise is taken as dominant.

Bubble evaluation uses the parameters c^+ = c^- = 1, beta = -1.  General
parameters enter only through ``alpha_coeff`` and ``chi_validate``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .symfunc import SymFunc, h_in_e, partition

CW = "cw"
CCW = "ccw"


class ZeroBubbleError(ValueError):
    """Bubbles of negative degree vanish."""


@dataclass(frozen=True)
class BubbleLabel:
    orientation: str
    n: int
    alpha: int

    def __post_init__(self):
        if self.orientation not in (CW, CCW):
            raise ValueError(f"orientation must be 'cw' or 'ccw', got {self.orientation!r}")

    @classmethod
    def from_dots(cls, orientation, n, dots):
        shift = n - 1 if orientation == CW else -n - 1
        return cls(orientation, n, dots - shift)

    @property
    def dots(self):
        return (self.n - 1 if self.orientation == CW else -self.n - 1) + self.alpha

    @property
    def degree(self):
        return 2 * self.alpha

    @property
    def is_negative(self):
        return self.alpha < 0

    @property
    def is_fake(self):
        return self.dots < 0 and self.alpha >= 0

    @property
    def is_dominant(self):
        return self.orientation == dominant_orientation(self.n)

    def __str__(self):
        return f"{self.orientation}({self.dots})@{self.n}"


def dominant_orientation(n):
    return CCW if n < 0 else CW


def bubble_to_symfunc(b):
    if b.alpha < 0:
        raise ZeroBubbleError(f"bubble {b} has negative degree {b.degree}")
    if b.alpha == 0:
        return SymFunc.one()
    if b.is_dominant:
        return SymFunc.e(b.alpha)
    return h_in_e(b.alpha).scale(-1 if b.alpha % 2 else 1)


def fake_range(n):
    """(orientation, max j) of the fake bubbles at weight n."""
    if n > 0:
        return CCW, n
    if n < 0:
        return CW, -n
    return None, 0


def fake_bubble_expansion(n, j):
    """Fake bubble of degree 2j at weight n via the inductive definition
    fake_j = -sum_{l >= 1} e_l fake_{j-l}, fake_0 = 1."""
    orient, top = fake_range(n)
    if j < 0 or j > top:
        raise ValueError(f"no fake bubble of degree {2 * j} at weight {n}")
    fakes = [SymFunc.one()]
    for jj in range(1, j + 1):
        acc = SymFunc.zero()
        for l in range(1, jj + 1):
            acc = acc - SymFunc.e(l) * fakes[jj - l]
        fakes.append(acc)
    return fakes[j]


def _default_eval(b):
    return bubble_to_symfunc(b)


def infinite_grassmannian_check(n, alpha_max, evaluate=None):
    """sum_{l1 + l2 = a} cw(l1) ccw(l2) == delta_{a,0} for 0 <= a <= alpha_max."""
    evaluate = evaluate or _default_eval
    for a in range(alpha_max + 1):
        acc = SymFunc.zero()
        for l1 in range(a + 1):
            acc = acc + evaluate(BubbleLabel(CW, n, l1)) * evaluate(BubbleLabel(CCW, n, a - l1))
        if acc != (SymFunc.one() if a == 0 else SymFunc.zero()):
            return False
    return True


# --------------------------------------------------------------------------
# curls

@dataclass(frozen=True)
class CurlTerm:
    dots: int
    bubble: BubbleLabel
    sign: int

    @property
    def degree(self):
        return 2 * self.dots + self.bubble.degree


def curl_expand(n, j):
    """Curl with j dots at weight n as -sum_{f1+f2=j-n} (f1 dots) cw(n-1+f2)."""
    if j < 0:
        raise ValueError("dot count must be nonnegative")
    total = j - n
    return [CurlTerm(f1, BubbleLabel(CW, n, total - f1), -1) for f1 in range(total, -1, -1)] if total >= 0 else []


def curl_evaluate(terms):
    """Collapse a curl expansion to {dots on the strand: SymFunc}."""
    out = {}
    for t in terms:
        v = bubble_to_symfunc(t.bubble).scale(t.sign)
        out[t.dots] = out[t.dots] + v if t.dots in out else v
    return {d: v for d, v in out.items() if v}


# --------------------------------------------------------------------------
# parameters

def _frac(x):
    if isinstance(x, str):
        return Fraction(x.strip())
    return Fraction(x)


class ChiParams:
    """Invertible scalars beta_n, c_n^+ (n >= 0), c_n^- (n <= 0)."""

    def __init__(self, beta=None, c_plus=None, c_minus=None):
        self.beta = {int(k): _frac(v) for k, v in (beta or {}).items()}
        self.c_plus = {int(k): _frac(v) for k, v in (c_plus or {}).items()}
        self.c_minus = {int(k): _frac(v) for k, v in (c_minus or {}).items()}
        for name, table in (("beta", self.beta), ("c_plus", self.c_plus), ("c_minus", self.c_minus)):
            for k, v in table.items():
                if v == 0:
                    raise ValueError(f"{name}[{k}] must be invertible")
        if any(k < 0 for k in self.c_plus):
            raise ValueError("c_plus is indexed by weights n >= 0")
        if any(k > 0 for k in self.c_minus):
            raise ValueError("c_minus is indexed by weights n <= 0")

    @classmethod
    def preferred(cls, lo, hi):
        return cls(
            {n: -1 for n in range(lo, hi + 1)},
            {n: 1 for n in range(max(lo, 0), hi + 1)},
            {n: 1 for n in range(lo, min(hi, 0) + 1)},
        )

    @classmethod
    def from_json(cls, text):
        data = json.loads(text)
        if not isinstance(data, dict):
            raise ValueError("parameter file must hold a JSON object")
        unknown = set(data) - {"beta", "c_plus", "c_minus"}
        if unknown:
            raise ValueError(f"unknown keys in parameter file: {sorted(unknown)}")
        return cls(data.get("beta"), data.get("c_plus"), data.get("c_minus"))

    def to_dict(self):
        def enc(t):
            return {str(k): str(v) for k, v in sorted(t.items())}

        return {"beta": enc(self.beta), "c_plus": enc(self.c_plus), "c_minus": enc(self.c_minus)}

    def copy(self):
        return ChiParams(self.beta, self.c_plus, self.c_minus)

    def span(self):
        keys = set(self.beta) | set(self.c_plus) | set(self.c_minus)
        if not keys:
            return 0, -1
        return min(keys), max(keys)

    def c(self, n):
        table = self.c_plus if n >= 0 else self.c_minus
        if n not in table:
            raise ValueError(f"missing degree-zero bubble parameter at weight {n}")
        return table[n]


def alpha_bar(lam):
    """(-1)^|lam| times the coefficient of e_lam in h_|lam|."""
    lam = partition(lam)
    s = sum(lam)
    return Fraction(h_in_e(s).coeff(lam) * (-1) ** s)


def alpha_coeff(lam, ell, n, chi=None):
    """alpha_lam^ell(n) = (1/c_n)^(m+1) * alpha_bar(lam), m = number of parts;
    zero unless |lam| <= ell <= |n| - 1."""
    lam = partition(lam)
    if not sum(lam) <= ell <= abs(n) - 1:
        return Fraction(0)
    c = Fraction(1) if chi is None else chi.c(n)
    return alpha_bar(lam) / c ** (len(lam) + 1)


def alpha_identity(n, b, chi=None):
    """sum_{|lam| <= b} alpha_lam^b(n) e_lam e_{b-|lam|}, with e_0 = c_n."""
    from .symfunc import partitions

    c = Fraction(1) if chi is None else chi.c(n)
    acc = SymFunc.zero()
    for size in range(b + 1):
        tail = SymFunc.e(b - size) if b > size else SymFunc.coerce(c)
        for lam in partitions(size):
            a = alpha_coeff(lam, b, n, chi)
            if a:
                acc = acc + SymFunc({lam: a}) * tail
    return acc


CONSTRAINTS = ("c0_beta0", "cminus1_inverse", "cminus_recursion", "cplus_recursion")


def chi_validate(chi, weight_range=None):
    """Violated consistency constraints, checked where every referenced
    weight lies in ``weight_range`` (default: the span of the given keys)."""
    lo, hi = weight_range if weight_range is not None else chi.span()

    def inside(*ws):
        return all(lo <= w <= hi for w in ws)

    def get(table, name, n):
        if n not in table:
            raise ValueError(f"{name} is not defined at weight {n}")
        return table[n]

    out = []
    if inside(0):
        v = -get(chi.c_plus, "c_plus", 0) * get(chi.c_minus, "c_minus", 0) * get(chi.beta, "beta", 0)
        if v != 1:
            out.append({"constraint": CONSTRAINTS[0], "weight": 0, "detail": f"-c0+ c0- beta0 = {v}, expected 1"})
    if inside(-1, 1):
        lhs = get(chi.c_minus, "c_minus", -1)
        rhs = 1 / get(chi.c_plus, "c_plus", 1)
        if lhs != rhs:
            out.append({"constraint": CONSTRAINTS[1], "weight": -1, "detail": f"c-_(-1) = {lhs}, expected {rhs}"})
    for n in range(lo, min(hi, 0) + 1):
        if inside(n - 2):
            lhs = get(chi.c_minus, "c_minus", n - 2)
            rhs = -get(chi.beta, "beta", n) * get(chi.c_minus, "c_minus", n)
            if lhs != rhs:
                out.append({"constraint": CONSTRAINTS[2], "weight": n, "detail": f"c-_({n - 2}) = {lhs}, expected {rhs}"})
    for n in range(max(lo, 0), hi + 1):
        if inside(n + 2):
            lhs = get(chi.c_plus, "c_plus", n + 2)
            rhs = -get(chi.beta, "beta", n) * get(chi.c_plus, "c_plus", n)
            if lhs != rhs:
                out.append({"constraint": CONSTRAINTS[3], "weight": n, "detail": f"c+_({n + 2}) = {lhs}, expected {rhs}"})
    return out
