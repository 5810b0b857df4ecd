"""Exact sparse linear algebra over Q.

Vectors are dicts from hashable keys to rational coefficients.  ``Echelon``
maps keys to column numbers on first sight and feeds integer rows to the
elimination kernel.
"""

from fractions import Fraction
from math import lcm

from . import kernels


def _integer_row(vec, columns):
    den = 1
    for c in vec.values():
        if isinstance(c, Fraction):
            den = lcm(den, c.denominator)
    row = {}
    for key, c in vec.items():
        if not c:
            continue
        col = columns.get(key)
        if col is None:
            col = columns[key] = len(columns)
        row[col] = int(c * den)
    return row


class Echelon:
    """Incrementally built row space."""

    def __init__(self, order=None):
        self.columns = {}
        if order is not None:
            # fixing the column order makes pivots deterministic
            for key in order:
                self.columns[key] = len(self.columns)
        self.pivots = {}
        self.rank = 0

    def add(self, vec):
        """Insert a vector; return True if it enlarged the span."""
        row = _integer_row(vec, self.columns)
        if kernels.insert_row(self.pivots, row):
            self.rank += 1
            return True
        return False

    def contains(self, vec):
        row = _integer_row(vec, dict(self.columns))
        # unseen keys can never be cancelled
        if any(k not in self.columns for k in vec if vec[k]):
            return False
        return not kernels.reduce_row(self.pivots, row)


MODULUS = 2_147_483_647


class ModularEchelon(Echelon):
    """Row space mod a prime; a full rank here is a proof of full rank over Q."""

    def __init__(self, order=None, modulus=MODULUS):
        super().__init__(order)
        self.modulus = modulus

    def add(self, vec):
        row = _integer_row(vec, self.columns)
        if kernels.insert_row_mod(self.pivots, row, self.modulus):
            self.rank += 1
            return True
        return False

    def contains(self, vec):
        raise NotImplementedError("membership mod p is not a proof over Q")


def rank(vectors):
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank
