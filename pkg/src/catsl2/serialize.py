"""Deterministic JSON payloads for library values.

Every integer or rational is written as a decimal string, every term list is
sorted, and ``decode`` inverts ``encode`` exactly.
"""

import json
from fractions import Fraction

from .grasscoh import SchurClass
from .multipoly import MultiPoly
from .nilhecke import NilHeckeElt, Permutation, SymMatrix
from .qscalar import LaurentPoly, RationalQ
from .symfunc import SymFunc
from .udot import UdotElt


def num(x):
    return str(x)


def parse_num(s):
    v = Fraction(s)
    return v.numerator if v.denominator == 1 else v


def encode(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, (int, Fraction)):
        return num(value)
    if isinstance(value, str):
        return value
    if isinstance(value, LaurentPoly):
        return {"type": "laurent", "terms": [[num(e), num(c)] for e, c in value.items()]}
    if isinstance(value, RationalQ):
        return {"type": "rational", "num": encode(value.num), "den": encode(value.den)}
    if isinstance(value, MultiPoly):
        return {
            "type": "multipoly",
            "var": value.var,
            "nvars": num(value.nvars),
            "weights": [num(w) for w in value.weights],
            "terms": [[[num(x) for x in e], num(c)] for e, c in sorted(value.terms.items())],
        }
    if isinstance(value, SymFunc):
        return {"type": "symfunc", "terms": [[[num(p) for p in lam], num(c)] for lam, c in sorted(value.terms.items())]}
    if isinstance(value, SchurClass):
        return {
            "type": "schur",
            "k": num(value.k),
            "N": num(value.N),
            "terms": [[[num(p) for p in lam], num(c)] for lam, c in sorted(value.terms.items())],
        }
    if isinstance(value, SymMatrix):
        return {"type": "symmatrix", "a": num(value.a), "rows": [[encode(x) for x in row] for row in value.rows]}
    if isinstance(value, NilHeckeElt):
        return {
            "type": "nilhecke",
            "a": num(value.a),
            "terms": [[[num(v) for v in w], encode(f)] for w, f in sorted(value.terms.items())],
        }
    if isinstance(value, UdotElt):
        return {"type": "udot", "terms": [[[num(v) for v in k], encode(c)] for k, c in sorted(value.terms.items())]}
    if isinstance(value, dict):
        return {str(k): encode(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode(v) for v in value]
    raise TypeError(f"cannot encode {type(value).__name__}")


def decode(obj):
    if isinstance(obj, list):
        return [decode(v) for v in obj]
    if not isinstance(obj, dict):
        return obj
    kind = obj.get("type")
    if kind == "laurent":
        return LaurentPoly({int(e): parse_num(c) for e, c in obj["terms"]})
    if kind == "rational":
        return RationalQ(decode(obj["num"]), decode(obj["den"]))
    if kind == "multipoly":
        return MultiPoly(
            int(obj["nvars"]),
            {tuple(int(x) for x in e): parse_num(c) for e, c in obj["terms"]},
            var=obj["var"],
            weights=[int(w) for w in obj["weights"]],
        )
    if kind == "symfunc":
        return SymFunc({tuple(int(p) for p in lam): parse_num(c) for lam, c in obj["terms"]})
    if kind == "schur":
        return SchurClass(int(obj["k"]), int(obj["N"]), {tuple(int(p) for p in lam): parse_num(c) for lam, c in obj["terms"]})
    if kind == "symmatrix":
        return SymMatrix(int(obj["a"]), [[decode(x) for x in row] for row in obj["rows"]])
    if kind == "nilhecke":
        a = int(obj["a"])
        return NilHeckeElt(a, {Permutation(int(v) for v in w): decode(f) for w, f in obj["terms"]})
    if kind == "udot":
        return UdotElt({tuple(int(v) for v in k): decode(c) for k, c in obj["terms"]})
    return {k: decode(v) for k, v in obj.items()}


def dumps(obj):
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
