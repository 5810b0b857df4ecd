"""Regenerate frozen.json from independent sympy computations.

Nothing here imports catsl2.  Run from the repository root:

    python3 tests/oracles/generate.py
"""

import json
from itertools import permutations
from pathlib import Path

import sympy as sp
from sympy.polys.polyfuncs import symmetrize
from sympy.utilities.iterables import partitions as sp_partitions

q = sp.Symbol("q")
OUT = Path(__file__).with_name("frozen.json")


def laurent_dict(expr):
    """{exponent: coefficient} of a Laurent polynomial in q."""
    expr = sp.expand(sp.cancel(expr))
    num, den = sp.fraction(sp.together(expr))
    den = sp.Poly(den, q)
    assert len(den.terms()) == 1, f"not a Laurent polynomial: {expr}"
    (shift,), dc = den.terms()[0]
    out = {}
    for (e,), c in sp.Poly(sp.expand(num), q).terms():
        out[str(e - shift)] = str(sp.Rational(c) / dc)
    return out


def qint(n):
    return sp.cancel((q**n - q**-n) / (q - 1 / q))


def qbinom_t(N, k, t):
    num = sp.prod([1 - t ** (N - i) for i in range(k)])
    den = sp.prod([1 - t ** (i + 1) for i in range(k)])
    return sp.cancel(num / den)


def e_basis(expr, nvars, xs):
    """Express a symmetric polynomial in elementary symmetric functions."""
    res, remainder, defs = symmetrize(sp.expand(expr), *xs, formal=True)
    assert remainder == 0
    s_syms = [d[0] for d in defs]
    poly = sp.Poly(sp.expand(res), *s_syms) if s_syms else None
    out = {}
    if poly is None:
        if res != 0:
            out[""] = str(res)
        return out
    for exps, c in poly.terms():
        lam = []
        for i in reversed(range(len(exps))):
            lam += [i + 1] * exps[i]
        out[",".join(map(str, lam))] = str(c)
    return out


def complete_h(r, xs):
    from itertools import combinations_with_replacement

    return sp.Add(*[sp.Mul(*c) for c in combinations_with_replacement(xs, r)]) if r else sp.Integer(1)


def schur_bialternant(lam, xs):
    n = len(xs)
    lam = list(lam) + [0] * (n - len(lam))
    num = sp.Matrix(n, n, lambda i, j: xs[j] ** (lam[i] + n - 1 - i)).det()
    den = sp.Matrix(n, n, lambda i, j: xs[j] ** (n - 1 - i)).det()
    return sp.cancel(num / den)


def hilbert_series(gens, variables, weights):
    """Weighted Hilbert series (in t = q^2) of Q[vars]/(gens) by Groebner basis."""
    if not gens:
        raise ValueError
    G = sp.groebner(gens, *variables, order="grevlex")
    lead = [sp.Poly(g, *variables).monoms(order="grevlex")[0] for g in G.exprs]
    counts = {}
    top = 60
    # enumerate standard monomials; the quotient is finite so this terminates
    def rec(i, mono, deg):
        if i == len(variables):
            if not any(all(m >= l for m, l in zip(mono, L)) for L in lead):
                counts[deg] = counts.get(deg, 0) + 1
            return
        e = 0
        while deg + e * weights[i] <= top:
            m2 = mono + (e,)
            # prune: if a prefix is already divisible with zeros after, it stays divisible
            if any(all(a >= b for a, b in zip(m2, L[: i + 1])) and all(b == 0 for b in L[i + 1:]) for L in lead):
                break
            rec(i + 1, m2, deg + e * weights[i])
            e += 1

    rec(0, (), 0)
    return {str(2 * d): str(c) for d, c in sorted(counts.items())}


def grass_gens(k, N):
    cs = sp.symbols(f"c1:{k + 1}")
    # relations: homogeneous parts of 1/C(t) of degree N-k+1..N vanish
    t = sp.Symbol("t")
    C = 1 + sum(cs[i] * t ** (i + 1) for i in range(k))
    ser = sp.series(1 / C, t, 0, N + 1).removeO()
    gens = [sp.expand(ser.coeff(t, d)) for d in range(N - k + 1, N + 1)]
    return gens, list(cs), list(range(1, k + 1))


def flag_gens(k, N):
    cs = list(sp.symbols(f"c1:{k + 1}")) if k else []
    xi = sp.Symbol("xi")
    t = sp.Symbol("t")
    C = 1 + sum(cs[i] * t ** (i + 1) for i in range(k))
    ser = sp.series(1 / (C * (1 + xi * t)), t, 0, N + 1).removeO()
    gens = [sp.expand(ser.coeff(t, d)) for d in range(N - k, N + 1)]
    return gens, cs + [xi], list(range(1, k + 1)) + [1]


def main():
    data = {}
    data["qint"] = {str(n): laurent_dict(qint(n)) for n in range(-20, 21)}
    data["qfact"] = {str(a): laurent_dict(sp.prod([qint(j) for j in range(1, a + 1)])) for a in range(0, 7)}
    data["gauss_q2"] = {
        f"{N},{k}": laurent_dict(qbinom_t(N, k, q**2)) for N in range(0, 11) for k in range(0, N + 1)
    }
    data["gauss_q"] = {f"{N},{k}": laurent_dict(qbinom_t(N, k, q)) for N in range(0, 9) for k in range(0, N + 1)}
    data["series_q_over_1mq2"] = laurent_dict(sp.series(q / (1 - q**2), q, 0, 6).removeO())

    # h_r in the e-basis, by symmetrizing the honest polynomial in r variables
    data["h_in_e"] = {}
    for r in range(0, 7):
        xs = sp.symbols(f"x1:{max(r, 1) + 1}")
        data["h_in_e"][str(r)] = e_basis(complete_h(r, xs), len(xs), xs)

    # Schur functions by the bialternant formula, in |lam| variables
    data["schur"] = {}
    for n in range(1, 6):
        for p in sp_partitions(n):
            lam = sorted([k for k, m in p.items() for _ in range(m)], reverse=True)
            xs = sp.symbols(f"x1:{n + 1}")
            data["schur"][",".join(map(str, lam))] = e_basis(schur_bialternant(lam, xs), n, xs)

    # Grassmannian and flag Hilbert series by Groebner bases
    data["grass_hilbert"] = {}
    for N in range(1, 7):
        for k in range(1, N):
            gens, vs, ws = grass_gens(k, N)
            data["grass_hilbert"][f"{k},{N}"] = hilbert_series(gens, vs, ws)
    data["flag_hilbert"] = {}
    for N in range(1, 6):
        for k in range(0, N):
            gens, vs, ws = flag_gens(k, N)
            data["flag_hilbert"][f"{k},{N}"] = hilbert_series(gens, vs, ws)

    # divided differences on a few polynomials in 3 variables
    x1, x2, x3 = xs3 = sp.symbols("x1:4")
    samples = [x1**2, x1**3 * x2, x1**2 * x2 * x3 + 3 * x3**4, x1 * x2 - 5 * x2**3 * x3]
    dd = []
    for f in samples:
        row = {"f": str(f)}
        for i in (1, 2):
            a, b = xs3[i - 1], xs3[i]
            sf = f.subs({a: b, b: a}, simultaneous=True)
            row[f"d{i}"] = str(sp.expand(sp.cancel((f - sf) / (a - b))))
        dd.append(row)
    data["divided_differences"] = dd

    # dot slide: d1 x1^3 - x2^3 d1 acting on monomials equals multiplication by sum x1^f1 x2^f2
    x1, x2 = sp.symbols("x1:3")
    lhs_poly = sp.expand(sum(x1**f * x2 ** (2 - f) for f in range(3)))
    data["dot_slide_3"] = str(lhs_poly)

    # E^(2)E^(2) = [4]!/([2]![2]!) E^(4): the balanced quantum binomial
    qf = lambda a: sp.prod([qint(j) for j in range(1, a + 1)])
    data["udot_divided_ratio"] = laurent_dict(qf(4) / (qf(2) * qf(2)))

    OUT.write_text(json.dumps(data, indent=1, sort_keys=True) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
