"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py            # full run
    python benchmarks/bench_kernels.py --quick    # small inputs, one repeat

Both backends get identical inputs and must return identical results; the
table reports the best wall time of several repeats and the speedup.
"""

import argparse
import random
import sys
import time

from catsl2 import _pykernels
from catsl2.grasscoh import flag_relations, weighted_monomials
from catsl2.linalg import MODULUS

try:
    from catsl2 import _ckernels
except ImportError:
    _ckernels = None


def random_poly(rng, nvars, terms, max_exp):
    return {tuple(rng.randint(0, max_exp) for _ in range(nvars)): rng.randint(-9, 9) or 1 for _ in range(terms)}


def slice_rows(k, N, d):
    """Integer rows spanning the half-degree d part of the flag ideal, in the
    column order the library uses."""
    gens, weights = flag_relations(k, N)
    order = weighted_monomials(weights, d)[::-1]
    columns = {m: i for i, m in enumerate(order)}
    rows = []
    for g in gens:
        e0 = next(iter(g.terms))
        gd = sum(w * x for w, x in zip(weights, e0))
        if gd > d:
            continue
        for m in weighted_monomials(weights, d - gd):
            row = {}
            for e, c in g.terms.items():
                col = columns[tuple(x + y for x, y in zip(e, m))]
                row[col] = row.get(col, 0) + int(c)
            rows.append({c: v for c, v in row.items() if v})
    return rows


def workloads(quick):
    rng = random.Random(7)
    size = 15 if quick else 60
    a = [random_poly(rng, 4, size, 6) for _ in range(4)]
    b = [random_poly(rng, 4, size, 6) for _ in range(4)]
    dd = [random_poly(rng, 4, 4 * size, 10) for _ in range(8)]
    k, N, d = (2, 5, 5) if quick else (5, 10, 18)
    rows = slice_rows(k, N, d)

    def mul(m):
        return [m.poly_mul(x, y) for x, y in zip(a, b)]

    def divdiff(m):
        return [m.divided_difference(f, i) for f in dd for i in range(3)]

    def exact(m):
        pivots = {}
        return sum(m.insert_row(pivots, dict(r)) for r in rows)

    def modular(m):
        pivots = {}
        return sum(m.insert_row_mod(pivots, dict(r), MODULUS) for r in rows)

    return [
        ("poly_mul", f"4 products of {size}-term polynomials", mul),
        ("divided_difference", f"24 applications on {4 * size}-term polynomials", divdiff),
        ("insert_row", f"flag({k},{N}) slice d={d}, {len(rows)} rows", exact),
        ("insert_row_mod", f"same slice mod {MODULUS}", modular),
    ]


def best_time(fn, module, repeat):
    best = None
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(module)
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def run(quick=False, out=sys.stdout):
    repeat = 1 if quick else 5
    print(f"{'kernel':<20} {'python (ms)':>12} {'cython (ms)':>12} {'speedup':>8}  workload", file=out)
    rows = []
    for name, desc, fn in workloads(quick):
        tp, rp = best_time(fn, _pykernels, repeat)
        if _ckernels is None:
            print(f"{name:<20} {tp * 1e3:12.2f} {'n/a':>12} {'n/a':>8}  {desc}", file=out)
            rows.append((name, tp, None))
            continue
        tc, rc = best_time(fn, _ckernels, repeat)
        if rp != rc:
            raise AssertionError(f"{name}: backends disagree")
        print(f"{name:<20} {tp * 1e3:12.2f} {tc * 1e3:12.2f} {tp / tc:7.2f}x  {desc}", file=out)
        rows.append((name, tp, tc))
    return rows


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true", help="small inputs and a single repeat")
    args = ap.parse_args(argv)
    if _ckernels is None:
        print("compiled extension not built; timing the fallback only", file=sys.stderr)
    run(args.quick)


if __name__ == "__main__":
    main()
