import os
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import given
from hypothesis import strategies as st

from catsl2 import _pykernels as py
from catsl2 import kernels
from catsl2.linalg import MODULUS

try:
    from catsl2 import _ckernels as cy
except ImportError:  # extension not built
    cy = None

needs_c = pytest.mark.skipif(cy is None, reason="compiled kernels not built")

coef = st.one_of(st.integers(-50, 50), st.fractions(max_denominator=7))
polys = st.integers(2, 4).flatmap(
    lambda n: st.dictionaries(st.lists(st.integers(0, 5), min_size=n, max_size=n).map(tuple), coef, max_size=6)
)
rows = st.dictionaries(st.integers(0, 12), st.integers(-9, 9).filter(bool), max_size=6)


def test_backend_selection():
    assert kernels.BACKEND in ("cython", "python")
    env = dict(os.environ, CATSL2_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import catsl2; print(catsl2.BACKEND)"], env=env, capture_output=True, text=True
    )
    assert out.stdout.strip() == "python"


@needs_c
def test_compiled_backend_active():
    assert kernels.BACKEND == "cython"


def _clean(p):
    return {e: c for e, c in p.items() if c}


@needs_c
@given(polys, polys)
def test_poly_parity(a, b):
    a, b = _clean(a), _clean(b)
    if a and b and len(next(iter(a))) != len(next(iter(b))):
        return
    assert py.poly_mul(a, b) == cy.poly_mul(a, b)
    assert py.poly_add_scaled(dict(a), b, 3) == cy.poly_add_scaled(dict(a), b, 3)
    if a:
        n = len(next(iter(a)))
        for i in range(n - 1):
            assert py.poly_swap(a, i) == cy.poly_swap(a, i)
            assert py.divided_difference(a, i) == cy.divided_difference(a, i)


@given(polys)
def test_divided_difference_definition(a):
    # (x_i - x_{i+1}) * d_i(f) == f - s_i f
    a = _clean(a)
    if not a:
        return
    n = len(next(iter(a)))
    for i in range(n - 1):
        xi = tuple(1 if j == i else 0 for j in range(n))
        xj = tuple(1 if j == i + 1 else 0 for j in range(n))
        lhs = py.poly_mul({xi: 1, xj: -1}, py.divided_difference(a, i))
        rhs = py.poly_add_scaled(dict(a), py.poly_swap(a, i), -1)
        assert lhs == rhs


@needs_c
@given(st.lists(rows, max_size=12))
def test_elimination_parity(rs):
    pp, pc = {}, {}
    for r in rs:
        assert py.insert_row(pp, dict(r)) == cy.insert_row(pc, dict(r))
    assert pp == pc
    assert py.rank(rs) == cy.rank(rs)
    mp, mc = {}, {}
    for r in rs:
        assert py.insert_row_mod(mp, dict(r), MODULUS) == cy.insert_row_mod(mc, dict(r), MODULUS)
    assert mp == mc


@given(st.lists(rows, max_size=12))
def test_rank_matches_fraction_elimination(rs):
    # plain Gaussian elimination over Fractions as the reference
    mat = [[Fraction(r.get(j, 0)) for j in range(13)] for r in rs]
    rank = 0
    for col in range(13):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][col]:
                f = mat[i][col] / mat[rank][col]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[rank])]
        rank += 1
    assert py.rank(rs) == rank
    assert kernels.rank(rs) == rank
    mod = {}
    assert sum(py.insert_row_mod(mod, dict(r), MODULUS) for r in rs) == rank


def test_reduce_row_membership():
    pivots = {}
    py.insert_row(pivots, {0: 2, 1: 4})
    py.insert_row(pivots, {1: 3, 2: 1})
    assert py.reduce_row(pivots, {0: 1, 1: 2}) == {}
    assert py.reduce_row(pivots, {0: 2, 1: 7, 2: 1}) == {}
    assert py.reduce_row(pivots, {2: 1}) != {}


def test_benchmark_quick_run():
    import io
    import runpy

    bench = runpy.run_path(str(Path(__file__).parent.parent / "benchmarks" / "bench_kernels.py"))
    buf = io.StringIO()
    rows = bench["run"](quick=True, out=buf)
    assert [r[0] for r in rows] == ["poly_mul", "divided_difference", "insert_row", "insert_row_mod"]
    assert buf.getvalue().startswith("kernel")
