from itertools import permutations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from catsl2.linalg import Echelon
from catsl2.multipoly import MultiPoly
from catsl2.nilhecke import (
    NilHeckeElt,
    Permutation,
    SymMatrix,
    companion_block,
    delta,
    divided_difference,
    nh_act,
    nh_e_idempotent,
    nh_monomials,
    permutation_from_word,
    staircase_decompose,
    staircase_exponents,
    staircase_recombine,
    theta_matrix,
)
from catsl2.symfunc import SymFunc, evaluate_in_vars

from conftest import xpoly
from shared import nh_relations

X = NilHeckeElt.xi
D = NilHeckeElt.d


# --------------------------------------------------------------------------
# permutations

def test_permutation_basics():
    w0 = Permutation.longest(3)
    assert w0.length() == 3
    assert w0.reduced_word() == (1, 2, 1)
    assert permutation_from_word((1, 2, 1), 3) == w0
    assert Permutation.simple(2, 3).compose(Permutation.simple(2, 3)) == Permutation.identity(3)
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))


def test_reduced_words_are_lexicographically_smallest():
    for a in range(1, 5):
        for p in permutations(range(1, a + 1)):
            w = Permutation(p)
            word = w.reduced_word()
            assert len(word) == w.length()
            assert permutation_from_word(word, a) == w
            assert word == min(_all_reduced_words(w))


def _all_reduced_words(w):
    if w.length() == 0:
        return [()]
    out = []
    for i in range(1, len(w)):
        if w.has_left_descent(i):
            out += [(i,) + rest for rest in _all_reduced_words(w.left_simple(i))]
    return out


def test_d_w_independent_of_reduced_word():
    a = 4
    for p in permutations(range(1, a + 1)):
        w = Permutation(p)
        for word in _all_reduced_words(w):
            prod = NilHeckeElt.one(a)
            for i in word:
                prod = prod * D(i, a)
            assert prod == NilHeckeElt.d_w(w)


# --------------------------------------------------------------------------
# divided differences and the action

def test_divided_difference_examples():
    x = lambda i: MultiPoly.gen(2, i)
    assert divided_difference(1, x(1)) == 1
    assert divided_difference(1, x(1) * x(2)) == 0
    assert divided_difference(1, x(1) ** 2) == x(1) + x(2)
    with pytest.raises(ValueError):
        divided_difference(2, x(1))


def test_divided_difference_oracle(frozen):
    for row in frozen["divided_differences"]:
        f = xpoly(row["f"], 3)
        for i in (1, 2):
            assert divided_difference(i, f) == xpoly(row[f"d{i}"], 3)


def test_action_examples():
    a = 2
    assert nh_act(D(1, a), MultiPoly.gen(a, 1)) == 1
    assert nh_act(X(2, a), MultiPoly.const(a)) == MultiPoly.gen(a, 2)
    assert nh_act(X(1, a) * D(1, a), MultiPoly.gen(a, 1)) == MultiPoly.gen(a, 1)


def test_multiplication_examples(frozen):
    a = 2
    assert D(1, a) * D(1, a) == 0
    assert X(1, a) * D(1, a) - D(1, a) * X(2, a) == NilHeckeElt.one(a)
    slide = D(1, a) * X(1, a) ** 3 - X(2, a) ** 3 * D(1, a)
    assert slide == NilHeckeElt.poly(xpoly(frozen["dot_slide_3"], 2))


def test_dot_slide_by_operator_oracle():
    # compare both sides as operators on all monomials of degree <= 8
    a = 2
    for alpha in range(1, 6):
        lhs = D(1, a) * X(1, a) ** alpha - X(2, a) ** alpha * D(1, a)
        rhs = sum((MultiPoly.monomial((f, alpha - 1 - f)) for f in range(alpha)), MultiPoly(a))
        for i in range(5):
            for j in range(5 - i):
                m = MultiPoly.monomial((i, j))
                assert nh_act(lhs, m) == rhs * m


@pytest.mark.parametrize("a", [1, 2, 3, 4])
def test_relations_symbolic(a):
    for lhs, rhs in nh_relations(a):
        assert lhs == rhs


def polys(a, max_deg=10):
    monos = st.lists(st.integers(0, max_deg // a), min_size=a, max_size=a).map(tuple)
    return st.dictionaries(monos, st.integers(-5, 5), max_size=5).map(lambda t: MultiPoly(a, t))


@given(st.integers(2, 4).flatmap(lambda a: polys(a)))
def test_relations_as_operators(f):
    a = f.nvars
    for lhs, rhs in nh_relations(a):
        assert nh_act(lhs, f) == nh_act(rhs, f)


def nh_elements(a):
    perm = st.sampled_from([Permutation(p) for p in permutations(range(1, a + 1))])
    return st.dictionaries(perm, polys(a, 4).filter(bool), max_size=3).map(lambda t: NilHeckeElt(a, t))


@given(st.integers(2, 3).flatmap(lambda a: st.tuples(nh_elements(a), nh_elements(a), polys(a, 6))))
def test_multiplication_is_composition(data):
    x, y, f = data
    assert nh_act(x * y, f) == nh_act(x, nh_act(y, f))


@given(st.integers(2, 3).flatmap(lambda a: st.tuples(polys(a, 6), polys(a, 6))))
def test_twisted_leibniz(fg):
    f, g = fg
    for i in range(1, f.nvars):
        assert divided_difference(i, f * g) == divided_difference(i, f) * g + f.swap(i) * divided_difference(i, g)


@given(st.integers(2, 4).flatmap(lambda a: polys(a, 8)))
def test_longest_divided_difference_is_symmetric(f):
    g = nh_act(NilHeckeElt.d_w(Permutation.longest(f.nvars)), f)
    assert g.is_symmetric()


def test_longest_divided_difference_of_delta():
    for a in range(1, 5):
        assert nh_act(NilHeckeElt.d_w(Permutation.longest(a)), delta(a)) == 1


# --------------------------------------------------------------------------
# staircase basis

def test_staircase_order():
    assert staircase_exponents(2) == [(1, 0), (0, 0)]
    basis = staircase_exponents(3)
    assert len(basis) == 6
    assert basis[:3] == [(2, 0, 0), (1, 0, 0), (0, 0, 0)]


def test_staircase_examples():
    a = 3
    d = staircase_decompose(MultiPoly.gen(a, a))
    assert d == {(0, 0, 0): SymFunc.e(1), (1, 0, 0): SymFunc.coerce(-1), (0, 1, 0): SymFunc.coerce(-1)}
    d = staircase_decompose(MultiPoly.gen(a, 1) ** 3)
    assert d == {(2, 0, 0): SymFunc.e(1), (1, 0, 0): -SymFunc.e(2), (0, 0, 0): SymFunc.e(3)}
    assert staircase_decompose(MultiPoly.const(a)) == {(0, 0, 0): SymFunc.one()}


@given(st.integers(1, 4).flatmap(lambda a: polys(a, 9)))
def test_staircase_roundtrip(f):
    d = staircase_decompose(f)
    assert all(all(e <= f.nvars - 1 - i for i, e in enumerate(alpha)) for alpha in d)
    assert staircase_recombine(d, f.nvars) == f


# --------------------------------------------------------------------------
# theta

def test_theta_examples():
    assert theta_matrix(X(1, 2)) == SymMatrix(2, [[SymFunc.e(1), 1], [-SymFunc.e(2), 0]])
    assert theta_matrix(NilHeckeElt.one(3)) == SymMatrix.identity(3, 6)
    assert theta_matrix(D(1, 2)) == SymMatrix(2, [[0, 0], [1, 0]])


@pytest.mark.parametrize("a", [2, 3, 4])
def test_theta_xi1_block_companion(a):
    m = theta_matrix(X(1, a))
    block = companion_block(a)
    n = m.size
    for start in range(0, n, a):
        assert m.block(start, a) == block
    for (i, j), _ in m.entries().items():
        assert i // a == j // a


def test_theta_size_bound():
    with pytest.raises(ValueError):
        theta_matrix(X(1, 5))
    assert theta_matrix(X(1, 2), max_strands=2).size == 2


@given(st.integers(2, 3).flatmap(lambda a: st.tuples(nh_elements(a), nh_elements(a))))
def test_theta_multiplicative(pair):
    x, y = pair
    assert theta_matrix(x * y) == theta_matrix(x) * theta_matrix(y)


def _flatten(m):
    return {(i, j, lam): c for (i, j), s in m.entries().items() for lam, c in s.terms.items()}


@pytest.mark.parametrize("a", [2, 3])
def test_theta_injective_degreewise(a):
    top = a * (a - 1)
    for d in range(-top, 9, 2):
        monos = nh_monomials(a, d)
        ech = Echelon()
        for x in monos:
            assert x.degrees() == {d}
            ech.add(_flatten(theta_matrix(x)))
        assert ech.rank == len(monos), d


# --------------------------------------------------------------------------
# the idempotent

def test_idempotent_examples():
    assert nh_e_idempotent(1) == NilHeckeElt.one(1)
    assert nh_e_idempotent(2) == X(1, 2) * D(1, 2)
    assert nh_e_idempotent(3) == X(1, 3) ** 2 * X(2, 3) * NilHeckeElt.d_w(Permutation.longest(3))


@pytest.mark.parametrize("a", [1, 2, 3, 4])
def test_idempotent_squares(a):
    e = nh_e_idempotent(a)
    assert e * e == e


@given(st.integers(2, 4).flatmap(lambda a: polys(a, 10)))
def test_idempotent_image(f):
    a = f.nvars
    g = nh_act(nh_e_idempotent(a), f)
    d = staircase_decompose(g)
    assert set(d) <= {tuple(delta(a).terms)[0]}
    quotient = evaluate_in_vars(d.get(tuple(delta(a).terms)[0], SymFunc.zero()), a)
    assert quotient.is_symmetric()
    assert quotient * delta(a) == g


def test_theta_of_e2_is_matrix_unit():
    assert theta_matrix(nh_e_idempotent(2)) == SymMatrix.unit(2, 2, 0, 0)
    assert theta_matrix(X(1, 2)) * theta_matrix(D(1, 2)) == SymMatrix.unit(2, 2, 0, 0)
