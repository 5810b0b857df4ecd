"""Cyclotomic quotients NH_a^N = NH_a / (xi_1^N).

Two independent computations meet here.  On the matrix side theta(xi_1) is
block diagonal with companion blocks, and a column of block^N reproduces the
Grassmannian relations, so the quotient should be Mat(a!, H*(Gr(a, N))).
On the algebra side the quotient is spanned degree by degree with plain
linear algebra in the monomial basis xi^beta d_w.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb, factorial

from .grasscoh import ideal_contains, ideal_generators, reduce_to_schur, cpoly_ring, graded_dimension_gr
from .linalg import Echelon
from .multipoly import MultiPoly
from .nilhecke import (
    NilHeckeElt,
    Permutation,
    SymMatrix,
    _compositions,
    _d_times_d,
    _perms,
    _push,
    check_size,
    companion_block,
    theta_matrix,
)
from .qscalar import LaurentPoly, gauss_binomial, t_factorial


@dataclass
class CycloReport:
    a: int
    N: int
    block: SymMatrix
    rotated_column: list
    ideal_match: bool
    other_columns_in_ideal: bool = True
    graded_dim_quotient: LaurentPoly = None
    graded_dim_matrix_ring: LaurentPoly = None
    column_polys: list = field(default_factory=list)


def _check(a, N, max_strands=None):
    if a < 1 or N < 0:
        raise ValueError(f"need 1 <= a <= N, got a={a}, N={N}")
    if a > N:
        raise ValueError(f"a={a} exceeds N={N}: the cyclotomic quotient is outside the supported range")
    check_size(a, max_strands)


def symfunc_to_cpoly(f, k):
    """e_lam -> c_lam in Q[c_1..c_k]; parts larger than k vanish."""
    out = cpoly_ring(k)
    for lam, c in f.terms.items():
        if lam and lam[0] > k:
            continue
        e = [0] * k
        for p in lam:
            e[p - 1] += 1
        out = out + MultiPoly(k, {tuple(e): c}, var="c", weights=range(1, k + 1))
    return out


def cyclotomic_ideal_image(a, N, max_strands=None):
    _check(a, N, max_strands)
    block = companion_block(a)
    theta_block = theta_matrix(NilHeckeElt.xi(1, a), max_strands).block(0, a)
    if theta_block != block:
        raise RuntimeError("theta(xi_1) does not have the companion block shape")
    low = block ** (N - a + 1)
    high = low * block ** (a - 1)
    rotated = low.column(0)
    if high.column(a - 1) != rotated:
        raise RuntimeError("last column of block^N differs from the first column of block^(N-a+1)")
    polys = [symfunc_to_cpoly(f, a) for f in rotated]
    gens = ideal_generators(a, N).generators
    weights = tuple(range(1, a + 1))
    reduces = all(reduce_to_schur(p, a, N).is_zero() for p in polys)
    generated = all(ideal_contains(polys, weights, g) for g in gens)
    others = all(
        ideal_contains(polys, weights, symfunc_to_cpoly(f, a))
        for j in range(a - 1)
        for f in high.column(j)
        if f
    )
    return CycloReport(a, N, block, rotated, reduces and generated, others, column_polys=polys)


def cyclotomic_dimension(a, N, max_strands=None):
    """Total and graded dimension of Mat(a!, H*(Gr(a, N))).

    The staircase basis has graded rank (a)!_{q^2}; the matrix ring is
    graded by the difference of row and column degrees.
    """
    _check(a, N, max_strands)
    rank = t_factorial(a, 2)
    graded = rank * rank.bar() * gauss_binomial(N, a, "q2")
    total = factorial(a) ** 2 * comb(N, a)
    assert graded.at_one() == total
    return total, graded


class InconclusiveError(RuntimeError):
    pass


def _slice_basis(a, d, perms):
    out = []
    for w in perms:
        s = d + 2 * w.length()
        if s < 0 or s % 2:
            continue
        for beta in _compositions(s // 2, a):
            out.append((w, beta))
    return out


def quotient_slice_dimension(a, N, d, perms=None):
    """dim of the degree-d part of NH_a / (xi_1^N)."""
    if perms is None:
        perms = sorted(Permutation(p) for p in _perms(a))
    basis = _slice_basis(a, d, perms)
    if not basis:
        return 0
    ech = Echelon(order=basis)
    full = len(basis)
    # xi^beta d_w xi_1^N xi^gamma d_w' spans the two-sided ideal
    for w in perms:
        for w2 in perms:
            s = d // 2 - N + w.length() + w2.length()
            if s < 0 or d % 2:
                continue
            for g_size in range(s + 1):
                for gamma in _compositions(g_size, a):
                    exps = (gamma[0] + N,) + gamma[1:]
                    pushed = _push(w, exps)
                    for beta in _compositions(s - g_size, a):
                        vec = {}
                        for v, h in pushed:
                            vw = _d_times_d(v, w2)
                            if vw is None:
                                continue
                            for e, c in h.items():
                                key = (vw, tuple(x + y for x, y in zip(e, beta)))
                                vec[key] = vec.get(key, 0) + c
                        if ech.add(vec) and ech.rank == full:
                            return 0
    return full - ech.rank


def cyclotomic_oracle_dimension(a, N, max_extra_degree=4, degree_guard=None):
    """Graded dimension of NH_a/(xi_1^N) by brute-force linear algebra.

    Degrees are scanned upward from -a(a-1), the lowest degree present in
    NH_a; the scan stops after ``max_extra_degree`` consecutive zero slices
    following a nonzero one.
    """
    if a < 1 or N < 1:
        raise ValueError("need a >= 1 and N >= 1")
    perms = sorted(Permutation(p) for p in _perms(a))
    if degree_guard is None:
        degree_guard = 2 * a * N + 2 * a * a + 4 * max_extra_degree
    d = -a * (a - 1)
    out = {}
    zeros = 0
    seen = False
    while True:
        if d > degree_guard:
            raise InconclusiveError(f"no termination below degree {degree_guard}; raise the guard")
        dim = quotient_slice_dimension(a, N, d, perms)
        if dim:
            out[d] = dim
            seen = True
            zeros = 0
        else:
            zeros += 1
            if seen and zeros >= max_extra_degree:
                break
        d += 2
    return LaurentPoly(out)
