from itertools import product

import pytest

from affcell.based_algebra import AlgebraElement, check_associativity
from affcell.corpus.qschur import (
    TensorSpaceSchur,
    compositions,
    diagonal,
    gen_qschur,
    matrices,
    matrix_label,
    orbit_type,
    young_longest,
    young_longest_idempotent,
)
from affcell.laurent import LaurentPoly


def classical_constant(n, r, A, B, C):
    """Coefficient of phi_C in phi_A phi_B at q = 1: count middle words j."""
    words = list(product(range(1, n + 1), repeat=r))
    i, k = next((i, k) for i in words for k in words if orbit_type(i, k, n) == C)
    return sum(1 for j in words if orbit_type(i, j, n) == A and orbit_type(j, k, n) == B)


@pytest.mark.parametrize("n,r,rank", [(2, 2, 10), (2, 3, 20)])
def test_rank_and_axioms(n, r, rank):
    alg = gen_qschur(n, r)
    assert alg.rank == rank
    alg.validate()
    assert check_associativity(alg)


@pytest.mark.parametrize("n,r", [(2, 2), (2, 3)])
def test_specializes_to_classical_schur_algebra(n, r):
    alg = gen_qschur(n, r)
    mats = matrices(n, r)
    lbl = {A: matrix_label(A) for A in mats}
    for A in mats:
        for B in mats:
            for C in mats:
                c = alg.coeff(lbl[A], lbl[B], lbl[C]).evaluate(1)
                assert c == classical_constant(n, r, A, B, C)


@pytest.mark.parametrize("n,r", [(2, 2), (2, 3)])
def test_phi_commutes_with_hecke_action(n, r):
    S = TensorSpaceSchur(n, r)
    for A in S.basis:
        assert S.check_hecke_linear(A)


def test_quadratic_relation(q22):
    # phi for the antidiagonal of weight (1,1) is T_1 on M^(1,1): T^2 = (q-1)T + q
    q = LaurentPoly({2: 1})
    assert q22.product("[0,1;1,0]", "[0,1;1,0]") == {"[0,1;1,0]": q - 1, "[1,0;0,1]": q}


@pytest.mark.parametrize("n,r", [(2, 2), (2, 3)])
def test_units_orthogonal_and_sum_to_identity(n, r):
    alg = gen_qschur(n, r)
    one = AlgebraElement({u: 1 for u in alg.units})
    for u in alg.units:
        for u2 in alg.units:
            want = alg.element(u) if u == u2 else AlgebraElement()
            assert alg.multiply(alg.element(u), alg.element(u2)) == want
    for b in alg.basis:
        x = alg.element(b)
        assert alg.multiply(one, x) == x == alg.multiply(x, one)


@pytest.mark.parametrize("n,r", [(2, 2), (2, 3)])
def test_young_idempotents(n, r):
    alg = gen_qschur(n, r)
    for lam in compositions(r, n):
        v, x = young_longest_idempotent(lam, alg)
        assert v, v.line()
        assert x == alg.element(matrix_label(diagonal(lam)))


def test_young_longest():
    assert young_longest((2, 0)) == (1, 0)
    assert young_longest((1, 1)) == (0, 1)
    assert young_longest((2, 1)) == (1, 0, 2)


def test_young_errors(q22):
    with pytest.raises(ValueError):
        young_longest_idempotent((3, 0), q22)
    with pytest.raises(ValueError):
        young_longest_idempotent((-1, 3), q22)


def test_involution_is_transpose(q23):
    assert q23.involution["[2,1;0,0]"] == "[2,0;1,0]"


@pytest.mark.parametrize("n,r", [(3, 2), (2, 4), (1, 1)])
def test_unsupported_sizes(n, r):
    with pytest.raises(ValueError):
        gen_qschur(n, r)
