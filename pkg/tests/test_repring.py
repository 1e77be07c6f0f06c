import itertools
import random
from collections import Counter
from functools import lru_cache

import pytest
from hypothesis import given, settings, strategies as st

from affcell.repring import (
    _lr,
    JRingElement,
    RepRingElement,
    dual_weight,
    j_matrix_iso,
    j_multiply,
    lr_coefficient,
    matrix_multiply,
    partitions,
    tensor_decompose,
    tensor_decompose_gl,
    weyl_dimension,
)


@lru_cache(maxsize=None)
def character(w):
    """Character of the GL_k irreducible of highest weight w, as a Counter of exponent vectors.

    Built from semistandard tableaux of the shifted shape; independent of the LR code.
    """
    k = len(w)
    m = max(0, -min(w)) if w else 0
    shape = [x + m for x in w]
    cells = [(r, c) for r, n in enumerate(shape) for c in range(n)]
    out = Counter()

    def fill(i, tab):
        if i == len(cells):
            exps = [m] * k
            for v in tab.values():
                exps[v] += 1
            out[tuple(exps)] += 1
            return
        r, c = cells[i]
        lo = 0
        if c > 0:
            lo = max(lo, tab[(r, c - 1)])
        if r > 0:
            lo = max(lo, tab[(r - 1, c)] + 1)
        for v in range(lo, k):
            tab[(r, c)] = v
            fill(i + 1, tab)
            del tab[(r, c)]

    fill(0, {})
    # undo the shift: every monomial was multiplied by (x_1...x_k)^m twice over
    return Counter({tuple(e - 2 * m for e in exps): c for exps, c in out.items()})


def char_product(a, b):
    out = Counter()
    for e1, c1 in character(a).items():
        for e2, c2 in character(b).items():
            out[tuple(x + y for x, y in zip(e1, e2))] += c1 * c2
    return out


def small_partitions(limit):
    return [p for n in range(limit + 1) for p in partitions(n)]


def test_lr_known_values():
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((1,), (1,), (1, 1)) == 1
    assert lr_coefficient((2,), (1,), (3, 1)) == 0
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((), (2, 1), (2, 1)) == 1


def test_lr_symmetry_up_to_five():
    # the raw enumeration fills nu/lam with content mu, so swapping is a real check
    parts = small_partitions(5)
    for lam in parts:
        for mu in parts:
            n = sum(lam) + sum(mu)
            for nu in partitions(n):
                assert _lr(lam, mu, nu) == _lr(mu, lam, nu)


@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_weyl_dimension_consistency(k):
    rng = random.Random(k)
    weights = {tuple(sorted((rng.randint(-2, 3) for _ in range(k)), reverse=True)) for _ in range(12)}
    for a in weights:
        for b in weights:
            total = sum(c * weyl_dimension(nu) for nu, c in tensor_decompose_gl(a, b))
            assert total == weyl_dimension(a) * weyl_dimension(b)


@pytest.mark.parametrize("k", [1, 2, 3])
def test_tensor_matches_characters(k):
    ws = sorted({tuple(sorted(t, reverse=True)) for t in itertools.product(range(-1, 3), repeat=k)})
    for a in ws:
        for b in ws:
            want = char_product(a, b)
            got = Counter()
            for nu, c in tensor_decompose_gl(a, b):
                for e, m in character(nu).items():
                    got[e] += c * m
            assert got == want, (a, b)


def test_weyl_dimension_matches_character():
    for w in [(2, 0), (1, -1), (3, 1, 0), (2, 1, -1), (1, 1, 0, -2)]:
        assert weyl_dimension(w) == sum(character(w).values())


def test_gl2_determinant_shift():
    got = dict(tensor_decompose_gl((0, -1), (1, 0)))
    assert got == {(1, -1): 1, (0, 0): 1}


weights2 = st.tuples(st.integers(-2, 2), st.integers(-2, 2)).map(lambda t: tuple(sorted(t, reverse=True)))
labels = st.tuples(weights2, st.tuples(st.integers(-1, 1)))
elements = st.dictionaries(labels, st.integers(-3, 3), max_size=3).map(lambda d: RepRingElement((2, 1), d))


@settings(max_examples=60, deadline=None)
@given(elements, elements, elements)
def test_rep_ring_axioms_and_dual(x, y, z):
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x * (y + z) == x * y + x * z
    assert x.dual().dual() == x
    assert (x * y).dual() == x.dual() * y.dual()
    assert (x + y).dual() == x.dual() + y.dual()
    assert (x * y).dimension() == x.dimension() * y.dimension()


def test_dual_weight():
    assert dual_weight(((2, 0, -1), (3,))) == ((1, 0, -2), (-3,))
    one = RepRingElement.one((2, 1))
    assert one.dual() == one


def test_tensor_decompose_multi_factor():
    x = tensor_decompose(((1, 0), (1,)), ((1, 0), (-1,)), (2, 1))
    assert x == RepRingElement((2, 1), {((2, 0), (0,)): 1, ((1, 1), (0,)): 1})
    with pytest.raises(ValueError):
        tensor_decompose(((1, 0),), ((1,),), (2,))


def random_j(rng, n=2):
    terms = {}
    for _ in range(rng.randint(1, 3)):
        a, b = sorted((rng.randint(-2, 2), rng.randint(-2, 2)), reverse=True)
        terms[(rng.randint(1, n), rng.randint(1, n), ((a, b),))] = rng.randint(-2, 2)
    return JRingElement(n, (2,), terms)


def test_j_matrix_iso_multiplicative():
    rng = random.Random(2024)
    zero = RepRingElement.zero((2,))
    for _ in range(1000):
        x, y = random_j(rng), random_j(rng)
        assert j_matrix_iso(j_multiply(x, y)) == matrix_multiply(j_matrix_iso(x), j_matrix_iso(y), zero)


def test_j_ring_rejects_bad_index():
    with pytest.raises(ValueError):
        JRingElement(2, (2,), {(3, 1, ((0, 0),)): 1})


def test_weight_validation():
    with pytest.raises(ValueError):
        weyl_dimension((0, 1))
