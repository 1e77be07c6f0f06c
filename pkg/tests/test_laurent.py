import pytest
from hypothesis import given, strategies as st

from affcell.laurent import ONE, V, ZERO, LaurentPoly, lp_bar, lp_coeff_at, lp_max_degree, lp_mul, lp_sum

polys = st.dictionaries(st.integers(-6, 6), st.integers(-20, 20), max_size=5).map(LaurentPoly)


@given(polys, polys, polys)
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p + q) + r == p + (q + r)
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p + ZERO == p and p * ONE == p
    assert p - p == ZERO


@given(polys, polys)
def test_bar_is_ring_involution(p, q):
    assert p.bar().bar() == p
    assert lp_bar(p * q) == lp_bar(p) * lp_bar(q)
    assert (p + q).bar() == p.bar() + q.bar()


@given(polys, polys)
def test_degree_additive(p, q):
    if p and q:
        assert lp_max_degree(lp_mul(p, q)) == p.max_degree() + q.max_degree()
        assert (p * q).min_degree() == p.min_degree() + q.min_degree()
    else:
        assert lp_max_degree(p * q) is None


@given(polys)
def test_text_roundtrip(p):
    assert LaurentPoly.parse(str(p)) == p


@given(polys, polys, st.integers(1, 5))
def test_evaluate_is_homomorphism(p, q, x):
    from fractions import Fraction
    x = Fraction(x)
    assert (p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x)
    assert (p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x)


def test_zero_conventions():
    assert str(ZERO) == "0"
    assert ZERO.max_degree() is None
    assert lp_coeff_at(ZERO, 3) == 0
    assert ZERO == 0 and not ZERO


def test_canonical_text():
    p = V + V ** -1
    assert str(p) == "1*v^1 + 1*v^-1"
    assert str(LaurentPoly({0: -3, 2: 1})) == "1*v^2 + -3*v^0"


@pytest.mark.parametrize("text,terms", [
    ("v", {1: 1}),
    ("-v^2", {2: -1}),
    ("3", {0: 3}),
    ("2*v^-1 - 4*v^3", {-1: 2, 3: -4}),
    ("1*v^1 + -1*v^1", {}),
    ("0", {}),
])
def test_parse_shorthands(text, terms):
    assert LaurentPoly.parse(text).terms == terms


@pytest.mark.parametrize("text", ["", "v^", "2v", "x", "*v", "1**v"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        LaurentPoly.parse(text)


def test_quantum_two_squared():
    # (v + v^-1)^2 = v^2 + 2 + v^-2
    q2 = V + V ** -1
    assert q2 * q2 == LaurentPoly({2: 1, 0: 2, -2: 1})
    assert lp_sum([V, V, -V]) == V


def test_negative_power_needs_unit_monomial():
    assert (LaurentPoly({3: -1}) ** -2) == LaurentPoly({-6: 1})
    with pytest.raises(ValueError):
        (V + 1) ** -1
