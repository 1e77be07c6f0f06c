from itertools import combinations

import pytest

from affcell.corpus.hecke import HeckeKL, LETTERS, bruhat_leq, compose, gen_hecke_kl, length
from affcell.laurent import LaurentPoly, V

VV = V + V ** -1


def subword_ideal(H, w):
    """Elements below w in Bruhat order, by the subword property."""
    word = H.word[w]
    out = set()
    for k in range(len(word) + 1):
        for pos in combinations(range(len(word)), k):
            x = H.identity
            for p in pos:
                x = compose(x, H.gens[LETTERS.index(word[p])])
            out.add(x)
    return out


@pytest.mark.parametrize("m", [1, 2, 3])
def test_bruhat_matches_subword_property(m):
    H = HeckeKL(m)
    for w in H.perms:
        below = subword_ideal(H, w)
        for y in H.perms:
            assert bruhat_leq(y, w) == (y in below)


@pytest.mark.parametrize("m", [2, 3])
def test_kl_basis_is_bar_invariant_and_unitriangular(m):
    # these two properties characterize the KL basis uniquely
    H = HeckeKL(m)
    for w in H.perms:
        cw = H.kl[w]
        assert H.bar(cw) == cw
        assert cw[w] == LaurentPoly.const(1)
        for y, h in cw.items():
            if y != w:
                assert h.min_degree() >= 1
                assert bruhat_leq(y, w)


@pytest.mark.parametrize("m", [2, 3, 4])
def test_kl_polynomial_invariants(m):
    H = HeckeKL(m)
    for w in H.perms:
        assert H.kl_polynomial(w, w) == [1]
        for y in H.perms:
            p = H.kl_polynomial(y, w)
            if not bruhat_leq(y, w):
                assert p == []
            elif y != w:
                assert p[0] == 1
                assert 2 * (len(p) - 1) <= H.length[w] - H.length[y] - 1


def test_s3_kl_polynomials_trivial(kl3):
    assert all(kl3.kl_polynomial(y, w) in ([], [1]) for y in kl3.perms for w in kl3.perms)


def test_s4_singular_loci(kl4):
    # P = 1 + q exactly for the six pairs below 3412 and 4231
    nontrivial = [(y, w) for y in kl4.perms for w in kl4.perms if len(kl4.kl_polynomial(y, w)) > 1]
    assert len(nontrivial) == 6
    assert all(kl4.kl_polynomial(y, w) == [1, 1] for y, w in nontrivial)
    tops = {w for _, w in nontrivial}
    assert tops == {(2, 3, 0, 1), (3, 1, 2, 0)}


@pytest.mark.parametrize("m", [1, 2, 3])
def test_structure_constants_match_standard_basis(m):
    H = HeckeKL(m)
    table = H.structure_constants()
    for x in H.perms:
        for y in H.perms:
            assert table[(x, y)] == H.kl_multiply_via_standard(x, y)


def test_s5_structure_constants_spot_check():
    H = HeckeKL(4)
    table = H.structure_constants()
    for x in H.perms[::7]:
        for y in H.perms[::11]:
            assert table[(x, y)] == H.kl_multiply_via_standard(x, y)


def test_named_products(s2, s3):
    assert s2.rank == 2
    assert s2.product("cs", "cs") == {"cs": VV}
    assert s3.rank == 6
    assert s3.basis == ("e", "cs", "ct", "cst", "cts", "csts")
    assert s3.product("cs", "cts") == {"csts": LaurentPoly.const(1), "cs": LaurentPoly.const(1)}
    assert s3.product("csts", "csts") == {"csts": VV * VV * VV - VV}


def test_involution_is_inverse(s4):
    H = HeckeKL(3)
    for w in H.perms:
        inv = tuple(sorted(range(len(w)), key=w.__getitem__))
        assert s4.involution[H.label[w]] == H.label[inv]


@pytest.mark.parametrize("m", [0, 5, 9, "2"])
def test_unsupported_rank(m):
    with pytest.raises(ValueError):
        gen_hecke_kl(m)


def test_length_counts_inversions():
    assert length((0, 1, 2)) == 0
    assert length((2, 1, 0)) == 3
