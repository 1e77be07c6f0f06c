import pytest

from affcell.corpus.hecke import HeckeKL, gen_hecke_kl
from affcell.corpus.qschur import gen_qschur


@pytest.fixture(scope="session")
def s2():
    return gen_hecke_kl(1)


@pytest.fixture(scope="session")
def s3():
    return gen_hecke_kl(2)


@pytest.fixture(scope="session")
def s4():
    return gen_hecke_kl(3)


@pytest.fixture(scope="session")
def hecke_corpus(s2, s3, s4):
    return [s2, s3, s4]


@pytest.fixture(scope="session")
def kl3():
    return HeckeKL(2)


@pytest.fixture(scope="session")
def kl4():
    return HeckeKL(3)


@pytest.fixture(scope="session")
def q22():
    return gen_qschur(2, 2)


@pytest.fixture(scope="session")
def q23():
    return gen_qschur(2, 3)


def matrix_units_doc(n=2):
    """M_n(Z) on matrix units, units e_ii, involution transpose."""
    basis = [f"e{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1)]
    products = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for l in range(1, n + 1):
                products.append({"left": f"e{i}{j}", "right": f"e{j}{l}",
                                 "result": [{"basis": f"e{i}{l}", "coeff": "1"}]})
    return {
        "name": f"M{n}(Z)",
        "basis": basis,
        "units": [f"e{i}{i}" for i in range(1, n + 1)],
        "sector": {f"e{i}{j}": [f"e{i}{i}", f"e{j}{j}"] for i in range(1, n + 1) for j in range(1, n + 1)},
        "involution": {f"e{i}{j}": f"e{j}{i}" for i in range(1, n + 1) for j in range(1, n + 1)},
        "products": products,
    }


@pytest.fixture
def m2_doc():
    return matrix_units_doc(2)
