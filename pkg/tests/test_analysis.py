import json

from affcell.analysis import analyze
from affcell.based_algebra import ba_load
from affcell.verdict import Verdict, combine

from conftest import matrix_units_doc
from test_asymptotic import scalar_square


def test_matrix_units_pass():
    r = analyze(ba_load(matrix_units_doc(3)))
    assert r.passed, [v.line() for v in r.failures()]
    assert r.cells[0].psi == [["1*v^0", "0", "0"], ["0", "1*v^0", "0"], ["0", "0", "1*v^0"]]


def test_s4_and_s5_pass(s4):
    from affcell.corpus.hecke import gen_hecke_kl
    for alg in (s4, gen_hecke_kl(4)):
        r = analyze(alg)
        assert r.passed, [v.line() for v in r.failures()]


def test_p2_failure_cascades_without_crashing():
    r = analyze(scalar_square())
    assert not r.passed
    names = {v.name for v in r.failures()}
    assert "P2(a) generalized unit of A_c^inf" in names
    assert "labelings agree" in names


def test_qschur_phi_basis_is_reported_not_crashed(q22):
    # the phi-basis is not canonical: P1-P4 are expected to fail here
    r = analyze(q22)
    assert all(r.checks[:3])
    assert not r.passed
    json.loads(r.render_structured())


def test_text_rendering_mentions_every_cell(s3):
    text = analyze(s3).render_text()
    assert text.count("\ncell ") == 3
    assert "D_c = ['cs', 'ct']" in text


def test_verdict_rendering():
    v = Verdict("x", False, witness=("a", 1), detail="broken")
    assert v.line() == "[FAIL] x: broken (witness: ['a', 1])"
    assert v.to_dict() == {"name": "x", "passed": False, "witness": ["a", 1], "detail": "broken"}
    c = combine("all", [Verdict("ok", True), v])
    assert not c and c.witness == ("a", 1) and c.detail == "x failed"
