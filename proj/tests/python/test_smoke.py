import pytest

import repvar


def m_lambda(lam):
    text = f"module M over GF 101 on kronecker\ndim 1=1 2=1\nmat a = [[1]]\nmat b = [[{lam}]]\n"
    return repvar.parse_module(text)


def test_algebra_basics():
    sq = repvar.algebra("square")
    assert sq.dimension == 9
    assert sq.vertices == ["1", "2", "3", "4"]
    assert "relation beta.alpha - delta.gamma" in sq.quiver_text()
    assert repvar.algebra(sq.quiver_text(), "Q").field == "Q"


def test_hom_ext_and_resolutions():
    sq = repvar.algebra("square")
    s1, s4 = repvar.simple(sq, "1"), repvar.simple(sq, 3)
    assert repvar.pdim(s1) == 2
    assert repvar.ext_dim(s1, s4, 2) == 1
    assert repvar.hom_dim(repvar.projective(sq, 0), s1) == 1
    assert repvar.euler(sq, [1, 1, 1, 1], [1, 1, 1, 1]) == 1
    assert repvar.a_coeff(sq, [1, 1, 1, 1]) == 3


def test_tangent_and_tau():
    m = m_lambda(5)
    t = repvar.tangent_report(m)
    assert (t["dimT"], t["orbit"], t["ext1"]) == (2, 1, 1)
    assert repvar.iso(repvar.tau(m), m)
    assert not repvar.iso(m, m_lambda(6))


def test_middle_term_and_decompose():
    k = repvar.algebra("kronecker")
    s1, s2 = repvar.simple(k, 0), repvar.simple(k, 1)
    assert repvar.cocycle_dims(s1, s2)["ext1"] == 2
    w = repvar.middle_term(s1, s2, seed=3)
    assert w.dim == [1, 1]
    assert w.validate()
    parts = repvar.decompose(s1 + s1 + s2)
    assert [(p.dim, mult) for p, mult in parts] == [([0, 1], 1), ([1, 0], 2)]
    assert repvar.parse_module(w.to_text("W")).dim == [1, 1]


def test_certificate():
    k = repvar.algebra("kronecker")
    s1, s2 = repvar.simple(k, 0), repvar.simple(k, 1)
    cert = repvar.certify(s2 + s1, s2, s1, "a=[[1]]; b=[[0]]")
    assert cert["issued"] is True
    assert cert["bound_chain"]["tangent_bound"] == 2


def test_canonical():
    c = repvar.canonical([2, 2, 2])
    assert c.type == "domestic"
    h = c.homogeneous(3)
    assert h.dim == c.h
    assert c.classify(h)["class"] == "L"
    assert len(c.mouth(0)) == 2


def test_errors():
    with pytest.raises(repvar.ParseError):
        repvar.parse_module("module M over GF 101 on kronecker\ndim 1=1 2=1\nmat a = [[1, 2]]\n")
    with pytest.raises(repvar.Error):
        repvar.canonical([2, 2, 2], lambda_=[0])


def test_suite_is_deterministic():
    a = repvar.run_suite("kronecker", seed=5, samples=3)
    assert a == repvar.run_suite("kronecker", seed=5, samples=3)
    assert a["passed"]


def test_error_hierarchy():
    assert issubclass(repvar.ParseError, repvar.Error)
    k = repvar.algebra("kronecker")
    with pytest.raises(repvar.HypothesisFailed):
        repvar.certify(repvar.simple(k, 0), repvar.simple(k, 1), repvar.simple(k, 0), "a=[[0]]")
