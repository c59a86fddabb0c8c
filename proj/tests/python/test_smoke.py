import json
import math

import pytest

import jordanaff as ja


def test_families():
    names = ja.families()
    assert len(names) == 17
    assert "octonion_hermitian3" in names


def test_build_and_product():
    C = ja.build_family("complex_field")
    assert C.dim == 2
    i = ["0", "1"]
    assert C.product(i, i) == ["-1", "0"]
    assert C.det_P(["3", "4"]) == "625"


def test_json_roundtrip():
    J = ja.build_family("symmetric_r", m=3, gamma=[1, -1, 1])
    text = J.to_json()
    assert ja.Algebra.from_json(text).to_json() == text


def test_asymmetric_tensor_rejected():
    bad = json.dumps({"name": "t", "dim": 2, "mode": "rational", "unity": None,
                      "c": [[["1", "0"], ["1", "0"]], [["0", "0"], ["0", "1"]]]})
    with pytest.raises(ja.AlgebraError, match=r"c\[0\]\[1\]\[0\]"):
        ja.Algebra.from_json(bad)


@pytest.mark.parametrize("kind", ["jordan", "semisimple", "triple", "pair", "gauss"])
def test_verify_suites(kind):
    J = ja.build_family("hermitian_c", m=2)
    rep = ja.verify(J, kind, samples=10, seed=3)
    assert rep["pass"], rep


def test_det_formula():
    rep = ja.verify_det_formula("full_matrix_r", m=2, samples=50, seed=7)
    assert rep["pass"]


def test_circle():
    model = ja.build_model(ja.build_family("complex_field"), "-1")
    assert model.C == pytest.approx(0.5)
    for p in model.sample(8, 1):
        assert math.hypot(*p) == pytest.approx(0.5, abs=1e-8)


def test_reconstruct_roundtrip():
    model = ja.build_model(ja.build_family("hermitian_c", m=2), "2")
    alg, jordan, semisimple = ja.reconstruct(model.metric_json(), model.cubic_form_json(), "2")
    assert jordan and semisimple
    assert alg.dim == 4


def test_compose_hyperbola():
    spec = {"factors": [{"family": "reals", "L1": -1}, {"family": "reals", "L1": -1}], "L1": -1}
    model = ja.compose(json.dumps(spec))
    for p in model.sample(20, 5):
        assert p[0] * p[1] == pytest.approx(0.25, rel=1e-8)
        assert abs(model.level_residual(p)) < 1e-8
