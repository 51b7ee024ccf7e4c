import json

import pytest

import conerank as cr


def four_cycle():
    return cr.Complex(["x1", "x2", "x3", "x4"], [["x1", "x2"], ["x2", "x3"], ["x3", "x4"], ["x1", "x4"]])


def test_complex_roundtrip():
    c = four_cycle()
    assert c.dimension == 1
    assert c.is_pure()
    assert cr.Complex.from_json(c.to_json()) == c
    doc = json.loads(c.to_json())
    assert doc["vertices"] == ["x1", "x2", "x3", "x4"]


def test_betti_of_four_cycle():
    c = four_cycle()
    assert cr.graded_betti(c) == {(0, 0): 1, (1, 2): 2, (2, 4): 1}
    assert cr.proj_dim(c) == 2
    assert cr.regularity(c) == 3
    assert not cr.has_2_linear_resolution(c)


def test_cone_and_lemma1_arithmetic():
    cone = cr.cone_union(four_cycle(), ["x4"])
    assert cone.vertices[0] == "x0"
    assert len(cone.facets) == 5
    assert cr.proj_dim(cone) == 3


@pytest.mark.parametrize("char", [0, 2, 3, 5])
def test_construct_example(char):
    result = cr.construct(four_cycle(), ["x4"], char=char)
    assert result["passed"]
    assert len(result["polynomials"]) == 3
    if char == 0:
        assert result["polynomials"][1:] == ["x1^2*x3^2 + x0^2*x1 - x0*x1*x3", "x2^2*x4^2 + x0^2*x2 + x0*x2*x3"]
    if char == 2:
        assert result["ell"] == 2


def test_verify_rejects_wrong_presentation():
    cone = cr.cone_union(four_cycle(), ["x4"])
    assert not cr.verify(["x1*x3", "x2*x4"], cone)


def test_classification():
    path = cr.Complex(["a", "b", "c"], [["a", "b"], ["b", "c"]])
    assert cr.is_generalized_tree(path)
    assert cr.is_d_tree(path)
    assert cr.lemma3_r(cr.Complex.boundary(4)) == 4
    assert cr.lemma3_r(four_cycle()) is None


def test_errors_map_to_exceptions():
    with pytest.raises(cr.InvalidInput):
        cr.cone_union(four_cycle(), ["x1", "x3"])
    with pytest.raises(cr.Undefined):
        cr.regularity(cr.Complex.simplex(3))
    with pytest.raises(cr.ConerankError):
        cr.construct(four_cycle(), ["x4"], char=4)


def test_cli_roundtrip(tmp_path):
    path = tmp_path / "c.json"
    path.write_text(four_cycle().to_json())
    code, out, err = cr.run_cli(["--format", "json", "betti", str(path)])
    assert code == 0, err
    assert json.loads(out)["pd"] == 2
    code, _, _ = cr.run_cli(["pipeline", str(path)])
    assert code == 1
    code, _, _ = cr.run_cli(["--char", "4", "info", str(path)])
    assert code == 2
