import json
from dataclasses import replace

import pytest

from chemtrees.encoding import parse_tree
from chemtrees.enumeration import enumerate_pendent_rooted
from chemtrees.indices import DegreeCostVector
from chemtrees.qspr import (
    BASIC,
    PRESETS,
    REGRESSION_I,
    DescriptorVector,
    RegressionModel,
    descriptors,
    get_preset,
    load_model,
    normalize_flag,
    parse_active,
    predict,
    save_model,
)


def test_descriptors_of_ethanol():
    values = descriptors(parse_tree("O(C(C))"))
    counts = (values.wio, values.n1, values.n2, values.n3, values.n4, values.s2, values.m2)
    assert counts == (3, 2, 1, 0, 0, 1, 4)
    assert values.wio_cuberoot == pytest.approx(3 ** (1 / 3))


def test_descriptors_exact_cube_root():
    values = descriptors(parse_tree("O(C(C,C(C)))"))
    assert values.wio == 8
    assert values.wio_cuberoot == 2.0
    assert values.s2 == 0
    assert values.m2 == 14


def test_cube_root_values_are_well_separated():
    trees = [tree for n in range(3, 15) for tree in enumerate_pendent_rooted(n)]
    values = sorted({descriptors(tree).wio_cuberoot for tree in trees})
    gaps = [b - a for a, b in zip(values, values[1:])]
    assert len(values) > 1
    assert min(gaps) > 1e-6


def test_descriptors_need_rooted_tree():
    with pytest.raises(TypeError):
        descriptors(parse_tree("C(C,C)"))


@pytest.mark.parametrize(
    "skeleton, expected",
    [("O(C(C))", 77.516), ("O(C(C,C,C))", 82.422), ("O(C(C(C)))", 97.560)],
)
def test_basic_predictions(skeleton, expected):
    assert predict(BASIC, parse_tree(skeleton)) == pytest.approx(expected, abs=1e-3)


def test_predict_accepts_descriptor_vector():
    tree = parse_tree("O(C(C(C)))")
    assert predict(REGRESSION_I, descriptors(tree)) == predict(REGRESSION_I, tree)


def test_descriptor_value_by_flag():
    values = DescriptorVector(wio=8, wio_cuberoot=2.0, n1=3, n2=1, n3=1, n4=0, s2=0, m2=14)
    assert values.value("wio3") == 2.0
    assert values.value("wio_cuberoot") == 2.0
    assert values.value("m2") == 14.0
    with pytest.raises(ValueError):
        values.value("wio")


def test_presets():
    assert set(PRESETS) == {"basic", "reg1", "reg2"}
    assert get_preset("reg1") is REGRESSION_I
    assert REGRESSION_I.b1 == 0.0
    assert "wio3" not in REGRESSION_I.active
    with pytest.raises(ValueError):
        get_preset("reg3")


def test_inactive_coefficients_must_be_zero():
    with pytest.raises(ValueError):
        replace(REGRESSION_I, b1=1.0)
    with pytest.raises(ValueError):
        RegressionModel(b0=1.0, c=DegreeCostVector(c2=1.0))


def test_flags():
    assert normalize_flag("wio_cuberoot") == "wio3"
    assert parse_active("wio3, n2,n3 ,s2,") == frozenset({"wio3", "n2", "n3", "s2"})
    with pytest.raises(ValueError):
        parse_active("n2,n5")


def test_from_coefficients():
    model = RegressionModel.from_coefficients(10.0, {"n2": 2.0, "wio_cuberoot": 3.0})
    assert model.active == frozenset({"n2", "wio3"})
    assert model.b1 == 3.0
    assert model.c == DegreeCostVector(0.0, 2.0, 0.0, 0.0)


def test_save_and_load_model(tmp_path):
    path = tmp_path / "model.json"
    save_model(BASIC, path)
    data = json.loads(path.read_text(encoding="utf-8"))
    assert data["active"] == ["wio3", "n2", "n3", "s2", "m2"]
    assert data["c"] == [0.0, 9.514, 9.38, 0.0]
    assert load_model(path) == BASIC


def test_load_model_errors(tmp_path):
    path = tmp_path / "model.json"
    path.write_text("{not json", encoding="utf-8")
    with pytest.raises(ValueError, match="not valid JSON"):
        load_model(path)
    path.write_text("[1, 2]", encoding="utf-8")
    with pytest.raises(ValueError, match="JSON object"):
        load_model(path)
    path.write_text('{"b0": 1.0}', encoding="utf-8")
    with pytest.raises(ValueError, match="missing"):
        load_model(path)
