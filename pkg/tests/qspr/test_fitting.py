import pytest

from chemtrees.enumeration import enumerate_pendent_rooted
from chemtrees.qspr import (
    BASIC,
    DataRecord,
    InsufficientDataError,
    RankDeficiencyError,
    RegressionModel,
    design_matrix,
    fit,
    precision,
    predict,
)


def synthetic_records(model, orders=range(4, 9)):
    return [
        DataRecord(f"alcohol-{i}", tree, predict(model, tree))
        for i, tree in enumerate(tree for order in orders for tree in enumerate_pendent_rooted(order))
    ]


def test_design_matrix_columns_follow_flag_order():
    records = synthetic_records(BASIC, [5])
    matrix, columns = design_matrix(records, {"m2", "wio_cuberoot", "n2"})
    assert columns == ["wio3", "n2", "m2"]
    assert matrix.shape == (4, 4)
    assert matrix[:, 0].tolist() == [1.0] * 4


def test_fit_recovers_coefficients():
    records = synthetic_records(BASIC)
    model = fit(records, BASIC.active)
    assert model.active == BASIC.active
    assert model.b0 == pytest.approx(BASIC.b0, abs=1e-6)
    assert model.b1 == pytest.approx(BASIC.b1, abs=1e-6)
    assert model.b2 == pytest.approx(BASIC.b2, abs=1e-6)
    assert model.b3 == pytest.approx(BASIC.b3, abs=1e-6)
    assert model.c.as_tuple() == pytest.approx(BASIC.c.as_tuple(), abs=1e-6)


def test_fit_needs_more_records_than_coefficients():
    records = synthetic_records(BASIC, [5])
    with pytest.raises(InsufficientDataError):
        fit(records[:3], {"n2", "n3", "m2"})


def test_fit_reports_dependent_columns():
    # Every tree has n1 = 2 + n3 + 2 n4.
    records = synthetic_records(BASIC)
    with pytest.raises(RankDeficiencyError) as error:
        fit(records, {"n1", "n3", "n4"})
    assert error.value.columns == ("n4",)
    assert isinstance(error.value, ValueError)


def test_precision_of_exact_model():
    records = synthetic_records(BASIC)
    stats = precision(BASIC, records)
    assert stats.correlation == pytest.approx(1.0)
    assert stats.sd == pytest.approx(0.0, abs=1e-9)


def test_precision_uses_n_minus_one():
    model = RegressionModel.from_coefficients(0.0, {"m2": 1.0})
    records = synthetic_records(model, [5])
    shifted = [
        DataRecord(record.name, record.skeleton, record.bp_celsius + offset)
        for record, offset in zip(records, [1.0, -1.0, 1.0, -1.0])
    ]
    assert precision(model, shifted).sd == pytest.approx((4 / 3) ** 0.5)


def test_precision_rejects_degenerate_inputs():
    records = synthetic_records(BASIC, [5])
    with pytest.raises(ValueError):
        precision(BASIC, records[:1])
    flat = [DataRecord(record.name, record.skeleton, 80.0) for record in records]
    with pytest.raises(ValueError, match="observations"):
        precision(BASIC, flat)
    with pytest.raises(ValueError, match="predictions"):
        precision(RegressionModel(b0=50.0), records)
