import pytest

from chemtrees.encoding import parse_tree
from chemtrees.enumeration import is_extremely_branched
from chemtrees.extremal import audit_conjecture_bp0, check_epsilon_reduction


def test_audit_small_orders():
    rows = audit_conjecture_bp0(range(4, 9))
    assert [row.order for row in rows] == [4, 5, 6, 7, 8]
    for row in rows:
        assert row.all_extremely_branched
        assert row.restricted_agrees
        assert row.restricted_value == pytest.approx(row.value)
        assert row.matches_intersection
        assert set(row.intersection) <= set(row.wio_minimizers)
    assert rows[1].argmin == ("O(C(C,C,C))",)
    assert rows[1].value == pytest.approx(82.422, abs=1e-3)


def test_audit_matches_intersection_at_larger_orders():
    for row in audit_conjecture_bp0([11, 14]):
        assert row.matches_intersection
        assert row.restricted_agrees == row.all_extremely_branched


@pytest.mark.parametrize("order", [9, 10, 12, 13])
def test_audit_verdict_where_index_minimizers_disagree(order):
    (row,) = audit_conjecture_bp0([order])
    assert row.argmin
    assert row.wio_minimizers
    assert row.restricted_value >= row.value - 1e-9 * abs(row.value)
    assert row.restricted_agrees == row.all_extremely_branched
    assert row.matches_intersection == bool(row.intersection)
    assert all(is_extremely_branched(parse_tree(code)) for code in row.restricted_argmin)


def test_audit_order_seven_keeps_wio_ties():
    (row,) = audit_conjecture_bp0([7])
    assert len(row.wio_minimizers) == 2
    assert row.intersection == row.argmin == ("O(C(C,C,C(C,C)))",)


def test_audit_row_to_dict():
    (row,) = audit_conjecture_bp0([5])
    data = row.to_dict()
    assert data["argmin"] == ["O(C(C,C,C))"]
    assert data["order"] == 5
    assert data["matches_intersection"] is True


def test_audit_rejects_orders_out_of_range():
    with pytest.raises(ValueError):
        audit_conjecture_bp0([3])
    with pytest.raises(ValueError):
        audit_conjecture_bp0([15])


def test_epsilon_reduction_agrees():
    rows = check_epsilon_reduction()
    assert [row.order for row in rows] == list(range(4, 11))
    assert all(row.agrees for row in rows)
    assert rows[1].vwwi_minimizers == ("O(C(C,C,C))",)
    assert rows[0].to_dict()["agrees"] is True


@pytest.mark.parametrize("epsilon", [0.0, 1.0, -0.5])
def test_epsilon_must_be_in_unit_interval(epsilon):
    with pytest.raises(ValueError):
        check_epsilon_reduction([5], epsilon)
