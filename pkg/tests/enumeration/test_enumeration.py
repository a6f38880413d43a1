import pytest

from chemtrees.encoding import canonical_form, parse_tree
from chemtrees.enumeration import (
    EnumerationRequest,
    canonical_codes,
    enumerate_chemical_trees,
    enumerate_extremely_branched,
    enumerate_pendent_rooted,
    enumerate_trees,
    exceptional_degree,
    is_extremely_branched,
    prufer_oracle_count,
)
from chemtrees.trees import PendentRootedTree


def count(iterator):
    return sum(1 for _ in iterator)


@pytest.mark.parametrize(
    "order, expected", [(2, 1), (3, 1), (4, 2), (5, 3), (6, 5), (7, 9), (8, 18), (9, 35), (10, 75)]
)
def test_chemical_tree_counts(order, expected):
    assert count(enumerate_chemical_trees(order)) == expected


@pytest.mark.parametrize("order, expected", [(3, 1), (4, 2), (5, 4), (6, 8), (7, 17), (8, 39)])
def test_pendent_rooted_counts(order, expected):
    assert count(enumerate_pendent_rooted(order)) == expected


@pytest.mark.parametrize("max_degree", [2, 3, 4])
@pytest.mark.parametrize("order", range(2, 11))
def test_enumeration_matches_prufer_oracle(order, max_degree):
    assert count(enumerate_chemical_trees(order, max_degree)) == prufer_oracle_count(order, max_degree)


def test_prufer_oracle_examples():
    assert prufer_oracle_count(4) == 2
    assert prufer_oracle_count(6) == 5
    assert prufer_oracle_count(8) == 18


def test_prufer_oracle_guards_order():
    with pytest.raises(ValueError):
        prufer_oracle_count(11)
    with pytest.raises(ValueError):
        prufer_oracle_count(1)


def test_enumeration_is_duplicate_free_and_sorted():
    forms = [canonical_form(tree) for tree in enumerate_chemical_trees(10)]
    assert forms == sorted(set(forms))


def test_enumeration_is_deterministic():
    assert canonical_codes(9, rooted=True) == canonical_codes(9, rooted=True)


def test_rooted_enumeration_yields_rooted_trees():
    for tree in enumerate_pendent_rooted(6):
        assert isinstance(tree, PendentRootedTree)
        assert tree.degrees[tree.root] == 1


def test_butanol_skeletons():
    forms = {canonical_form(tree) for tree in enumerate_pendent_rooted(5)}
    assert forms == {"O(C(C(C(C))))", "O(C(C,C(C)))", "O(C(C(C,C)))", "O(C(C,C,C))"}


@pytest.mark.parametrize("order", [1, 21])
def test_enumeration_guards_order(order):
    with pytest.raises(ValueError):
        enumerate_chemical_trees(order)


def test_rooted_enumeration_rejects_methanol():
    with pytest.raises(ValueError):
        enumerate_pendent_rooted(2)


@pytest.mark.parametrize("order, expected", [(5, (1, 4)), (6, (2, 2)), (7, (2, 3)), (8, (2, 4)), (9, (3, 2))])
def test_exceptional_degree(order, expected):
    assert exceptional_degree(order) == expected


def test_exceptional_degree_for_lower_max_degree():
    assert exceptional_degree(7, 3) == (3, 2)
    assert exceptional_degree(8, 3) == (3, 3)


@pytest.mark.parametrize("order, expected", [(5, 1), (6, 1), (7, 1), (8, 1), (9, 2)])
def test_extremely_branched_counts(order, expected):
    assert count(enumerate_extremely_branched(order)) == expected


def test_extremely_branched_star():
    (tree,) = enumerate_extremely_branched(5)
    assert canonical_form(tree) == "C(C,C,C,C)"
    (rooted,) = enumerate_extremely_branched(5, rooted=True)
    assert canonical_form(rooted) == "O(C(C,C,C))"


@pytest.mark.parametrize("order", range(4, 13))
def test_extremely_branched_trees_follow_the_definition(order):
    internal_count, exception = exceptional_degree(order)
    for tree in enumerate_extremely_branched(order):
        degrees = sorted(tree.degrees[v] for v in tree.internal_vertices)
        assert len(degrees) == internal_count
        assert degrees.count(4) >= internal_count - 1
        if exception != 4:
            assert degrees[0] == exception


def test_rooted_extremely_branched_is_a_filter_of_rooted_enumeration():
    expected = {canonical_form(t) for t in enumerate_pendent_rooted(9) if is_extremely_branched(t)}
    assert {canonical_form(t) for t in enumerate_extremely_branched(9, rooted=True)} == expected


def test_is_extremely_branched():
    assert is_extremely_branched(parse_tree("C(C,C,C,C)"))
    assert not is_extremely_branched(parse_tree("C(C,C(C,C))"))
    assert is_extremely_branched(parse_tree("C(C,C(C,C,C))"))
    with pytest.raises(ValueError):
        is_extremely_branched(parse_tree("C(C,C)"))


def test_enumeration_request_validation():
    with pytest.raises(ValueError):
        EnumerationRequest(3, extremely_branched_only=True)
    with pytest.raises(ValueError):
        EnumerationRequest(2, rooted=True)
    request = EnumerationRequest(6, max_degree=3)
    assert request.max_degree == 3
    assert all(max(tree.degrees) <= 3 for tree in enumerate_trees(request))
