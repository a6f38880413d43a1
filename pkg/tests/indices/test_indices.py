import pytest
import torch

from chemtrees.encoding import parse_tree
from chemtrees.enumeration import enumerate_chemical_trees, enumerate_pendent_rooted
from chemtrees.indices import (
    DegreeCostVector,
    DegreeCounts,
    ad_hoc_c,
    degree_counts,
    first_zagreb,
    generalized_first_zagreb,
    oxygen_distance,
    pair_weighted_wiener,
    second_zagreb,
    subroot_indicator,
    vertex_weighted_wiener,
    wiener,
)
from chemtrees.trees import ChemicalTree, VertexWeightedTree, distance_matrix

REGRESSION_I_COSTS = DegreeCostVector(0.0, 14.534, 20.172, 17.015)


def make_weighted(text, weights):
    return VertexWeightedTree(parse_tree(text), weights)


def test_degree_counts():
    assert degree_counts(parse_tree("O(C(C,C,C))")) == DegreeCounts(n1=4, n2=0, n3=0, n4=1)
    assert degree_counts(parse_tree("C(C(C(C)))")).as_tuple() == (2, 2, 0, 0)


@pytest.mark.parametrize("order", range(3, 11))
def test_degree_count_identities(order):
    for tree in enumerate_chemical_trees(order):
        n1, n2, n3, n4 = degree_counts(tree).as_tuple()
        assert n1 + n2 + n3 + n4 == order
        assert n1 + 2 * n2 + 3 * n3 + 4 * n4 == 2 * (order - 1)
        assert n1 == n3 + 2 * n4 + 2


def test_degree_counts_rejects_high_degree():
    tree = ChemicalTree([(0, i) for i in range(1, 6)], 6, max_degree=5)
    with pytest.raises(ValueError):
        degree_counts(tree)


@pytest.mark.parametrize(
    "text, m1, m2, w",
    [
        ("C(C(C(C)))", 10, 8, 10),
        ("C(C,C,C,C)", 20, 16, 16),
        ("C(C,C,C)", 12, 9, 9),
        ("C(C)", 2, 1, 1),
    ],
)
def test_zagreb_and_wiener(text, m1, m2, w):
    tree = parse_tree(text)
    assert first_zagreb(tree) == m1
    assert second_zagreb(tree) == m2
    assert wiener(tree) == w
    assert isinstance(wiener(tree), int)


@pytest.mark.parametrize("order", range(2, 10))
def test_wiener_matches_pairwise_distances(order):
    for tree in enumerate_chemical_trees(order):
        assert wiener(tree) == int(distance_matrix(tree).sum().item()) // 2


def test_generalized_first_zagreb_and_c():
    ethanol = parse_tree("O(C(C))")
    assert generalized_first_zagreb(ethanol, REGRESSION_I_COSTS) == pytest.approx(14.534)
    assert ad_hoc_c(ethanol, REGRESSION_I_COSTS, 1.0) == pytest.approx(18.534)
    assert ad_hoc_c(ethanol, REGRESSION_I_COSTS, 0.0) == generalized_first_zagreb(ethanol, REGRESSION_I_COSTS)


def test_degree_cost_vector_validation():
    assert DegreeCostVector.from_sequence([1, 2, 3, 4]).as_tuple() == (1.0, 2.0, 3.0, 4.0)
    with pytest.raises(ValueError):
        DegreeCostVector.from_sequence([1, 2, 3])
    with pytest.raises(ValueError):
        DegreeCostVector(float("nan"), 0.0, 0.0, 0.0)


def test_vertex_weighted_wiener_with_unit_weights_is_wiener():
    for tree in enumerate_chemical_trees(8):
        assert vertex_weighted_wiener(VertexWeightedTree(tree, [1.0] * tree.order)) == wiener(tree)


def test_vertex_weighted_wiener_star_with_heavy_pendant():
    weighted = make_weighted("C(C,C,C,C)", [1.0, 1.0, 1.0, 1.0, 100.0])
    assert vertex_weighted_wiener(weighted) == pytest.approx(709.0)


def test_pair_weighted_wiener_with_product_weights_is_vertex_weighted():
    generator = torch.Generator().manual_seed(0)
    for tree in enumerate_chemical_trees(7):
        weights = torch.rand(tree.order, generator=generator, dtype=torch.float64)
        weighted = VertexWeightedTree(tree, weights)
        pairwise = pair_weighted_wiener(tree, torch.outer(weights, weights))
        assert vertex_weighted_wiener(weighted) == pytest.approx(pairwise, rel=1e-12)


def test_pair_weighted_wiener_accepts_function():
    tree = parse_tree("C(C(C(C)))")
    assert pair_weighted_wiener(tree, lambda u, v: 1.0) == pytest.approx(wiener(tree))


def test_pair_weighted_wiener_validation():
    tree = parse_tree("C(C,C)")
    with pytest.raises(ValueError):
        pair_weighted_wiener(tree, [[0.0, 1.0], [1.0, 0.0]])
    with pytest.raises(ValueError):
        pair_weighted_wiener(tree, [[0.0, 1.0, 2.0], [0.0, 0.0, 1.0], [2.0, 1.0, 0.0]])
    with pytest.raises(ValueError):
        pair_weighted_wiener(tree, [[0.0, -1.0, 1.0], [-1.0, 0.0, 1.0], [1.0, 1.0, 0.0]])


def test_vertex_weighted_wiener_epsilon_limit():
    epsilon = 1e-3
    for tree in enumerate_pendent_rooted(8):
        weights = torch.full((tree.order,), epsilon, dtype=torch.float64)
        weights[tree.root] = 1 / epsilon
        value = vertex_weighted_wiener(VertexWeightedTree(tree, weights))
        assert abs(value - oxygen_distance(tree)) <= epsilon**2 * tree.order**2 * max(
            max(distance_matrix(tree).flatten().tolist()), 1
        )


@pytest.mark.parametrize("text, expected", [("O(C)", 1), ("O(C(C))", 3), ("O(C(C,C,C))", 7)])
def test_oxygen_distance(text, expected):
    assert oxygen_distance(parse_tree(text)) == expected


def test_subroot_indicators():
    tree = parse_tree("O(C(C,C))")
    assert [subroot_indicator(tree, d) for d in (2, 3, 4)] == [0, 1, 0]


@pytest.mark.parametrize("order", range(3, 9))
def test_exactly_one_subroot_indicator(order):
    for tree in enumerate_pendent_rooted(order):
        assert sum(subroot_indicator(tree, d) for d in (2, 3, 4)) == 1


def test_subroot_indicator_validation():
    with pytest.raises(ValueError):
        subroot_indicator(parse_tree("O(C)"), 2)
    with pytest.raises(ValueError):
        subroot_indicator(parse_tree("O(C(C))"), 1)
