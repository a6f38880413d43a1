from itertools import permutations

import pytest

from chemtrees.enumeration import enumerate_chemical_trees
from chemtrees.huffman import (
    GeneratingTuple,
    HuffmanStep,
    extremal_tuple,
    extremal_tuples,
    generalized_huffman,
    huffman_trees,
    is_degree_monotone,
    is_proper,
    subordinate_weights,
    vwwi_directed,
)
from chemtrees.indices import vertex_weighted_wiener
from chemtrees.trees import DirectedTree, VertexWeightedTree, to_directed


def make_example_tuple():
    return GeneratingTuple([1, 2, 3, 4, 1, 2], [1, 1, 1, 1, 3, 3])


def edge_set(tree):
    return {frozenset(edge) for edge in tree.edges}


def test_generating_tuple_properties():
    tuple_ = make_example_tuple()
    assert tuple_.order == 6
    assert tuple_.pendent_vertices == (0, 1, 2, 3)
    assert tuple_.internal_vertices == (4, 5)
    assert tuple_.total_weight == 13.0
    assert tuple_.degrees == (1, 1, 1, 1, 3, 3)


@pytest.mark.parametrize(
    "weights, degrees",
    [
        ([1.0], [1]),
        ([1.0, 1.0, 1.0], [1, 1, 1]),
        ([1.0, 1.0, 1.0], [0, 2, 2]),
        ([1.0, 1.0], [1, 1, 1]),
        ([1.0, -1.0], [1, 1]),
    ],
)
def test_generating_tuple_validation(weights, degrees):
    with pytest.raises(ValueError):
        GeneratingTuple(weights, degrees)


def test_generalized_huffman_example():
    weighted, directed, trace = generalized_huffman(make_example_tuple())
    assert edge_set(weighted.tree) == {frozenset(e) for e in [(0, 4), (1, 4), (4, 5), (2, 5), (3, 5)]}
    assert directed.terminal == 5
    assert subordinate_weights(directed).tolist() == [1.0, 2.0, 3.0, 4.0, 4.0, 13.0]
    assert vertex_weighted_wiener(weighted) == pytest.approx(136.0)
    assert vwwi_directed(directed) == pytest.approx(136.0)
    assert trace.steps == (HuffmanStep(4, (0, 1), 4.0), HuffmanStep(5, (2, 3, 4), 13.0))
    assert trace.terminal == 5


def test_trace_has_one_step_per_internal_vertex():
    tuple_ = GeneratingTuple([1] * 9, [1, 1, 1, 1, 1, 2, 3, 3, 3])
    _, _, trace = generalized_huffman(tuple_)
    assert len(trace.steps) == len(tuple_.internal_vertices)


def test_generalized_huffman_order_two():
    weighted, directed, trace = generalized_huffman(GeneratingTuple([3.0, 5.0], [1, 1]))
    assert edge_set(weighted.tree) == {frozenset((0, 1))}
    assert directed.terminal == 1
    assert trace.steps == ()
    assert vertex_weighted_wiener(weighted) == pytest.approx(15.0)


def test_generalized_huffman_single_internal_vertex():
    weighted, directed, _ = generalized_huffman(GeneratingTuple([1, 1, 1, 1, 5], [1, 1, 1, 1, 4]))
    assert directed.terminal == 4
    assert weighted.tree.degrees == (1, 1, 1, 1, 4)


def test_generalized_huffman_prefers_least_degree_among_lightest():
    tuple_ = GeneratingTuple([1] * 7, [1, 1, 1, 1, 3, 2, 3])
    _, directed, trace = generalized_huffman(tuple_)
    assert [step.vertex for step in trace.steps] == [5, 4, 6]
    assert directed.terminal == 6


def test_huffman_trees_enumerates_all_tie_breaks():
    tuple_ = GeneratingTuple([1, 1, 1, 1, 1, 1], [1, 1, 1, 1, 2, 4])
    labeled = huffman_trees(tuple_)
    assert len(labeled) == 4
    assert len(huffman_trees(tuple_, up_to_isomorphism=True)) == 1
    values = {vertex_weighted_wiener(tree) for tree in labeled}
    assert len(values) == 1


def test_huffman_trees_contains_default_output():
    tuple_ = GeneratingTuple([1, 1, 2, 2, 1, 3, 3], [1, 1, 1, 1, 2, 3, 3])
    weighted, _, _ = generalized_huffman(tuple_)
    assert weighted.tree in {tree.tree for tree in huffman_trees(tuple_)}


def test_is_degree_monotone():
    assert is_degree_monotone(make_example_tuple())
    assert not is_degree_monotone(GeneratingTuple([1, 1, 1, 1, 5, 2], [1, 1, 1, 1, 2, 4]))
    assert not is_degree_monotone(GeneratingTuple([0, 1, 1, 1, 1], [1, 1, 1, 1, 4]))


def test_huffman_tree_is_proper():
    _, directed, _ = generalized_huffman(make_example_tuple())
    assert is_proper(directed)


def test_is_proper_detects_heavy_subordinate_group():
    directed = DirectedTree([1, 2, None], [10.0, 1.0, 1.0])
    assert not is_proper(directed)


def test_vwwi_directed_is_independent_of_terminal():
    weighted, _, _ = generalized_huffman(make_example_tuple())
    values = [vwwi_directed(to_directed(weighted, t)) for t in weighted.tree.internal_vertices]
    assert values == pytest.approx([vertex_weighted_wiener(weighted)] * len(values))


def test_extremal_tuple_for_rooted_weights():
    tuple_ = extremal_tuple([5.0, 1.0, 1.0, 1.0, 1.0], forced_pendants=(0,))
    assert tuple_.degrees == (1, 4, 1, 1, 1)
    tuple_ = extremal_tuple([9.0] + [1.0] * 8, forced_pendants=(0,))
    assert tuple_.degrees == (1, 4, 4, 2, 1, 1, 1, 1, 1)


def test_extremal_tuple_places_heaviest_vertices_inside():
    tuple_ = extremal_tuple([1.0, 7.0, 2.0, 9.0, 3.0, 1.0, 1.0, 8.0])
    assert set(tuple_.internal_vertices) == {3, 7}
    assert tuple_.degrees[3] == tuple_.degrees[7] == 4


def test_extremal_tuple_exceptional_vertex_is_lightest_internal():
    tuple_ = extremal_tuple([5.0, 4.0, 3.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0])
    assert tuple_.degrees[:3] == (4, 4, 2)


def test_extremal_tuples_enumerates_ties():
    tuples = extremal_tuples([5.0, 1.0, 1.0, 1.0, 1.0], forced_pendants=(0,))
    assert len(tuples) == 4
    assert {t.internal_vertices for t in tuples} == {(1,), (2,), (3,), (4,)}


def test_extremal_tuple_lower_bounds_vwwi():
    weights = [6.0, 1.0, 2.0, 1.0, 3.0, 1.0, 2.0]
    weighted, _, _ = generalized_huffman(extremal_tuple(weights))
    best = vertex_weighted_wiener(weighted)
    for tree in enumerate_chemical_trees(7):
        for arrangement in set(permutations(weights)):
            value = vertex_weighted_wiener(VertexWeightedTree(tree, list(arrangement)))
            assert value >= best - 1e-9


def test_extremal_tuple_rejects_too_many_forced_pendants():
    with pytest.raises(ValueError):
        extremal_tuple([1.0] * 6, forced_pendants=range(5))
