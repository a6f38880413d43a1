from dataclasses import replace

import pytest

from chemtrees.encoding import parse_tree
from chemtrees.enumeration import enumerate_chemical_trees, is_extremely_branched
from chemtrees.extremal import (
    MinimizerSet,
    Objective,
    PreconditionError,
    argmin,
    get_objective,
    intersect_minimizers,
    minimize_brute,
    minimize_theory,
    pendant_rootings,
)
from chemtrees.indices import degree_counts
from chemtrees.qspr import BASIC, REGRESSION_I


def test_minimize_wio_order_five():
    result = minimize_brute(5, "wio", rooted=True)
    assert result.members == ("O(C(C,C,C))",)
    assert result.value == 7
    assert result.method == "brute"
    assert result.rooted


def test_wio_refinement_breaks_ties_by_wiener_index():
    raw = minimize_brute(7, "wio-raw", rooted=True)
    refined = minimize_brute(7, "wio", rooted=True)
    assert raw.value == refined.value == 13
    assert set(raw.members) == {"O(C(C,C,C(C,C)))", "O(C(C,C(C),C(C)))"}
    assert refined.members == ("O(C(C,C,C(C,C)))",)


@pytest.mark.parametrize("order", range(4, 14))
def test_c_minimizers_are_unique_below_fourteen(order):
    result = minimize_brute(order, "c")
    assert len(result) == 1
    assert all(is_extremely_branched(tree) for tree in result.trees())


def test_c_minimizers_at_fourteen():
    result = minimize_brute(14, "c")
    assert len(result) == 2
    trees = result.trees()
    assert all(is_extremely_branched(tree) for tree in trees)
    assert degree_counts(trees[0]) == degree_counts(trees[1])


@pytest.mark.parametrize("order", range(4, 15))
def test_theory_matches_brute_force_for_c(order):
    theory = minimize_theory(order, "c")
    brute = minimize_brute(order, "c")
    assert theory.members == brute.members
    assert theory.value == pytest.approx(brute.value)
    assert theory.method == "theory"


@pytest.mark.parametrize("order", range(4, 15))
def test_theory_matches_brute_force_for_wio(order):
    theory = minimize_theory(order, "wio")
    brute = minimize_brute(order, "wio", rooted=True)
    assert theory.members == brute.members
    assert theory.value == brute.value


def test_theory_c_order_nine_places_exception_in_the_middle():
    (tree,) = minimize_theory(9, "c").trees()
    (short,) = [v for v in tree.internal_vertices if tree.degrees[v] == 2]
    assert all(tree.degrees[w] == 4 for w in tree.neighbors(short))


def test_theory_c_requires_conditions():
    with pytest.raises(PreconditionError):
        minimize_theory(8, "c", model=BASIC)
    negative = replace(REGRESSION_I, b3=-1.0)
    with pytest.raises(PreconditionError):
        minimize_theory(8, "c", model=negative)
    with pytest.raises(PreconditionError):
        minimize_theory(8, "c", max_degree=3)


def test_theory_rejects_unsupported_objective_and_order():
    with pytest.raises(ValueError):
        minimize_theory(8, "m1")
    with pytest.raises(ValueError):
        minimize_theory(3, "c")


def test_precondition_error_is_value_error():
    assert issubclass(PreconditionError, ValueError)


def test_rooted_objective_needs_rooted_search():
    with pytest.raises(ValueError):
        minimize_brute(6, "wio")


def test_boiling_point_minimizer_order_five():
    result = minimize_brute(5, "bp0", rooted=True)
    assert result.members == ("O(C(C,C,C))",)
    assert result.value == pytest.approx(82.422, abs=1e-3)


def test_free_tree_objectives_match_enumeration():
    trees = list(enumerate_chemical_trees(6))
    assert minimize_brute(6, "m1").value == min(sum(d * d for d in tree.degrees) for tree in trees)
    result = minimize_brute(6, "wiener")
    assert result.value == min(get_objective("wiener")(tree) for tree in trees)
    assert not result.rooted


def test_get_objective_validation():
    with pytest.raises(ValueError):
        get_objective("unknown")
    with pytest.raises(TypeError):
        get_objective("s2")(parse_tree("C(C,C)"))


def test_argmin_ties_and_refinement():
    trees = [parse_tree(text) for text in ["C(C(C(C)))", "C(C,C,C)", "C(C(C),C)"]]
    by_order = Objective("order", lambda tree: tree.order)
    value, members = argmin(trees, by_order)
    assert value == 4
    assert len(members) == 3
    refined = Objective("order", lambda tree: tree.order, refine=lambda tree: max(tree.degrees))
    _, members = argmin(trees, refined)
    assert len(members) == 2
    assert all(max(tree.degrees) == 2 for tree in members)


def test_argmin_real_values_tie_within_tolerance():
    trees = [parse_tree("C(C)"), parse_tree("C(C,C)")]
    nearly = Objective("nearly", lambda tree: 1.0 + 1e-12 * tree.order, integer_valued=False)
    assert len(argmin(trees, nearly)[1]) == 2
    exact = Objective("exact", lambda tree: 1.0 + 1e-12 * tree.order)
    assert len(argmin(trees, exact)[1]) == 1


def test_minimizer_set():
    result = MinimizerSet(5, "wio", ("O(C(C,C,C))", "O(C(C,C,C))"), 7, "brute", True)
    assert len(result) == 1
    assert parse_tree("O(C(C,C,C))") in result
    assert "O(C(C,C,C))" in result
    assert result.to_dict()["members"] == ["O(C(C,C,C))"]
    with pytest.raises(ValueError):
        MinimizerSet(5, "wio", (), 7, "guess", True)


def test_intersect_minimizers():
    first = MinimizerSet(7, "a", ("x", "y"), 1.0, "brute", True)
    second = MinimizerSet(7, "b", ("y", "z"), 2.0, "brute", True)
    common = intersect_minimizers(first, second)
    assert common.members == ("y",)
    assert common.objective == "a&b"
    assert len(intersect_minimizers(first, MinimizerSet(7, "c", ("z",), 0.0, "brute", True))) == 0
    with pytest.raises(ValueError):
        intersect_minimizers(first, MinimizerSet(8, "b", ("y",), 2.0, "brute", True))


def test_pendant_rootings():
    assert pendant_rootings(parse_tree("C(C,C,C)"), {3}) == ["O(C(C,C))"]
    assert pendant_rootings(parse_tree("C(C(C(C)))")) == ["O(C(C(C)))"]
    assert pendant_rootings(parse_tree("C(C,C(C,C))")) == ["O(C(C(C,C)))", "O(C(C,C(C)))"]
    assert pendant_rootings(parse_tree("C(C,C(C,C))"), {2}) == ["O(C(C(C,C)))"]


@pytest.mark.parametrize("order", range(4, 13))
def test_regression_minimizers_follow_their_indices(order):
    rootings = set()
    for tree in minimize_brute(order, "c").trees():
        rootings.update(pendant_rootings(tree, {3, 4}))
    bp1 = minimize_brute(order, "bp1", rooted=True)
    assert len(bp1) > 0
    assert set(bp1.members) <= rootings

    wio = minimize_brute(order, "wio-raw", rooted=True)
    assert set(minimize_brute(order, "bp2", rooted=True).members) <= set(wio.members)
    for tree in wio.trees():
        assert tree.degrees[tree.subroot] in (3, 4)
    assert all(is_extremely_branched(tree) for tree in minimize_brute(order, "wio", rooted=True).trees())


def test_c_and_wio_minimizers_differ_at_order_nine():
    c = minimize_brute(9, "c", rooted=True)
    wio = minimize_brute(9, "wio-raw", rooted=True)
    assert len(c) > 0
    assert len(wio) > 0
    assert len(intersect_minimizers(c, wio)) == 0


@pytest.mark.parametrize("order", [4, 5, 6, 7, 8, 11, 14])
def test_wio_minimizers_are_rootings_of_c_minimizers(order):
    c = minimize_brute(order, "c", rooted=True)
    wio = minimize_brute(order, "wio", rooted=True)
    assert intersect_minimizers(wio, c).members == wio.members
