"""Brute-force and constructive minimization of objectives over chemical trees."""

from __future__ import annotations

import logging
from collections.abc import Collection, Iterable
from dataclasses import dataclass

from ..encoding import canonical_form, parse_tree
from ..enumeration import (
    MAX_ENUMERATION_ORDER,
    enumerate_chemical_trees,
    enumerate_pendent_rooted,
    exceptional_degree,
)
from ..huffman import extremal_tuple, huffman_trees
from ..indices import ad_hoc_c, oxygen_distance
from ..qspr import REGRESSION_I, RegressionModel
from ..trees import ChemicalTree, PendentRootedTree
from ..utils import is_close, max_degree_or_default, tolerance_or_default, validate_order
from .conditions import check_c_conditions
from .objectives import Objective, get_objective

logger = logging.getLogger(__name__)

METHODS = ("brute", "theory")


class PreconditionError(ValueError):
    """Raised when a constructive minimization is requested outside the conditions that justify it."""


@dataclass(frozen=True)
class MinimizerSet:
    """All trees of one order attaining the minimum of an objective.

    Attributes:
        order (int): Number of vertices.
        objective (str): Objective name.
        members (tuple[str, ...]): Canonical forms of the minimizers, sorted.
        value (float): The common minimum.
        method (str): ``"brute"`` or ``"theory"``.
        rooted (bool): Whether members are pendent-rooted.

    """

    order: int
    objective: str
    members: tuple[str, ...]
    value: float
    method: str
    rooted: bool

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            msg = f"Expected method to be one of {METHODS}, but got {self.method!r}."
            raise ValueError(msg)
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, tree: object) -> bool:
        if isinstance(tree, ChemicalTree):
            tree = canonical_form(tree)
        return tree in self.members

    def trees(self) -> list[ChemicalTree]:
        """Parse the members back into trees."""
        return [parse_tree(code) for code in self.members]

    def to_dict(self) -> dict[str, object]:
        return {
            "order": self.order,
            "objective": self.objective,
            "rooted": self.rooted,
            "method": self.method,
            "value": self.value,
            "members": list(self.members),
        }


def argmin(
    trees: Iterable[ChemicalTree], objective: Objective, tolerance: float | None = None
) -> tuple[float, list[ChemicalTree]]:
    """Fold a stream of trees into the minimum of ``objective`` and every tree attaining it.

    Integer-valued objectives compare exactly; real values tie within the relative tolerance. When the
    objective has a refinement key, only the ties minimizing that key are kept.
    """
    tol = 0.0 if objective.integer_valued else tolerance_or_default(tolerance)
    best = float("inf")
    members: list[ChemicalTree] = []
    for tree in trees:
        value = objective(tree)
        if members and is_close(value, best, tol):
            members.append(tree)
        elif value < best:
            best, members = value, [tree]
    if objective.refine is not None and members:
        keys = [objective.refine(tree) for tree in members]
        smallest = min(keys)
        members = [tree for tree, key in zip(members, keys) if key == smallest]
    return best, members


def minimize_brute(
    order: int,
    objective: str,
    rooted: bool = False,
    model: RegressionModel | None = None,
    tolerance: float | None = None,
) -> MinimizerSet:
    """Minimize an objective by exhaustive enumeration of free or pendent-rooted trees.

    Args:
        order (int): Number of vertices, at most 20.
        objective (str): Objective name, see :func:`get_objective`.
        rooted (bool): Search pendent-rooted trees. Default: `False`.
        model (RegressionModel | None): Coefficients of ``c`` and ``c1``. Default: Regression I.
        tolerance (float | None): Relative tolerance for real-valued objectives. Default: if `None`, uses a
            global default.

    Example:
        >>> minimize_brute(5, "wio", rooted=True).members
        ('O(C(C,C,C))',)

    """
    target = get_objective(objective, model)
    if target.rooted_only and not rooted:
        msg = f"Expected rooted=True for objective {objective!r}, which needs a pendent root."
        raise ValueError(msg)
    validate_order("order", order, 3 if rooted else 2, MAX_ENUMERATION_ORDER)
    trees = enumerate_pendent_rooted(order) if rooted else enumerate_chemical_trees(order)
    value, members = argmin(trees, target, tolerance)
    logger.debug(
        "Brute-force %s minimum over order %d: %s attained by %d trees", objective, order, value, len(members)
    )
    return MinimizerSet(order, objective, tuple(canonical_form(t) for t in members), value, "brute", rooted)


def minimize_theory(
    order: int, objective: str, model: RegressionModel | None = None, max_degree: int | None = None
) -> MinimizerSet:
    """Construct the minimizer set directly, without enumeration.

    For ``c`` the degree costs must satisfy the conditions under which every minimizer is extremely branched
    (see :func:`check_c_conditions`), with ``b3 >= 0`` and maximum degree 4. All extremely branched trees
    share their degree counts, so only the second Zagreb index separates them: it decreases with the number
    of internal neighbors of the exceptional vertex, which is therefore made as large as possible (any
    placement is optimal when ``b3 = 0``).

    For ``wio`` the root is a forced pendant of dominant weight and the carbons have unit weight; the
    minimizers are the Huffman trees of the extremal generating tuple, all of them extremely branched.

    Args:
        order (int): Number of vertices, between 4 and 20.
        objective (str): ``"c"`` or ``"wio"``.
        model (RegressionModel | None): Coefficients of ``c``. Default: Regression I.
        max_degree (int | None): Degree bound. Default: if `None`, uses a global default.

    Raises:
        PreconditionError: If the conditions for ``c`` fail.
        ValueError: If the objective has no construction.

    """
    validate_order("order", order, 4, MAX_ENUMERATION_ORDER)
    delta = max_degree_or_default(max_degree)
    if objective == "c":
        return _theory_c(order, REGRESSION_I if model is None else model, delta)
    if objective == "wio":
        return _theory_wio(order, delta)
    msg = f"Expected objective 'c' or 'wio' for the constructive method, but got {objective!r}."
    raise ValueError(msg)


def _theory_c(order: int, model: RegressionModel, delta: int) -> MinimizerSet:
    if delta != 4:
        msg = f"Expected maximum degree 4 for the constructive C minimization, but got {delta}."
        raise PreconditionError(msg)
    if model.b3 < 0:
        msg = f"Expected b3 >= 0 for the constructive C minimization, but got {model.b3}."
        raise PreconditionError(msg)
    report = check_c_conditions(model.c, model.b3)
    if not report.applies_to(order):
        msg = f"Expected the degree-cost conditions to hold at order {order}, but got {report.to_dict()}."
        raise PreconditionError(msg)

    internal_count, exception = exceptional_degree(order, delta)
    if internal_count == 1:
        skeletons = [ChemicalTree([], 1)]
    else:
        skeletons = list(enumerate_chemical_trees(internal_count))
    candidates: list[tuple[int, ChemicalTree]] = []
    for skeleton in skeletons:
        for short in range(skeleton.order) if exception != delta else [None]:
            if short is not None and skeleton.degrees[short] > exception:
                continue
            tree = _attach_pendants(skeleton, short, exception, delta)
            candidates.append((0 if short is None else skeleton.degrees[short], tree))
    if model.b3 > 0:
        widest = max(k for k, _ in candidates)
        candidates = [(k, t) for k, t in candidates if k == widest]
    members = {canonical_form(t) for _, t in candidates}
    value = ad_hoc_c(candidates[0][1], model.c, model.b3)
    logger.debug("Constructed %d C minimizers of order %d", len(members), order)
    return MinimizerSet(order, "c", tuple(members), value, "theory", rooted=False)


def _attach_pendants(skeleton: ChemicalTree, short: int | None, exception: int, delta: int) -> ChemicalTree:
    """Grow every skeleton vertex to degree ``delta`` (``exception`` for ``short``) with new pendants."""
    edges = list(skeleton.edges)
    next_id = skeleton.order
    for v in range(skeleton.order):
        target = exception if v == short else delta
        for _ in range(target - skeleton.degrees[v]):
            edges.append((v, next_id))
            next_id += 1
    return ChemicalTree(edges, next_id, delta)


def _theory_wio(order: int, delta: int) -> MinimizerSet:
    weights = [float(order)] + [1.0] * (order - 1)
    tuple_ = extremal_tuple(weights, forced_pendants=(0,), max_degree=delta)
    members = set()
    value = 0
    for weighted in huffman_trees(tuple_, up_to_isomorphism=True):
        rooted = PendentRootedTree.from_tree(weighted.tree, 0)
        members.add(canonical_form(rooted))
        value = oxygen_distance(rooted)
    logger.debug("Constructed %d oxygen-distance minimizers of order %d", len(members), order)
    return MinimizerSet(order, "wio", tuple(members), value, "theory", rooted=True)


def intersect_minimizers(first: MinimizerSet, second: MinimizerSet) -> MinimizerSet:
    """Trees minimizing both objectives; an empty result means they have no common minimizer.

    The result carries the objective names joined by ``&`` and the value of ``first``.
    """
    if first.order != second.order or first.rooted != second.rooted:
        msg = (
            "Expected minimizer sets of the same order and rootedness, but got "
            f"(order={first.order}, rooted={first.rooted}) and "
            f"(order={second.order}, rooted={second.rooted})."
        )
        raise ValueError(msg)
    common = set(first.members) & set(second.members)
    name = f"{first.objective}&{second.objective}"
    return MinimizerSet(first.order, name, tuple(common), first.value, first.method, first.rooted)


def pendant_rootings(tree: ChemicalTree, subroot_degrees: Collection[int] = (2, 3, 4)) -> list[str]:
    """Canonical forms of the tree rooted at each pendant whose neighbor has one of the given degrees.

    Example:
        >>> pendant_rootings(parse_tree("C(C,C,C)"), {3})
        ['O(C(C,C))']

    """
    forms = {
        canonical_form(PendentRootedTree.from_tree(tree, v))
        for v in tree.pendent_vertices
        if tree.degrees[tree.adjacency[v][0]] in subroot_degrees
    }
    return sorted(forms)
