"""Topological indices of chemical trees: degree counts, Zagreb indices, and Wiener-type indices.

Indices of unweighted trees are computed with integer arithmetic. For pendent-rooted trees the root takes part
in every index like any other vertex.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import astuple, dataclass
from typing import TYPE_CHECKING

import torch
from torch import Tensor

from .trees import ChemicalTree, PendentRootedTree, breadth_first_order, distance_matrix, distances_from
from .utils import initialize_tensor

if TYPE_CHECKING:
    from .trees import VertexWeightedTree

__all__ = [
    "DegreeCostVector",
    "DegreeCounts",
    "ad_hoc_c",
    "degree_counts",
    "first_zagreb",
    "generalized_first_zagreb",
    "oxygen_distance",
    "pair_weighted_wiener",
    "second_zagreb",
    "subroot_indicator",
    "vertex_weighted_wiener",
    "wiener",
]


@dataclass(frozen=True)
class DegreeCounts:
    """Number of vertices of each degree 1 to 4."""

    n1: int
    n2: int
    n3: int
    n4: int

    def __post_init__(self) -> None:
        if any(count < 0 for count in astuple(self)):
            msg = f"Expected non-negative degree counts, but got {astuple(self)}."
            raise ValueError(msg)

    @property
    def order(self) -> int:
        """Total number of vertices."""
        return self.n1 + self.n2 + self.n3 + self.n4

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n1, self.n2, self.n3, self.n4)


@dataclass(frozen=True)
class DegreeCostVector:
    """Cost ``c(d)`` contributed by each vertex of degree ``d``, for ``d`` from 1 to 4."""

    c1: float = 0.0
    c2: float = 0.0
    c3: float = 0.0
    c4: float = 0.0

    def __post_init__(self) -> None:
        if not all(math.isfinite(value) for value in astuple(self)):
            msg = f"Expected finite degree costs, but got {astuple(self)}."
            raise ValueError(msg)

    @classmethod
    def from_sequence(cls, values: Sequence[float]) -> DegreeCostVector:
        """Build from four costs ``(c1, c2, c3, c4)``."""
        if len(values) != 4:
            msg = f"Expected 4 degree costs, but got {len(values)}."
            raise ValueError(msg)
        return cls(*(float(value) for value in values))

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.c1, self.c2, self.c3, self.c4)


def degree_counts(tree: ChemicalTree) -> DegreeCounts:
    """Count vertices of each degree, the root of a rooted tree included.

    Example:
        >>> degree_counts(parse_tree("O(C(C,C,C))"))
        DegreeCounts(n1=4, n2=0, n3=0, n4=1)

    """
    counts = [0, 0, 0, 0]
    for v, d in enumerate(tree.degrees):
        if not 1 <= d <= 4:
            msg = f"Expected vertex degrees between 1 and 4, but vertex {v} has degree {d}."
            raise ValueError(msg)
        counts[d - 1] += 1
    return DegreeCounts(*counts)


def first_zagreb(tree: ChemicalTree) -> int:
    """Sum of squared vertex degrees."""
    return sum(d * d for d in tree.degrees)


def second_zagreb(tree: ChemicalTree) -> int:
    """Sum over edges of the product of end-vertex degrees."""
    degrees = tree.degrees
    return sum(degrees[u] * degrees[v] for u, v in tree.edges)


def generalized_first_zagreb(tree: ChemicalTree, costs: DegreeCostVector) -> float:
    r"""Generalized first Zagreb index :math:`C_1 = \sum_{d=1}^{4} c(d)\, n_d`.

    Args:
        tree (ChemicalTree): The tree.
        costs (DegreeCostVector): Cost per vertex of each degree.

    Returns:
        float: The index value.

    """
    counts = degree_counts(tree)
    return sum(c * n for c, n in zip(costs.as_tuple(), counts.as_tuple()))


def ad_hoc_c(tree: ChemicalTree, costs: DegreeCostVector, b3: float) -> float:
    r"""Ad-hoc index :math:`C = C_1 + b_3 M_2` combining degree costs with the second Zagreb index.

    Args:
        tree (ChemicalTree): The tree.
        costs (DegreeCostVector): Cost per vertex of each degree.
        b3 (float): Weight of the second Zagreb index.

    """
    return generalized_first_zagreb(tree, costs) + b3 * second_zagreb(tree)


def wiener(tree: ChemicalTree) -> int:
    """Sum of distances over unordered vertex pairs.

    Every edge separates the tree into parts of ``s`` and ``n - s`` vertices and lies on ``s * (n - s)``
    shortest paths.
    """
    n = tree.order
    sizes = _branch_sizes(tree, 0)
    return sum(sizes[v] * (n - sizes[v]) for v in range(1, n))


def pair_weighted_wiener(
    tree: ChemicalTree, pair_weights: Tensor | Sequence[Sequence[float]] | Callable[[int, int], float]
) -> float:
    r"""Pair-weighted Wiener index :math:`\frac{1}{2} \sum_{u, v} \mu(u, v)\, d(u, v)`.

    Args:
        tree (ChemicalTree): The tree.
        pair_weights (Tensor | Sequence[Sequence[float]] | Callable[[int, int], float]): Symmetric
            non-negative pair weights, either as an ``(n, n)`` matrix or a function of two vertex ids.

    Returns:
        float: The index value.

    """
    n = tree.order
    if callable(pair_weights):
        pair_weights = [[pair_weights(u, v) for v in range(n)] for u in range(n)]
    weights = initialize_tensor("pair_weights", pair_weights, is_non_negative=True)
    if weights.shape != (n, n):
        msg = f"Expected pair_weights to have shape ({n}, {n}), but got {tuple(weights.shape)}."
        raise ValueError(msg)
    if not torch.allclose(weights, weights.T, rtol=1e-12, atol=0.0):
        msg = "Expected pair_weights to be symmetric, but got an asymmetric matrix."
        raise ValueError(msg)
    return 0.5 * float((weights * distance_matrix(tree).to(weights.dtype)).sum().item())


def vertex_weighted_wiener(tree: VertexWeightedTree) -> float:
    r"""Vertex-weighted Wiener index :math:`\frac{1}{2} \sum_{u, v} \mu(u) \mu(v)\, d(u, v)`.

    Computed in linear time as :math:`\sum_e f_e (\bar{\mu} - f_e)`, where :math:`f_e` is the weight on the
    side of edge :math:`e` away from the heaviest vertex.
    """
    weights = tree.weights
    heaviest = int(torch.argmax(weights).item())
    sides = _branch_sizes(tree.tree, heaviest, weights.tolist())
    f = torch.tensor([sides[v] for v in range(tree.order) if v != heaviest], dtype=weights.dtype)
    return float((f * (weights.sum() - f)).sum().item())


def oxygen_distance(tree: PendentRootedTree) -> int:
    """Sum of the distances of all vertices to the root."""
    return sum(distances_from(tree, tree.root))


def subroot_indicator(tree: PendentRootedTree, degree: int) -> int:
    """Return 1 when the sub-root has the given degree (2, 3 or 4), else 0."""
    if degree not in (2, 3, 4):
        msg = f"Expected degree to be 2, 3 or 4, but got {degree}."
        raise ValueError(msg)
    if tree.order < 3:
        msg = f"Expected a rooted tree of order at least 3, but got order {tree.order}."
        raise ValueError(msg)
    return int(tree.degrees[tree.subroot] == degree)


def _branch_sizes(tree: ChemicalTree, top: int, weights: Sequence[float] | None = None) -> list[float]:
    """Total weight (vertex count by default) of the subtree below each vertex when hanging from ``top``."""
    order = breadth_first_order(tree.adjacency, top)
    parent = [-1] * tree.order
    for u in order:
        for w in tree.adjacency[u]:
            if w != parent[u]:
                parent[w] = u
    sizes = list(weights) if weights is not None else [1] * tree.order
    for v in reversed(order):
        if v != top:
            sizes[parent[v]] += sizes[v]
    return sizes
