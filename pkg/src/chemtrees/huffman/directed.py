"""Subordinate weights and the arc form of the vertex-weighted Wiener index on directed trees."""

from __future__ import annotations

import torch
from torch import Tensor

from ..trees import DirectedTree
from ..utils import tolerance_or_default


def subordinate_weights(tree: DirectedTree) -> Tensor:
    """Weight ``f(v)`` of the subordinate group of every vertex; the terminal carries the total weight."""
    return tree.subordinate_weights


def vwwi_directed(tree: DirectedTree) -> float:
    r"""Vertex-weighted Wiener index from the arcs of a directed tree.

    Each arc :math:`(v, p(v))` separates the subordinate group of :math:`v` from the rest of the tree:

    .. math::
        \mathrm{VWWI} = \sum_{v \neq t} f(v)\, (\bar{\mu} - f(v)).

    The value does not depend on which vertex is the terminal :math:`t`.
    """
    f = tree.subordinate_weights
    mask = torch.ones(tree.order, dtype=torch.bool)
    mask[tree.terminal] = False
    arcs = f[mask]
    return float((arcs * (tree.weights.sum() - arcs)).sum().item())


def is_proper(tree: DirectedTree, tolerance: float | None = None) -> bool:
    r"""Return whether every non-terminal internal vertex has :math:`f(m) \le \bar{\mu} / 2`.

    Args:
        tree (DirectedTree): The directed tree.
        tolerance (float | None): Relative tolerance of the comparison. Default: if `None`, uses a global
            default.

    """
    tol = tolerance_or_default(tolerance)
    half = tree.total_weight / 2
    f = tree.subordinate_weights.tolist()
    return all(
        f[m] <= half + tol * max(1.0, half) for m in tree.internal_vertices if m != tree.terminal
    )
