"""Computational audits: the branching of boiling-point minimizers and the small-weight limit of the
vertex-weighted Wiener index."""

from __future__ import annotations

import logging
from collections.abc import Iterable
from dataclasses import asdict, dataclass, replace

import torch

from ..encoding import canonical_form
from ..enumeration import enumerate_pendent_rooted, is_extremely_branched
from ..indices import vertex_weighted_wiener
from ..qspr import BASIC, predict
from ..trees import ChemicalTree, PendentRootedTree, VertexWeightedTree
from ..utils import validate_order
from .objectives import Objective, get_objective
from .search import argmin

logger = logging.getLogger(__name__)

MAX_AUDIT_ORDER = 14


@dataclass(frozen=True)
class AuditRow:
    """Boiling-point minimizers of one order under the basic regression.

    Attributes:
        order (int): Number of vertices, oxygen included.
        argmin (tuple[str, ...]): Minimizers over all pendent-rooted trees.
        value (float): Their predicted boiling point.
        all_extremely_branched (bool): Whether every minimizer is extremely branched.
        restricted_argmin (tuple[str, ...]): Minimizers over the extremely branched rooted trees only.
        restricted_value (float): Their predicted boiling point.
        restricted_agrees (bool): Whether both searches find the same trees.
        wio_minimizers (tuple[str, ...]): Minimizers of the oxygen-distance index, every tie kept.
        remainder_minimizers (tuple[str, ...]): Minimizers of the prediction without its oxygen-distance term.
        intersection (tuple[str, ...]): Trees minimizing both of the above.
        matches_intersection (bool): Whether the intersection is non-empty and equals ``argmin``.

    """

    order: int
    argmin: tuple[str, ...]
    value: float
    all_extremely_branched: bool
    restricted_argmin: tuple[str, ...]
    restricted_value: float
    restricted_agrees: bool
    wio_minimizers: tuple[str, ...]
    remainder_minimizers: tuple[str, ...]
    intersection: tuple[str, ...]
    matches_intersection: bool

    def to_dict(self) -> dict[str, object]:
        return {key: list(v) if isinstance(v, tuple) else v for key, v in asdict(self).items()}


def _codes(trees: Iterable[ChemicalTree]) -> tuple[str, ...]:
    return tuple(sorted(canonical_form(t) for t in trees))


def audit_conjecture_bp0(orders: Iterable[int] = range(4, MAX_AUDIT_ORDER + 1)) -> list[AuditRow]:
    """Check whether the basic-regression boiling-point minimizers are extremely branched.

    For each order the minimizers over all alcohol skeletons are compared with the minimizers over the
    extremely branched skeletons, and with the common minimizers of the oxygen-distance index and of the
    remaining terms of the regression. When the latter two share a tree, those shared trees are exactly the
    boiling-point minimizers.

    Args:
        orders (Iterable[int]): Orders to audit, each between 4 and 14. Default: `range(4, 15)`.

    """
    bp0 = get_objective("bp0")
    wio = get_objective("wio-raw")
    without_wio = replace(BASIC, b1=0.0, active=BASIC.active - {"wio3"})
    remainder = Objective("bp0-remainder", lambda tree: predict(without_wio, tree), integer_valued=False)

    rows = []
    for order in orders:
        validate_order("order", order, 4, MAX_AUDIT_ORDER)
        trees = list(enumerate_pendent_rooted(order))
        value, members = argmin(trees, bp0)
        branched = [t for t in trees if is_extremely_branched(t)]
        restricted_value, restricted = argmin(branched, bp0)
        wio_members = set(_codes(argmin(trees, wio)[1]))
        remainder_members = set(_codes(argmin(trees, remainder)[1]))
        intersection = tuple(sorted(wio_members & remainder_members))
        codes = _codes(members)
        rows.append(
            AuditRow(
                order=order,
                argmin=codes,
                value=value,
                all_extremely_branched=all(is_extremely_branched(t) for t in members),
                restricted_argmin=_codes(restricted),
                restricted_value=restricted_value,
                restricted_agrees=codes == _codes(restricted),
                wio_minimizers=tuple(sorted(wio_members)),
                remainder_minimizers=tuple(sorted(remainder_members)),
                intersection=intersection,
                matches_intersection=bool(intersection) and intersection == codes,
            )
        )
        logger.debug("Audited order %d over %d rooted trees: minimizers %s", order, len(trees), codes)
    return rows


@dataclass(frozen=True)
class EpsilonRow:
    """Minimizers of the vertex-weighted Wiener index with a heavy root against the oxygen-distance ones."""

    order: int
    epsilon: float
    vwwi_minimizers: tuple[str, ...]
    wio_minimizers: tuple[str, ...]

    @property
    def agrees(self) -> bool:
        return self.vwwi_minimizers == self.wio_minimizers

    def to_dict(self) -> dict[str, object]:
        return {**asdict(self), "agrees": self.agrees}


def _epsilon_weights(tree: PendentRootedTree, epsilon: float) -> torch.Tensor:
    weights = torch.full((tree.order,), epsilon, dtype=torch.float64)
    weights[tree.root] = 1 / epsilon
    return weights


def check_epsilon_reduction(orders: Iterable[int] = range(4, 11), epsilon: float = 1e-3) -> list[EpsilonRow]:
    r"""Compare the minimizers of the vertex-weighted Wiener index with root weight :math:`1/\varepsilon` and
    carbon weights :math:`\varepsilon` with the oxygen-distance minimizers.

    The weighted index equals :math:`\mathrm{WI_O} + \varepsilon^2 W_C`, where :math:`W_C` is the Wiener index
    of the carbon skeleton, so for small :math:`\varepsilon` both minimizer sets coincide, ties of the
    oxygen-distance index being broken by the Wiener index.

    Args:
        orders (Iterable[int]): Orders to check, each between 4 and 14. Default: `range(4, 11)`.
        epsilon (float): Carbon weight, in ``(0, 1)``. Default: `1e-3`.

    """
    if not 0 < epsilon < 1:
        msg = f"Expected epsilon in (0, 1), but got {epsilon}."
        raise ValueError(msg)
    wio = get_objective("wio")
    vwwi = Objective(
        "vwwi-epsilon",
        lambda tree: vertex_weighted_wiener(
            VertexWeightedTree(tree, _epsilon_weights(tree, epsilon))  # type: ignore[arg-type]
        ),
        rooted_only=True,
        integer_valued=False,
    )
    rows = []
    for order in orders:
        validate_order("order", order, 4, MAX_AUDIT_ORDER)
        trees = list(enumerate_pendent_rooted(order))
        rows.append(EpsilonRow(order, epsilon, _codes(argmin(trees, vwwi)[1]), _codes(argmin(trees, wio)[1])))
    return rows
