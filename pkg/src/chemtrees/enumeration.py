"""Duplicate-free generation of chemical trees, pendent-rooted trees, and extremely branched trees."""

from __future__ import annotations

import logging
from collections import Counter
from collections.abc import Iterator
from dataclasses import dataclass
from functools import cache
from itertools import combinations_with_replacement, product

import networkx as nx

from .encoding import canonical_form, parse_tree
from .trees import ChemicalTree, PendentRootedTree
from .utils import max_degree_or_default, validate_order

logger = logging.getLogger(__name__)

__all__ = [
    "EnumerationRequest",
    "MAX_ENUMERATION_ORDER",
    "MAX_ORACLE_ORDER",
    "canonical_codes",
    "enumerate_chemical_trees",
    "enumerate_extremely_branched",
    "enumerate_pendent_rooted",
    "enumerate_trees",
    "exceptional_degree",
    "is_extremely_branched",
    "prufer_oracle_count",
]

MAX_ENUMERATION_ORDER = 20
MAX_ORACLE_ORDER = 10


@dataclass(frozen=True)
class EnumerationRequest:
    """Parameters of an enumeration.

    Args:
        order (int): Number of vertices, at least 2.
        rooted (bool): Enumerate pendent-rooted trees instead of free trees. Default: `False`.
        extremely_branched_only (bool): Keep only extremely branched trees. Default: `False`.
        max_degree (int | None): Degree bound. Default: if `None`, uses a global default.

    """

    order: int
    rooted: bool = False
    extremely_branched_only: bool = False
    max_degree: int | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "max_degree", max_degree_or_default(self.max_degree))
        minimum = 4 if self.extremely_branched_only else 3 if self.rooted else 2
        validate_order("order", self.order, minimum, MAX_ENUMERATION_ORDER)


@cache
def _branches(size: int, max_children: int, max_degree: int) -> tuple[str, ...]:
    """Sorted canonical codes of rooted trees with ``size`` vertices.

    The top vertex has at most ``max_children`` children and every other vertex at most ``max_degree - 1``.
    """
    if size == 1:
        return ("C",)
    codes: list[str] = []
    for sizes in _partitions(size - 1, max_children, size - 1):
        for children in _child_multisets(sizes, max_degree):
            codes.append("C(" + ",".join(sorted(children)) + ")")
    return tuple(sorted(codes))


def _partitions(total: int, max_parts: int, largest: int) -> Iterator[tuple[int, ...]]:
    """Non-increasing tuples of positive parts summing to ``total``."""
    if total == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for part in range(min(total, largest), 0, -1):
        for rest in _partitions(total - part, max_parts - 1, part):
            yield (part, *rest)


def _child_multisets(sizes: tuple[int, ...], max_degree: int) -> Iterator[tuple[str, ...]]:
    groups = [
        list(combinations_with_replacement(_branches(size, max_degree - 1, max_degree), count))
        for size, count in Counter(sizes).items()
    ]
    for choice in product(*groups):
        yield tuple(code for group in choice for code in group)


def _split_children(code: str) -> list[str]:
    if len(code) == 1:
        return []
    parts, depth, start = [], 0, 2
    for i, char in enumerate(code[2:-1], start=2):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        elif char == "," and depth == 0:
            parts.append(code[start:i])
            start = i + 1
    parts.append(code[start:-1])
    return parts


def _join(children: list[str]) -> str:
    return "C(" + ",".join(sorted(children)) + ")"


def canonical_codes(order: int, rooted: bool = False, max_degree: int | None = None) -> list[str]:
    """Canonical forms of all trees of an order, in ascending string order.

    Free trees are built around their centroid: either one central vertex whose branches all have fewer
    than ``order / 2`` vertices, or two adjacent central vertices each carrying half of the tree. Rooted
    trees attach a single branch of ``order - 1`` vertices to the ``O`` root. Every isomorphism class is
    produced exactly once, so no filtering is needed.

    Args:
        order (int): Number of vertices.
        rooted (bool): Produce pendent-rooted forms. Default: `False`.
        max_degree (int | None): Degree bound. Default: if `None`, uses a global default.

    """
    delta = max_degree_or_default(max_degree)
    if rooted:
        validate_order("order", order, 2, MAX_ENUMERATION_ORDER)
        return [f"O({code})" for code in _branches(order - 1, delta - 1, delta)]

    validate_order("order", order, 1, MAX_ENUMERATION_ORDER)
    if order == 1:
        return ["C"]
    codes = []
    for sizes in _partitions(order - 1, delta, (order - 1) // 2):
        for children in _child_multisets(sizes, delta):
            codes.append(_join(list(children)))
    if order % 2 == 0:
        halves = _branches(order // 2, delta - 1, delta)
        for i, first in enumerate(halves):
            for second in halves[i:]:
                codes.append(
                    min(_join([*_split_children(first), second]), _join([*_split_children(second), first]))
                )
    return sorted(codes)


def enumerate_trees(request: EnumerationRequest) -> Iterator[ChemicalTree]:
    """Yield one tree per isomorphism class described by ``request``, in ascending canonical order.

    Trees are parsed lazily from their canonical forms.
    """
    codes = canonical_codes(request.order, request.rooted, request.max_degree)
    logger.debug(
        "Enumerating %d canonical forms of order %d (rooted=%s)", len(codes), request.order, request.rooted
    )
    previous = None
    for code in codes:
        if code == previous:
            msg = f"Duplicate canonical form {code} emitted for order {request.order}."
            raise RuntimeError(msg)
        previous = code
        tree = parse_tree(code, request.max_degree)
        if request.extremely_branched_only and not is_extremely_branched(tree):
            continue
        yield tree


def enumerate_chemical_trees(order: int, max_degree: int | None = None) -> Iterator[ChemicalTree]:
    """Yield the free chemical trees of ``order``, one per isomorphism class.

    Example:
        >>> sum(1 for _ in enumerate_chemical_trees(7))
        9

    """
    validate_order("order", order, 2, MAX_ENUMERATION_ORDER)
    return enumerate_trees(EnumerationRequest(order, max_degree=max_degree))


def enumerate_pendent_rooted(order: int, max_degree: int | None = None) -> Iterator[PendentRootedTree]:
    """Yield the pendent-rooted chemical trees of ``order``, one per root-preserving isomorphism class.

    Order 2 (methanol) is excluded, so ``order`` must be at least 3.
    """
    validate_order("order", order, 3, MAX_ENUMERATION_ORDER)
    request = EnumerationRequest(order, rooted=True, max_degree=max_degree)
    return enumerate_trees(request)  # type: ignore[return-value]


def enumerate_extremely_branched(
    order: int, rooted: bool = False, max_degree: int | None = None
) -> Iterator[ChemicalTree]:
    """Yield the extremely branched trees of ``order`` (free, or every distinct pendant rooting)."""
    validate_order("order", order, 4, MAX_ENUMERATION_ORDER)
    request = EnumerationRequest(order, rooted=rooted, extremely_branched_only=True, max_degree=max_degree)
    return enumerate_trees(request)


def exceptional_degree(order: int, max_degree: int | None = None) -> tuple[int, int]:
    r"""Internal vertex count and degree of the exceptional internal vertex of an extremely branched tree.

    With :math:`q = \lceil (n-2)/(\Delta-1) \rceil` internal vertices the degree identity leaves
    :math:`n - 2 + \Delta - q(\Delta - 1)` for the one internal vertex that may fall short of :math:`\Delta`.
    For :math:`\Delta = 4` this is 2 when :math:`n \equiv 0`, 3 when :math:`n \equiv 1` and 4 (no exception)
    when :math:`n \equiv 2 \pmod 3`.

    Returns:
        tuple[int, int]: The internal vertex count ``q`` and the exceptional degree.

    """
    delta = max_degree_or_default(max_degree)
    validate_order("order", order, 3)
    internal = -(-(order - 2) // (delta - 1))
    return internal, order - 2 + delta - internal * (delta - 1)


def is_extremely_branched(tree: ChemicalTree) -> bool:
    """Return whether every internal vertex has maximum degree, with the single exception fixed by the order.

    Args:
        tree (ChemicalTree): A free or rooted tree of order at least 4.

    """
    validate_order("order", tree.order, 4)
    internal_count, exception = exceptional_degree(tree.order, tree.max_degree)
    internal = sorted(tree.degrees[v] for v in tree.internal_vertices)
    expected = [tree.max_degree] * internal_count
    if exception != tree.max_degree:
        expected[0] = exception
    return internal == expected


def prufer_oracle_count(order: int, max_degree: int | None = None) -> int:
    """Count isomorphism classes of trees with degrees at most ``max_degree`` from labeled trees.

    Labeled trees are decoded from Prüfer sequences, in which vertex ``v`` appears ``deg(v) - 1`` times.
    Every unlabeled tree has a labeling whose degrees do not increase with the label, so only sequences
    whose label multiplicities are non-increasing are decoded.

    Args:
        order (int): Number of vertices, ``2 <= order <= 10``.
        max_degree (int | None): Degree bound. Default: if `None`, uses a global default.

    """
    delta = max_degree_or_default(max_degree)
    validate_order("order", order, 2, MAX_ORACLE_ORDER)
    if order == 2:
        return 1
    classes = set()
    for multiplicities in _partitions(order - 2, order, delta - 1):
        counts = dict(enumerate(multiplicities))
        for sequence in _distinct_permutations(counts, order - 2):
            graph = nx.from_prufer_sequence(sequence)
            classes.add(canonical_form(ChemicalTree(graph.edges(), order, delta)))
    logger.debug("Prüfer oracle: %d classes of order %d with max degree %d", len(classes), order, delta)
    return len(classes)


def _distinct_permutations(counts: dict[int, int], length: int) -> Iterator[list[int]]:
    if length == 0:
        yield []
        return
    for label, count in counts.items():
        if count:
            counts[label] -= 1
            for rest in _distinct_permutations(counts, length - 1):
                yield [label, *rest]
            counts[label] += 1
