"""Generating tuples and the generalized Huffman algorithm for vertex-weighted Wiener minimization."""

from __future__ import annotations

import logging
from collections import defaultdict
from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING

from torch import Tensor

from ..enumeration import exceptional_degree
from ..trees import ChemicalTree, DirectedTree, VertexWeightedTree, breadth_first_order
from ..utils import initialize_tensor, max_degree_or_default, tolerance_or_default

if TYPE_CHECKING:
    from ..types import Vector

logger = logging.getLogger(__name__)


class GeneratingTuple:
    r"""Vertex set ``0..n-1`` with prescribed weights and degrees.

    The degrees must be realizable by a tree:

    .. math::
        \sum_{v \in V} d(v) = 2(|V| - 1).

    Vertices of degree 1 form the pendant set :math:`W(\mu, d)` and the others the internal set
    :math:`M(\mu, d)`.

    Args:
        weights (Vector): Non-negative weight of every vertex.
        degrees (Sequence[int]): Positive prescribed degree of every vertex.

    """

    def __init__(self, weights: Vector, degrees: Sequence[int]) -> None:
        degree_tuple = tuple(int(d) for d in degrees)
        self._weights = initialize_tensor("weights", weights, length=len(degree_tuple), is_non_negative=True)
        if len(degree_tuple) < 2:
            msg = f"Expected at least 2 vertices, but got {len(degree_tuple)}."
            raise ValueError(msg)
        if any(d < 1 for d in degree_tuple):
            msg = f"Expected positive degrees, but got {degree_tuple}."
            raise ValueError(msg)
        if sum(degree_tuple) != 2 * (len(degree_tuple) - 1):
            msg = (
                f"Expected degrees summing to {2 * (len(degree_tuple) - 1)} for {len(degree_tuple)} "
                f"vertices, but got {sum(degree_tuple)}."
            )
            raise ValueError(msg)
        self._degrees = degree_tuple

    @property
    def order(self) -> int:
        """Number of vertices."""
        return len(self._degrees)

    @property
    def vertex_ids(self) -> tuple[int, ...]:
        """The ordered vertex set."""
        return tuple(range(self.order))

    @property
    def weights(self) -> Tensor:
        """Vertex weights."""
        return self._weights

    @property
    def degrees(self) -> tuple[int, ...]:
        """Prescribed vertex degrees."""
        return self._degrees

    @property
    def total_weight(self) -> float:
        """Sum of all weights."""
        return float(self._weights.sum().item())

    @property
    def pendent_vertices(self) -> tuple[int, ...]:
        """Vertices of prescribed degree 1."""
        return tuple(v for v, d in enumerate(self._degrees) if d == 1)

    @property
    def internal_vertices(self) -> tuple[int, ...]:
        """Vertices of prescribed degree at least 2."""
        return tuple(v for v, d in enumerate(self._degrees) if d > 1)

    def __repr__(self) -> str:
        return f"GeneratingTuple(weights={self._weights.tolist()}, degrees={list(self._degrees)})"


@dataclass(frozen=True)
class HuffmanStep:
    """One merge: internal ``vertex`` absorbs ``pendants`` and takes ``weight``."""

    vertex: int
    pendants: tuple[int, ...]
    weight: float


@dataclass(frozen=True)
class HuffmanTrace:
    """Record of every merge of a Huffman run; the last step attaches the remaining pendants."""

    steps: tuple[HuffmanStep, ...]
    terminal: int


def is_degree_monotone(tuple_: GeneratingTuple, tolerance: float | None = None) -> bool:
    """Return whether pendant weights are positive and internal weights do not decrease with degree.

    Args:
        tuple_ (GeneratingTuple): The generating tuple.
        tolerance (float | None): Relative tolerance for weight comparisons. Default: if `None`, uses a
            global default.

    """
    tol = tolerance_or_default(tolerance)
    weights = tuple_.weights.tolist()
    if any(weights[w] <= 0 for w in tuple_.pendent_vertices):
        return False
    internal = tuple_.internal_vertices
    degrees = tuple_.degrees
    return all(
        weights[m] <= weights[k] + tol * max(1.0, abs(weights[m]), abs(weights[k]))
        for m in internal
        for k in internal
        if degrees[m] < degrees[k]
    )


def _weight_classes(vertices: Sequence[int], weight: Sequence[float], tol: float) -> list[list[int]]:
    """Group vertices into ascending classes of tied weight, each sorted by id."""
    ordered = sorted(vertices, key=lambda v: (weight[v], v))
    classes: list[list[int]] = []
    for v in ordered:
        if classes:
            anchor = weight[classes[-1][0]]
            if weight[v] - anchor <= tol * max(1.0, abs(anchor), abs(weight[v])):
                classes[-1].append(v)
                continue
        classes.append([v])
    for group in classes:
        group.sort()
    return classes


class _HuffmanState:
    def __init__(self, tuple_: GeneratingTuple) -> None:
        self.weight = tuple_.weights.tolist()
        self.degree = list(tuple_.degrees)
        self.pendants = list(tuple_.pendent_vertices)
        self.internals = list(tuple_.internal_vertices)
        self.parent: list[int | None] = [None] * tuple_.order
        self.steps: list[HuffmanStep] = []
        self.shape = [repr(w) for w in self.weight]

    def copy(self) -> _HuffmanState:
        clone = object.__new__(_HuffmanState)
        clone.weight = list(self.weight)
        clone.degree = list(self.degree)
        clone.pendants = list(self.pendants)
        clone.internals = list(self.internals)
        clone.parent = list(self.parent)
        clone.steps = list(self.steps)
        clone.shape = list(self.shape)
        return clone

    def internal_candidates(self, tol: float) -> list[int]:
        lightest = _weight_classes(self.internals, self.weight, tol)[0]
        fewest = min(self.degree[m] for m in lightest)
        return [m for m in lightest if self.degree[m] == fewest]

    def merge(self, vertex: int, chosen: Sequence[int]) -> None:
        for w in chosen:
            self.parent[w] = vertex
            self.pendants.remove(w)
        self.shape[vertex] = f"{self.shape[vertex]}({','.join(sorted(self.shape[w] for w in chosen))})"
        self.weight[vertex] += sum(self.weight[w] for w in chosen)
        self.degree[vertex] = 1
        self.internals.remove(vertex)
        self.pendants.append(vertex)
        self.steps.append(HuffmanStep(vertex, tuple(sorted(chosen)), self.weight[vertex]))

    def finish(self) -> int:
        last = self.internals[0]
        remaining = sorted(self.pendants)
        for w in remaining:
            self.parent[w] = last
        total = self.weight[last] + sum(self.weight[w] for w in remaining)
        self.steps.append(HuffmanStep(last, tuple(remaining), total))
        return last


def _pendant_choices(
    state: _HuffmanState, count: int, tol: float, symmetric: bool
) -> Iterator[list[int]]:
    """Every way of picking the ``count`` lightest pendants, resolving ties at the boundary class."""
    fixed: list[int] = []
    for group in _weight_classes(state.pendants, state.weight, tol):
        if len(fixed) + len(group) <= count:
            fixed.extend(group)
            if len(fixed) == count:
                yield fixed
                return
            continue
        needed = count - len(fixed)
        if not symmetric:
            for extra in combinations(group, needed):
                yield [*fixed, *extra]
            return
        buckets: dict[str, list[int]] = defaultdict(list)
        for w in group:
            buckets[state.shape[w]].append(w)
        members = list(buckets.values())
        for takes in _bounded_compositions(needed, [len(m) for m in members]):
            yield fixed + [w for m, take in zip(members, takes) for w in m[:take]]
        return


def _bounded_compositions(total: int, limits: Sequence[int]) -> Iterator[tuple[int, ...]]:
    if not limits:
        if total == 0:
            yield ()
        return
    for take in range(min(total, limits[0]) + 1):
        for rest in _bounded_compositions(total - take, limits[1:]):
            yield (take, *rest)


def _build_outputs(
    tuple_: GeneratingTuple, state: _HuffmanState, terminal: int
) -> tuple[VertexWeightedTree, DirectedTree, HuffmanTrace]:
    directed = DirectedTree(state.parent, tuple_.weights)
    tree = directed.to_tree(max(max_degree_or_default(None), *tuple_.degrees))
    if tree.degrees != tuple_.degrees:
        msg = f"Huffman output degrees {tree.degrees} differ from the prescribed degrees {tuple_.degrees}."
        raise RuntimeError(msg)
    return VertexWeightedTree(tree, tuple_.weights), directed, HuffmanTrace(tuple(state.steps), terminal)


def _single_edge(tuple_: GeneratingTuple) -> tuple[VertexWeightedTree, DirectedTree, HuffmanTrace]:
    directed = DirectedTree([1, None], tuple_.weights)
    tree = ChemicalTree([(0, 1)], 2)
    return VertexWeightedTree(tree, tuple_.weights), directed, HuffmanTrace((), 1)


def generalized_huffman(
    tuple_: GeneratingTuple, tolerance: float | None = None
) -> tuple[VertexWeightedTree, DirectedTree, HuffmanTrace]:
    r"""Run the generalized Huffman algorithm on a generating tuple.

    While more than one internal vertex remains, the lightest internal vertex :math:`m_i` (least degree among
    the lightest, then least id) absorbs its :math:`d(m_i) - 1` lightest pendants (ties by least id):

    .. math::
        \mu^{i+1}(m_i) = \mu^i(m_i) + \mu^i(w_1) + \dots + \mu^i(w_{d(m_i)-1}),

    after which :math:`m_i` is treated as a pendant. The last internal vertex absorbs all remaining pendants
    and becomes the terminal of the directed output.

    Args:
        tuple_ (GeneratingTuple): Prescribed weights and degrees.
        tolerance (float | None): Relative tolerance under which weights tie. Default: if `None`, uses a
            global default.

    Returns:
        tuple[VertexWeightedTree, DirectedTree, HuffmanTrace]: The tree, its orientation toward the terminal,
        and the merge trace.

    """
    tol = tolerance_or_default(tolerance)
    if not tuple_.internal_vertices:
        return _single_edge(tuple_)
    state = _HuffmanState(tuple_)
    while len(state.internals) > 1:
        vertex = min(state.internal_candidates(tol))
        chosen = next(_pendant_choices(state, state.degree[vertex] - 1, tol, symmetric=False))
        state.merge(vertex, chosen)
        logger.debug("Merged %s into vertex %d, new weight %s", chosen, vertex, state.weight[vertex])
    terminal = state.finish()
    return _build_outputs(tuple_, state, terminal)


def huffman_trees(
    tuple_: GeneratingTuple, up_to_isomorphism: bool = False, tolerance: float | None = None
) -> list[VertexWeightedTree]:
    """Return every distinct tree the Huffman algorithm can output under some resolution of ties.

    Args:
        tuple_ (GeneratingTuple): Prescribed weights and degrees.
        up_to_isomorphism (bool): If `True`, vertices with equal weight, degree and merged subtree are
            treated as interchangeable and one tree per weight-preserving isomorphism class is returned.
            Otherwise every labeled tree is returned. Default: `False`.
        tolerance (float | None): Relative tolerance under which weights tie. Default: if `None`, uses a
            global default.

    """
    tol = tolerance_or_default(tolerance)
    if not tuple_.internal_vertices:
        return [_single_edge(tuple_)[0]]

    results: dict[object, VertexWeightedTree] = {}
    stack = [_HuffmanState(tuple_)]
    while stack:
        state = stack.pop()
        if len(state.internals) == 1:
            terminal = state.finish()
            tree = _build_outputs(tuple_, state, terminal)[0]
            key = _weighted_code(tree) if up_to_isomorphism else tree.tree._edge_set()
            results.setdefault(key, tree)
            continue
        candidates = state.internal_candidates(tol)
        if up_to_isomorphism:
            candidates = list({state.shape[m]: m for m in reversed(candidates)}.values())
        for vertex in candidates:
            for chosen in _pendant_choices(state, state.degree[vertex] - 1, tol, up_to_isomorphism):
                successor = state.copy()
                successor.merge(vertex, chosen)
                stack.append(successor)
    logger.debug("Found %d distinct Huffman trees for %r", len(results), tuple_)
    return list(results.values())


def _weighted_code(tree: VertexWeightedTree) -> str:
    labels = [repr(w) for w in tree.weights.tolist()]
    adjacency = tree.tree.adjacency

    def code_from(top: int) -> str:
        order = breadth_first_order(adjacency, top)
        parent = {top: -1}
        for u in order:
            for w in adjacency[u]:
                if w != parent[u]:
                    parent[w] = u
        codes: dict[int, list[str]] = defaultdict(list)
        result = ""
        for v in reversed(order):
            result = labels[v] + ("(" + ",".join(sorted(codes[v])) + ")" if codes[v] else "")
            if v != top:
                codes[parent[v]].append(result)
        return result

    return min(code_from(v) for v in range(tree.order))


def extremal_tuple(
    weights: Vector,
    forced_pendants: Sequence[int] = (),
    max_degree: int | None = None,
    tolerance: float | None = None,
) -> GeneratingTuple:
    r"""Build the extremal generating tuple, whose heaviest eligible vertices are internal of maximal degree.

    Among vertices outside ``forced_pendants``, the ``q`` heaviest (ties by least id) become internal with
    degree :math:`\Delta`, where ``q`` is the internal count of an extremely branched tree of this order. The
    lightest of them (ties by greatest id) takes the exceptional degree dictated by the order.

    Args:
        weights (Vector): Non-negative weight of every vertex.
        forced_pendants (Sequence[int]): Vertices that must stay pendent. Default: `()`.
        max_degree (int | None): Degree bound. Default: if `None`, uses a global default.
        tolerance (float | None): Relative tolerance under which weights tie. Default: if `None`, uses a
            global default.

    """
    return next(_extremal_tuples(weights, forced_pendants, max_degree, tolerance))


def extremal_tuples(
    weights: Vector,
    forced_pendants: Sequence[int] = (),
    max_degree: int | None = None,
    tolerance: float | None = None,
) -> list[GeneratingTuple]:
    """Return every extremal generating tuple obtained by resolving weight ties in all possible ways."""
    return list(_extremal_tuples(weights, forced_pendants, max_degree, tolerance))


def _extremal_tuples(
    weights: Vector, forced_pendants: Sequence[int], max_degree: int | None, tolerance: float | None
) -> Iterator[GeneratingTuple]:
    delta = max_degree_or_default(max_degree)
    tol = tolerance_or_default(tolerance)
    weight_tensor = initialize_tensor("weights", weights, is_non_negative=True)
    values = weight_tensor.tolist()
    order = len(values)
    if order == 2:
        yield GeneratingTuple(weight_tensor, (1, 1))
        return
    internal_count, exception = exceptional_degree(order, delta)
    forced = set(forced_pendants)
    eligible = [v for v in range(order) if v not in forced]
    if len(eligible) < internal_count:
        msg = (
            f"Expected at least {internal_count} vertices outside the forced pendants, "
            f"but got {len(eligible)}."
        )
        raise ValueError(msg)

    heavy_first = list(reversed(_weight_classes(eligible, values, tol)))
    fixed: list[int] = []
    boundary: list[int] = []
    needed = 0
    for group in heavy_first:
        if len(fixed) + len(group) <= internal_count:
            fixed.extend(group)
            continue
        boundary, needed = group, internal_count - len(fixed)
        break

    for extra in combinations(boundary, needed):
        internal = [*fixed, *extra]
        lightest = _weight_classes(internal, values, tol)[0] if exception != delta else [None]
        for short in reversed(lightest):
            degrees = [1] * order
            for m in internal:
                degrees[m] = delta
            if short is not None:
                degrees[short] = exception
            yield GeneratingTuple(weight_tensor, degrees)

