"""Chemical, pendent-rooted, vertex-weighted and directed trees."""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Sequence
from functools import cached_property
from typing import TYPE_CHECKING

import torch
from torch import Tensor

from .utils import initialize_tensor, max_degree_or_default, validate_order

if TYPE_CHECKING:
    from .types import Edge, Vector

__all__ = [
    "ChemicalTree",
    "DirectedTree",
    "PendentRootedTree",
    "VertexWeightedTree",
    "distance_matrix",
    "distances_from",
    "to_directed",
]


class ChemicalTree:
    r"""Unrooted tree whose vertex degrees do not exceed :math:`\Delta`.

    Vertices are the dense integers ``0..order-1``. A chemical tree models a hydrogen-suppressed
    skeleton: every vertex is a heavy atom and every edge a single bond. The degree counts satisfy

    .. math::
        \sum_{v} \deg(v) = 2(n - 1).

    Args:
        edges (Iterable[tuple[int, int]]): Edge list over vertex ids.
        order (int | None): Number of vertices. Default: `len(edges) + 1`.
        max_degree (int | None): Degree bound :math:`\Delta`. Default: if `None`, uses a global default
            (see :meth:`chemtrees.set_default_max_degree()`).

    """

    def __init__(
        self, edges: Iterable[Edge], order: int | None = None, max_degree: int | None = None
    ) -> None:
        edge_list = tuple((int(u), int(v)) for u, v in edges)
        if order is None:
            order = len(edge_list) + 1
        validate_order("order", order, 1)
        if len(edge_list) != order - 1:
            msg = f"Expected {order - 1} edges for a tree of order {order}, but got {len(edge_list)}."
            raise ValueError(msg)

        neighbors: list[list[int]] = [[] for _ in range(order)]
        for u, v in edge_list:
            for vertex in (u, v):
                if not 0 <= vertex < order:
                    msg = f"Expected vertex ids in [0, {order - 1}], but got {vertex}."
                    raise ValueError(msg)
            if u == v:
                msg = f"Expected a tree without loops, but vertex {u} is joined to itself."
                raise ValueError(msg)
            neighbors[u].append(v)
            neighbors[v].append(u)

        self._order = order
        self._edges = edge_list
        self._adjacency = tuple(tuple(sorted(nbrs)) for nbrs in neighbors)
        self._max_degree = max_degree_or_default(max_degree)

        if len(breadth_first_order(self._adjacency, 0)) != order:
            msg = "Expected a connected acyclic graph, but the edge list is disconnected."
            raise ValueError(msg)
        worst = max(self.degrees)
        if worst > self._max_degree:
            vertex = self.degrees.index(worst)
            msg = (
                f"Expected vertex degrees at most {self._max_degree}, but vertex {vertex} has degree {worst}."
            )
            raise ValueError(msg)

    @property
    def order(self) -> int:
        """Number of vertices."""
        return self._order

    @property
    def max_degree(self) -> int:
        r"""Degree bound :math:`\Delta`."""
        return self._max_degree

    @property
    def edges(self) -> tuple[Edge, ...]:
        """Edges in construction order."""
        return self._edges

    @property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Sorted neighbor lists indexed by vertex id."""
        return self._adjacency

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Degree of every vertex."""
        return tuple(len(nbrs) for nbrs in self._adjacency)

    @property
    def pendent_vertices(self) -> tuple[int, ...]:
        """Vertices of degree 1."""
        return tuple(v for v, d in enumerate(self.degrees) if d == 1)

    @property
    def internal_vertices(self) -> tuple[int, ...]:
        """Vertices of degree at least 2."""
        return tuple(v for v, d in enumerate(self.degrees) if d >= 2)

    def degree(self, vertex: int) -> int:
        """Return the degree of ``vertex``."""
        self._check_vertex(vertex)
        return self.degrees[vertex]

    def neighbors(self, vertex: int) -> tuple[int, ...]:
        """Return the sorted neighbors of ``vertex``."""
        self._check_vertex(vertex)
        return self._adjacency[vertex]

    def free_tree(self) -> ChemicalTree:
        """Return the underlying unrooted tree."""
        return ChemicalTree(self._edges, self._order, self._max_degree)

    def _check_vertex(self, vertex: int) -> None:
        if isinstance(vertex, bool) or not isinstance(vertex, int) or not 0 <= vertex < self._order:
            msg = f"Expected a vertex id in [0, {self._order - 1}], but got {vertex!r}."
            raise ValueError(msg)

    def _edge_set(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(edge) for edge in self._edges)

    def __eq__(self, other: object) -> bool:
        if type(other) is not type(self):
            return NotImplemented
        assert isinstance(other, ChemicalTree)
        return self._order == other._order and self._edge_set() == other._edge_set()

    def __hash__(self) -> int:
        return hash((type(self).__name__, self._order, self._edge_set()))

    def __repr__(self) -> str:
        return f"{type(self).__name__}(order={self._order}, edges={list(self._edges)})"


class PendentRootedTree(ChemicalTree):
    """Chemical tree with a distinguished pendent vertex, the root.

    In an alcohol skeleton the root is the hydroxyl oxygen and its unique neighbor, the sub-root, is the
    carbon carrying it.

    Args:
        edges (Iterable[tuple[int, int]]): Edge list over vertex ids.
        root (int): The pendent root vertex.
        order (int | None): Number of vertices. Default: `len(edges) + 1`.
        max_degree (int | None): Degree bound. Default: if `None`, uses a global default.

    """

    def __init__(
        self,
        edges: Iterable[Edge],
        root: int,
        order: int | None = None,
        max_degree: int | None = None,
    ) -> None:
        super().__init__(edges, order, max_degree)
        if self.order < 2:
            msg = f"Expected a rooted tree of order at least 2, but got order {self.order}."
            raise ValueError(msg)
        self._check_vertex(root)
        if self.degrees[root] != 1:
            degree = self.degrees[root]
            msg = f"Expected the root to be a pendent vertex, but vertex {root} has degree {degree}."
            raise ValueError(msg)
        self._root = root

    @classmethod
    def from_tree(cls, tree: ChemicalTree, root: int) -> PendentRootedTree:
        """Root an existing chemical tree at one of its pendent vertices."""
        return cls(tree.edges, root, tree.order, tree.max_degree)

    @property
    def root(self) -> int:
        """The pendent root vertex."""
        return self._root

    @property
    def subroot(self) -> int:
        """The unique neighbor of the root."""
        return self.adjacency[self._root][0]

    def __eq__(self, other: object) -> bool:
        result = super().__eq__(other)
        if result is NotImplemented or not result:
            return result
        assert isinstance(other, PendentRootedTree)
        return self._root == other._root

    def __hash__(self) -> int:
        return hash((super().__hash__(), self._root))

    def __repr__(self) -> str:
        return f"PendentRootedTree(order={self.order}, root={self._root}, edges={list(self.edges)})"


class VertexWeightedTree:
    """Tree whose vertices carry non-negative weights.

    Args:
        tree (ChemicalTree): The underlying tree.
        weights (Vector): One non-negative weight per vertex.

    """

    def __init__(self, tree: ChemicalTree, weights: Vector) -> None:
        self._tree = tree
        self._weights = initialize_tensor("weights", weights, length=tree.order, is_non_negative=True)
        self._total_weight = float(self._weights.sum().item())

    @property
    def tree(self) -> ChemicalTree:
        """The underlying tree."""
        return self._tree

    @property
    def weights(self) -> Tensor:
        """Vertex weights."""
        return self._weights

    @property
    def total_weight(self) -> float:
        r"""Sum of all vertex weights, :math:`\bar{\mu}`."""
        return self._total_weight

    @property
    def order(self) -> int:
        """Number of vertices."""
        return self._tree.order

    def __repr__(self) -> str:
        return f"VertexWeightedTree(tree={self._tree!r}, weights={self._weights.tolist()})"


class DirectedTree:
    """Tree with every arc oriented toward a terminal vertex.

    Every vertex except the terminal has exactly one outbound arc, given by ``parent``. The subordinate group
    of a vertex ``v`` is the set of vertices with a directed path to ``v`` (``v`` included) and its weight is
    ``f(v)``.

    Args:
        parent (Sequence[int | None]): Head of the outbound arc of every vertex, `None` at the terminal.
        weights (Vector): One non-negative weight per vertex.

    """

    def __init__(self, parent: Sequence[int | None], weights: Vector) -> None:
        order = len(parent)
        validate_order("order", order, 1)
        roots = [v for v, p in enumerate(parent) if p is None]
        if len(roots) != 1:
            msg = f"Expected exactly one terminal vertex without a parent, but got {len(roots)}."
            raise ValueError(msg)
        for v, p in enumerate(parent):
            if p is not None and (not 0 <= p < order or p == v):
                msg = f"Expected the parent of vertex {v} to be another vertex id, but got {p}."
                raise ValueError(msg)

        self._parent = tuple(None if p is None else int(p) for p in parent)
        self._terminal = roots[0]
        self._weights = initialize_tensor("weights", weights, length=order, is_non_negative=True)

        children: list[list[int]] = [[] for _ in range(order)]
        for v, p in enumerate(self._parent):
            if p is not None:
                children[p].append(v)
        self._children = tuple(tuple(c) for c in children)
        self._top_down = breadth_first_order(self._children, self._terminal)
        if len(self._top_down) != order:
            msg = "Expected every vertex to reach the terminal by following parents, but found a cycle."
            raise ValueError(msg)

    @property
    def parent(self) -> tuple[int | None, ...]:
        """Head of the outbound arc of every vertex."""
        return self._parent

    @property
    def weights(self) -> Tensor:
        """Vertex weights."""
        return self._weights

    @property
    def terminal(self) -> int:
        """The vertex without an outbound arc."""
        return self._terminal

    @property
    def order(self) -> int:
        """Number of vertices."""
        return len(self._parent)

    @property
    def total_weight(self) -> float:
        r"""Sum of all vertex weights, :math:`\bar{\mu}`."""
        return float(self._weights.sum().item())

    def children(self, vertex: int) -> tuple[int, ...]:
        """Tails of the arcs entering ``vertex``."""
        return self._children[vertex]

    @property
    def internal_vertices(self) -> tuple[int, ...]:
        """Vertices of undirected degree at least 2."""
        return tuple(v for v in range(self.order) if self._undirected_degree(v) >= 2)

    def _undirected_degree(self, vertex: int) -> int:
        return len(self._children[vertex]) + (self._parent[vertex] is not None)

    @cached_property
    def subordinate_weights(self) -> Tensor:
        """Weight ``f(v)`` of the subordinate group of every vertex."""
        f = self._weights.tolist()
        for v in reversed(self._top_down):
            p = self._parent[v]
            if p is not None:
                f[p] += f[v]
        return torch.tensor(f, dtype=self._weights.dtype)

    def subordinate_group(self, vertex: int) -> frozenset[int]:
        """Vertices with a directed path to ``vertex``, including ``vertex`` itself."""
        return frozenset(breadth_first_order(self._children, vertex))

    def to_tree(self, max_degree: int | None = None) -> ChemicalTree:
        """Return the underlying undirected tree."""
        edges = [(v, p) for v, p in enumerate(self._parent) if p is not None]
        widest = max((self._undirected_degree(v) for v in range(self.order)), default=0)
        return ChemicalTree(edges, self.order, max(max_degree_or_default(max_degree), widest))

    def __repr__(self) -> str:
        return f"DirectedTree(parent={list(self._parent)}, weights={self._weights.tolist()})"


def breadth_first_order(adjacency: Sequence[Sequence[int]], source: int) -> list[int]:
    """Breadth-first visiting order of the vertices reachable from ``source``."""
    seen = {source}
    visit = [source]
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in adjacency[u]:
            if w not in seen:
                seen.add(w)
                visit.append(w)
                queue.append(w)
    return visit


def distances_from(tree: ChemicalTree, source: int) -> tuple[int, ...]:
    """Breadth-first distances from ``source`` to every vertex.

    Args:
        tree (ChemicalTree): The tree.
        source (int): Start vertex.

    Returns:
        tuple[int, ...]: Distance of every vertex, zero at ``source``.

    """
    tree._check_vertex(source)
    distance = [-1] * tree.order
    distance[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for w in tree.adjacency[u]:
            if distance[w] < 0:
                distance[w] = distance[u] + 1
                queue.append(w)
    return tuple(distance)


def distance_matrix(tree: ChemicalTree) -> Tensor:
    """All-pairs distance matrix as an ``int64`` tensor of shape ``(order, order)``."""
    return torch.tensor([distances_from(tree, v) for v in range(tree.order)], dtype=torch.int64)


def to_directed(tree: VertexWeightedTree, terminal: int) -> DirectedTree:
    """Replace every edge with an arc directed toward ``terminal``.

    Args:
        tree (VertexWeightedTree): The weighted tree.
        terminal (int): Internal vertex the arcs point toward.

    Returns:
        DirectedTree: Directed tree sharing the weights of ``tree``.

    """
    if tree.tree.degree(terminal) < 2:
        msg = f"Expected the terminal to be an internal vertex, but vertex {terminal} is pendent."
        raise ValueError(msg)
    parent: list[int | None] = [None] * tree.order
    order = breadth_first_order(tree.tree.adjacency, terminal)
    seen = {terminal}
    for u in order:
        for w in tree.tree.adjacency[u]:
            if w not in seen:
                seen.add(w)
                parent[w] = u
    return DirectedTree(parent, tree.weights)
