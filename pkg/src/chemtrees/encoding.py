"""Text encodings of trees: the nested-parenthesis grammar, canonical forms, and JSON parent arrays.

Grammar::

    Node     := Label Children?
    Children := '(' Node (',' Node)* ')'
    Label    := 'O' | 'C'

At most one ``O`` may appear and only as the outermost node, where it marks the pendent root of an alcohol
skeleton. Vertex ids are assigned in pre-order of the text.
"""

from __future__ import annotations

import json
import logging
from collections.abc import Mapping
from typing import Any

from .trees import ChemicalTree, PendentRootedTree, breadth_first_order

logger = logging.getLogger(__name__)

__all__ = [
    "TreeSyntaxError",
    "canonical_form",
    "load_tree",
    "parse_parent_array",
    "parse_tree",
    "to_parent_array",
]

VALID_LABELS = {"O", "C"}


class TreeSyntaxError(ValueError):
    """Raised when a tree encoding does not conform to the grammar.

    Attributes:
        position (int): Zero-based character offset of the offending token.

    """

    def __init__(self, message: str, position: int) -> None:
        super().__init__(f"{message} at position {position}.")
        self.position = position


class _Parser:
    def __init__(self, text: str) -> None:
        self.text = text
        self.pos = 0
        self.labels: list[str] = []
        self.parents: list[int | None] = []
        self.label_positions: list[int] = []

    def peek(self) -> str | None:
        return self.text[self.pos] if self.pos < len(self.text) else None

    def fail(self, expected: str) -> TreeSyntaxError:
        found = self.peek()
        seen = "end of input" if found is None else repr(found)
        return TreeSyntaxError(f"Expected {expected}, but found {seen}", self.pos)

    def node(self, parent: int | None) -> None:
        label = self.peek()
        if label not in VALID_LABELS:
            raise self.fail("label 'O' or 'C'")
        vertex = len(self.labels)
        self.labels.append(label)
        self.parents.append(parent)
        self.label_positions.append(self.pos)
        self.pos += 1
        if self.peek() == "(":
            self.pos += 1
            self.node(vertex)
            while self.peek() == ",":
                self.pos += 1
                self.node(vertex)
            if self.peek() != ")":
                raise self.fail("',' or ')'")
            self.pos += 1


def parse_tree(text: str, max_degree: int | None = None) -> ChemicalTree:
    """Parse an encoding into a tree.

    Args:
        text (str): Encoding in the nested-parenthesis grammar, e.g. ``"O(C(C,C,C))"``.
        max_degree (int | None): Degree bound of the result. Default: if `None`, uses a global default.

    Returns:
        ChemicalTree: A :class:`PendentRootedTree` rooted at vertex 0 when the outermost label is ``O``,
        otherwise a free :class:`ChemicalTree`.

    Raises:
        TreeSyntaxError: If the text does not follow the grammar.
        ValueError: If ``O`` is misplaced or repeated, or a degree exceeds the bound.

    """
    if not isinstance(text, str):
        msg = f"Expected text to be a str, but got {type(text).__name__}."
        raise TypeError(msg)
    parser = _Parser(text)
    parser.node(None)
    if parser.pos != len(text):
        raise parser.fail("end of input")

    oxygen = [i for i, label in enumerate(parser.labels) if label == "O"]
    if len(oxygen) > 1:
        msg = f"Expected at most one 'O' label, but got {len(oxygen)}."
        raise ValueError(msg)
    if oxygen and oxygen[0] != 0:
        position = parser.label_positions[oxygen[0]]
        msg = f"Expected 'O' only as the outermost node, but found it at position {position}."
        raise ValueError(msg)

    edges = [(p, v) for v, p in enumerate(parser.parents) if p is not None]
    order = len(parser.labels)
    if oxygen:
        return PendentRootedTree(edges, 0, order, max_degree)
    return ChemicalTree(edges, order, max_degree)


def canonical_form(tree: ChemicalTree) -> str:
    """Return the canonical encoding of a tree.

    Rooted trees are encoded from their root and free trees from their centroid; with two centroids the
    lexicographically smaller rooting wins. Children are sorted by their own encodings, so two trees are
    isomorphic (root-preserving for rooted trees) exactly when their canonical forms are equal. Parsing the
    canonical form and encoding again returns the same string.

    Args:
        tree (ChemicalTree): A free or pendent-rooted tree.

    Returns:
        str: The canonical encoding.

    """
    if isinstance(tree, PendentRootedTree):
        return _rooted_code(tree, tree.root, "O")
    return min(_rooted_code(tree, center, "C") for center in _centroids(tree))


def _rooted_code(tree: ChemicalTree, root: int, root_label: str) -> str:
    parent = [-1] * tree.order
    order = breadth_first_order(tree.adjacency, root)
    for u in order:
        for w in tree.adjacency[u]:
            if w != parent[u]:
                parent[w] = u
    children: list[list[str]] = [[] for _ in range(tree.order)]
    code = ""
    for v in reversed(order):
        label = root_label if v == root else "C"
        code = label + ("(" + ",".join(sorted(children[v])) + ")" if children[v] else "")
        if v != root:
            children[parent[v]].append(code)
    return code


def _centroids(tree: ChemicalTree) -> list[int]:
    n = tree.order
    order = breadth_first_order(tree.adjacency, 0)
    parent = [-1] * n
    for u in order:
        for w in tree.adjacency[u]:
            if w != parent[u]:
                parent[w] = u
    size = [1] * n
    for v in reversed(order):
        if parent[v] >= 0:
            size[parent[v]] += size[v]
    heaviest = []
    for v in range(n):
        branches = [size[w] for w in tree.adjacency[v] if w != parent[v]]
        branches.append(n - size[v])
        heaviest.append(max(branches))
    best = min(heaviest)
    return [v for v in range(n) if heaviest[v] == best]


def parse_parent_array(data: str | Mapping[str, Any], max_degree: int | None = None) -> ChemicalTree:
    """Parse the JSON parent-array form ``{"parent": [...], "root": k}``.

    ``parent[i]`` is the parent of vertex ``i``, with ``null`` at the vertex the tree hangs from. When
    ``root`` is present the result is a :class:`PendentRootedTree` rooted at that (pendent) vertex.

    Args:
        data (str | Mapping[str, Any]): JSON text or an already decoded mapping.
        max_degree (int | None): Degree bound of the result. Default: if `None`, uses a global default.

    """
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as error:
            raise TreeSyntaxError(f"Invalid JSON: {error.msg}", error.pos) from error
    if not isinstance(data, Mapping) or not isinstance(data.get("parent"), list):
        msg = "Expected a JSON object with a 'parent' list."
        raise ValueError(msg)

    parent = data["parent"]
    hanging = [v for v, p in enumerate(parent) if p is None]
    if len(hanging) != 1:
        msg = f"Expected exactly one null entry in 'parent', but got {len(hanging)}."
        raise ValueError(msg)
    for v, p in enumerate(parent):
        if p is not None and (isinstance(p, bool) or not isinstance(p, int)):
            msg = f"Expected integer parent ids, but vertex {v} has parent {p!r}."
            raise ValueError(msg)
    edges = [(p, v) for v, p in enumerate(parent) if p is not None]

    root = data.get("root")
    if root is None:
        return ChemicalTree(edges, len(parent), max_degree)
    return PendentRootedTree(edges, root, len(parent), max_degree)


def to_parent_array(tree: ChemicalTree) -> dict[str, Any]:
    """Encode a tree in the JSON parent-array form.

    Rooted trees hang from their root and carry a ``root`` key; free trees hang from vertex 0.
    """
    top = tree.root if isinstance(tree, PendentRootedTree) else 0
    parent: list[int | None] = [None] * tree.order
    seen = {top}
    for u in breadth_first_order(tree.adjacency, top):
        for w in tree.adjacency[u]:
            if w not in seen:
                seen.add(w)
                parent[w] = u
    result: dict[str, Any] = {"parent": parent}
    if isinstance(tree, PendentRootedTree):
        result["root"] = tree.root
    return result


def load_tree(text: str, max_degree: int | None = None) -> ChemicalTree:
    """Parse either the grammar or the JSON parent-array form, chosen by the first character."""
    stripped = text.strip()
    if stripped.startswith("{"):
        logger.debug("Parsing JSON parent array of length %d", len(stripped))
        return parse_parent_array(stripped, max_degree)
    return parse_tree(stripped, max_degree)
