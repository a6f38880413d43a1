"""Exhaustive search over all trees with prescribed degrees, used to verify Huffman optimality."""

from __future__ import annotations

import logging
from collections.abc import Iterator

import networkx as nx
import torch

from ..indices import vertex_weighted_wiener
from ..trees import ChemicalTree, VertexWeightedTree
from ..utils import is_close, max_degree_or_default, tolerance_or_default, validate_order
from .huffman import GeneratingTuple, generalized_huffman, huffman_trees, is_degree_monotone
from .properties import PropertyReport, random_generating_tuple, trial_generator

logger = logging.getLogger(__name__)

MAX_BRUTE_FORCE_ORDER = 9


def trees_with_degrees(tuple_: GeneratingTuple) -> Iterator[ChemicalTree]:
    """Yield every labeled tree in which each vertex has exactly its prescribed degree.

    Labeled trees correspond to Prüfer sequences in which vertex ``v`` appears ``d(v) - 1`` times; each
    distinct arrangement of that multiset is decoded once. Weights distinguish vertices, so no isomorphism
    reduction is applied.

    Args:
        tuple_ (GeneratingTuple): Prescribed degrees, at most 9 vertices.

    """
    validate_order("order", tuple_.order, 2, MAX_BRUTE_FORCE_ORDER)
    max_degree = max(max_degree_or_default(None), *tuple_.degrees)
    if tuple_.order == 2:
        yield ChemicalTree([(0, 1)], 2, max_degree)
        return
    counts = {v: d - 1 for v, d in enumerate(tuple_.degrees) if d > 1}
    for sequence in _arrangements(counts, tuple_.order - 2):
        graph = nx.from_prufer_sequence(sequence)
        yield ChemicalTree(graph.edges(), tuple_.order, max_degree)


def _arrangements(counts: dict[int, int], length: int) -> Iterator[list[int]]:
    if length == 0:
        yield []
        return
    for label, count in counts.items():
        if count:
            counts[label] -= 1
            for rest in _arrangements(counts, length - 1):
                yield [label, *rest]
            counts[label] += 1


def brute_force_minimum(
    tuple_: GeneratingTuple, tolerance: float | None = None
) -> tuple[float, list[ChemicalTree]]:
    """Minimum vertex-weighted Wiener index over all trees with the prescribed degrees.

    Args:
        tuple_ (GeneratingTuple): Prescribed weights and degrees, at most 9 vertices.
        tolerance (float | None): Relative tolerance under which values tie. Default: if `None`, uses a
            global default.

    Returns:
        tuple[float, list[ChemicalTree]]: The minimum and every labeled tree attaining it.

    """
    tol = tolerance_or_default(tolerance)
    best = float("inf")
    minimizers: list[ChemicalTree] = []
    visited = 0
    for tree in trees_with_degrees(tuple_):
        visited += 1
        value = vertex_weighted_wiener(VertexWeightedTree(tree, tuple_.weights))
        if minimizers and is_close(value, best, tol):
            minimizers.append(tree)
        elif value < best:
            best, minimizers = value, [tree]
    logger.debug("Brute force visited %d trees, minimum %s attained %d times", visited, best, len(minimizers))
    return best, minimizers


def check_huffman_optimality(
    max_order: int = MAX_BRUTE_FORCE_ORDER, trials: int = 500, seed: int = 0, min_order: int = 4
) -> PropertyReport:
    """Compare the Huffman output with exhaustive search on random degree-monotone tuples.

    A trial fails when the Huffman value differs from the brute-force minimum, or when some minimizing tree
    is not among the outputs the algorithm produces under any resolution of ties.

    Args:
        max_order (int): Largest tuple order, at most 9. Default: `9`.
        trials (int): Number of random tuples. Default: `500`.
        seed (int): Seed of the per-trial random streams. Default: `0`.
        min_order (int): Smallest tuple order. Default: `4`.

    """
    validate_order("max_order", max_order, 2, MAX_BRUTE_FORCE_ORDER)
    validate_order("min_order", min_order, 2, max_order)
    report = PropertyReport(seed=seed, trials=trials)
    for trial in range(trials):
        generator = trial_generator(seed, trial)
        order = int(torch.randint(min_order, max_order + 1, (1,), generator=generator).item())
        tuple_ = random_generating_tuple(order, generator)
        if not is_degree_monotone(tuple_):
            continue
        tree, _, _ = generalized_huffman(tuple_)
        value = vertex_weighted_wiener(tree)
        best, minimizers = brute_force_minimum(tuple_)
        outputs = {h.tree for h in huffman_trees(tuple_)}
        report.count("huffman-optimality")
        if not is_close(value, best):
            report.fail("huffman-optimality", trial, f"{tuple_!r}: Huffman {value} but minimum {best}")
            continue
        missing = [t for t in minimizers if t not in outputs]
        if missing:
            witness = f"{tuple_!r}: minimizer {missing[0]!r} is not a Huffman tree"
            report.fail("huffman-optimality", trial, witness)
    logger.debug("Huffman optimality: %d checks, %d failures", report.checks, len(report.counterexamples))
    return report


def degree_shift_minima(tuple_: GeneratingTuple, grow: int, shrink: int) -> tuple[float, float]:
    """Brute-force minima before and after moving one unit of degree from ``shrink`` to ``grow``.

    The shift is admissible when the tuple is degree-monotone, ``d(grow) >= d(shrink) >= 2`` and
    ``μ(grow) >= μ(shrink)``; the shifted minimum is then strictly smaller.

    Args:
        tuple_ (GeneratingTuple): Prescribed weights and degrees, at most 9 vertices.
        grow (int): Vertex whose degree increases by one.
        shrink (int): Vertex whose degree decreases by one.

    Returns:
        tuple[float, float]: The minimum over the shifted degrees and the minimum over the original degrees.

    """
    degrees = tuple_.degrees
    weights = tuple_.weights.tolist()
    for name, vertex in (("grow", grow), ("shrink", shrink)):
        if not 0 <= vertex < tuple_.order:
            msg = f"Expected {name} to be a vertex id in [0, {tuple_.order - 1}], but got {vertex}."
            raise ValueError(msg)
    if grow == shrink or not degrees[grow] >= degrees[shrink] >= 2:
        msg = (
            "Expected d(grow) >= d(shrink) >= 2 for distinct vertices, "
            f"but got {degrees[grow]} and {degrees[shrink]}."
        )
        raise ValueError(msg)
    if weights[grow] < weights[shrink]:
        msg = f"Expected mu(grow) >= mu(shrink), but got {weights[grow]} and {weights[shrink]}."
        raise ValueError(msg)
    if not is_degree_monotone(tuple_):
        msg = "Expected degree-monotone weights."
        raise ValueError(msg)

    shifted = list(degrees)
    shifted[grow] += 1
    shifted[shrink] -= 1
    before, _ = brute_force_minimum(tuple_)
    after, _ = brute_force_minimum(GeneratingTuple(tuple_.weights, shifted))
    return after, before
