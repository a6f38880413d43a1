"""Randomized property checks of majorization, concave sums, and Huffman trees.

Each trial draws from its own ``torch.Generator`` derived from the seed and the trial index, so a failing
trial can be replayed alone and trials may run in any order.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field

import torch

from ..enumeration import enumerate_chemical_trees
from ..indices import pair_weighted_wiener, vertex_weighted_wiener
from ..trees import VertexWeightedTree, to_directed
from ..utils import validate_order
from .directed import is_proper, vwwi_directed
from .huffman import GeneratingTuple, generalized_huffman, is_degree_monotone
from .majorization import weak_majorize

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Counterexample:
    """A failed check with the trial that produced it and a printable witness."""

    check: str
    trial: int
    witness: str


@dataclass
class PropertyReport:
    """Outcome of a randomized or exhaustive verification run.

    Attributes:
        seed (int): Seed the per-trial streams derive from.
        trials (int): Number of trials requested.
        cases (Counter[str]): Number of cases examined per check name.
        counterexamples (list[Counterexample]): Every failure found.

    """

    seed: int
    trials: int
    cases: Counter[str] = field(default_factory=Counter)
    counterexamples: list[Counterexample] = field(default_factory=list)

    @property
    def checks(self) -> int:
        """Total number of cases examined."""
        return sum(self.cases.values())

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def count(self, check: str) -> None:
        self.cases[check] += 1

    def fail(self, check: str, trial: int, witness: str) -> None:
        logger.debug("Counterexample for %s in trial %d: %s", check, trial, witness)
        self.counterexamples.append(Counterexample(check, trial, witness))

    def to_dict(self) -> dict[str, object]:
        return {
            "seed": self.seed,
            "trials": self.trials,
            "checks": self.checks,
            "cases": dict(sorted(self.cases.items())),
            "passed": self.passed,
            "counterexamples": [
                {"check": c.check, "trial": c.trial, "witness": c.witness} for c in self.counterexamples
            ],
        }


def trial_generator(seed: int, trial: int) -> torch.Generator:
    """Independent random stream for one trial of a seeded run."""
    return torch.Generator().manual_seed(seed * 1_000_003 + trial)


def _randint(generator: torch.Generator, low: int, high: int) -> int:
    """Uniform integer in ``[low, high]``."""
    return int(torch.randint(low, high + 1, (1,), generator=generator).item())


def _randints(generator: torch.Generator, low: int, high: int, size: int) -> list[int]:
    return torch.randint(low, high + 1, (size,), generator=generator).tolist()


def random_generating_tuple(
    order: int, generator: torch.Generator, max_degree: int = 4, max_weight: int = 6
) -> GeneratingTuple:
    """Draw a degree-monotone generating tuple with integer weights.

    Degrees come from a random multiset of Prüfer labels capped at ``max_degree - 1`` repetitions.
    Weights are drawn from ``1..max_weight`` and the internal ones are reassigned in ascending order of
    degree.

    Args:
        order (int): Number of vertices, at least 2.
        generator (torch.Generator): Random stream.
        max_degree (int): Largest prescribed degree. Default: `4`.
        max_weight (int): Largest weight. Default: `6`.

    """
    validate_order("order", order, 2)
    repeats = [0] * order
    for _ in range(order - 2):
        vertex = _randint(generator, 0, order - 1)
        while repeats[vertex] >= max_degree - 1:
            vertex = _randint(generator, 0, order - 1)
        repeats[vertex] += 1
    degrees = [r + 1 for r in repeats]
    weights = _randints(generator, 1, max_weight, order)
    internal = sorted((v for v in range(order) if degrees[v] > 1), key=lambda v: (degrees[v], v))
    for v, w in zip(internal, sorted(weights[v] for v in internal)):
        weights[v] = w
    return GeneratingTuple(weights, degrees)


def _transfer_pair(generator: torch.Generator) -> tuple[list[int], list[int]]:
    """Vectors ``(x, y)`` where ``y`` moves ``b`` from the tail entries onto the head entries of ``x``.

    The head entries of ``x`` dominate the matching tail entries, so ``y`` strictly majorizes ``x``.
    """
    length = _randint(generator, 1, 5)
    head = _randint(generator, 0, length)
    shift = _randint(generator, 1, 4)
    tail = [shift + t for t in _randints(generator, 0, 8, length)]
    top = [tail[i] + _randint(generator, 0, 5) for i in range(head)]
    x = top + tail
    y = [t + shift for t in top] + [t - shift for t in tail]
    return x, y


def _decreased_pair(generator: torch.Generator, strict: bool) -> tuple[list[int], list[int]]:
    """Vectors ``(x, y)`` with ``y`` obtained by lowering entries of ``x``."""
    length = _randint(generator, 1, 6)
    x = _randints(generator, 1, 10, length)
    y = [max(0, value - _randint(generator, 0, 3)) for value in x]
    if strict and y == x:
        y[0] = x[0] - 1
    return x, y


def _check_transfer(report: PropertyReport, trial: int, generator: torch.Generator) -> None:
    x, y = _transfer_pair(generator)
    report.count("transfer")
    verdict = weak_majorize(y, x)
    if verdict.relation != "strict":
        report.fail("transfer", trial, f"x={x}, y={y}, verdict={verdict.relation}")


def _check_concatenation(report: PropertyReport, trial: int, generator: torch.Generator) -> None:
    x, y = _decreased_pair(generator, strict=False)
    if _randint(generator, 0, 1):
        x2, y2 = _transfer_pair(generator)
    else:
        x2, y2 = _decreased_pair(generator, strict=True)
    if not weak_majorize(y, x).holds or weak_majorize(y2, x2).relation != "strict":
        return
    report.count("concatenation")
    verdict = weak_majorize(y + y2, x + x2)
    if verdict.relation != "strict":
        report.fail("concatenation", trial, f"x={x + x2}, y={y + y2}, verdict={verdict.relation}")


def _check_concave(report: PropertyReport, trial: int, generator: torch.Generator) -> None:
    """Sums of ``x (total - x)`` over entries no larger than ``total / 2`` respect majorization."""
    choice = _randint(generator, 0, 2)
    if choice == 0:
        x, y = _transfer_pair(generator)
    elif choice == 1:
        x, y = _decreased_pair(generator, strict=False)
    else:
        x = _randints(generator, 0, 9, _randint(generator, 1, 6))
        y = [x[i] for i in torch.randperm(len(x), generator=generator).tolist()]
    total = 2 * max(x + y) + _randint(generator, 0, 5)
    verdict = weak_majorize(y, x)
    if not verdict.holds:
        return
    report.count("concave")
    smaller = sum(v * (total - v) for v in y)
    larger = sum(v * (total - v) for v in x)
    equal_sorted = verdict.relation == "weak_equal_sorted"
    if smaller > larger or (smaller == larger) != equal_sorted:
        report.fail("concave", trial, f"x={x}, y={y}, total={total}, sums=({smaller}, {larger})")


def _check_huffman_tree(
    report: PropertyReport, trial: int, generator: torch.Generator, max_order: int
) -> None:
    order = _randint(generator, 4, max_order)
    tuple_ = random_generating_tuple(order, generator)
    if not is_degree_monotone(tuple_):
        return
    _, directed, _ = generalized_huffman(tuple_)
    f = directed.subordinate_weights.tolist()
    arcs = [(v, p) for v, p in enumerate(directed.parent) if p is not None]
    report.count("monotonicity")
    for v, m in arcs:
        for w, k in arcs:
            if m != k and f[v] < f[w] and not f[m] < f[k]:
                witness = f"{tuple_!r}: f({v})<f({w}) but f({m})>=f({k})"
                report.fail("monotonicity", trial, witness)
                return
    report.count("proper")
    if not is_proper(directed):
        report.fail("proper", trial, f"{tuple_!r}: Huffman tree is not proper")


def lemma_property_suite(seed: int = 0, trials: int = 1000, max_order: int = 9) -> PropertyReport:
    """Run the randomized majorization and Huffman-tree checks.

    Per trial:

    - ``transfer``: moving weight from dominated tail entries onto head entries gives strict majorization.
    - ``concatenation``: joining a weak and a strict majorization pair stays strict.
    - ``concave``: :math:`\\sum x(\\bar{\\mu} - x)` is smaller for the majorizing vector, with equality
      exactly when the sorted vectors coincide.
    - ``monotonicity``: on a Huffman tree, ``f(v) < f(v')`` implies ``f(m) < f(m')`` for arcs ``(v, m)`` and
      ``(v', m')`` with ``m != m'``.
    - ``proper``: every directed Huffman tree of a degree-monotone tuple is proper.

    Args:
        seed (int): Seed of the per-trial streams. Default: `0`.
        trials (int): Number of trials. Default: `1000`.
        max_order (int): Largest order of the random generating tuples. Default: `9`.

    """
    validate_order("max_order", max_order, 4)
    report = PropertyReport(seed=seed, trials=trials)
    for trial in range(trials):
        generator = trial_generator(seed, trial)
        _check_transfer(report, trial, generator)
        _check_concatenation(report, trial, generator)
        _check_concave(report, trial, generator)
        _check_huffman_tree(report, trial, generator, max_order)
    logger.debug("Property suite: %d cases, %d counterexamples", report.checks, len(report.counterexamples))
    return report


def check_directed_identity(
    max_order: int = 8, seed: int = 0, relative_tolerance: float = 1e-12
) -> PropertyReport:
    """Compare the arc form of the vertex-weighted Wiener index with the pairwise definition.

    Every free tree up to ``max_order`` is directed toward each internal vertex in turn, once with integer
    weights (compared exactly) and once with real weights (compared to a relative tolerance).

    Args:
        max_order (int): Largest tree order. Default: `8`.
        seed (int): Seed of the weight draws. Default: `0`.
        relative_tolerance (float): Tolerance for real weights. Default: `1e-12`.

    """
    validate_order("max_order", max_order, 3)
    report = PropertyReport(seed=seed, trials=max_order - 2)
    for order in range(3, max_order + 1):
        generator = trial_generator(seed, order)
        for tree in enumerate_chemical_trees(order):
            integer_weights = torch.randint(1, 10, (order,), generator=generator).to(torch.float64)
            real_weights = torch.rand(order, generator=generator, dtype=torch.float64) + 0.1
            for weights, exact in ((integer_weights, True), (real_weights, False)):
                weighted = VertexWeightedTree(tree, weights)
                pairwise = pair_weighted_wiener(tree, torch.outer(weights, weights))
                linear = vertex_weighted_wiener(weighted)
                for terminal in tree.internal_vertices:
                    report.count("directed-identity")
                    arc_form = vwwi_directed(to_directed(weighted, terminal))
                    scale = relative_tolerance * max(1.0, abs(pairwise))
                    matches = arc_form == pairwise == linear if exact else (
                        abs(arc_form - pairwise) <= scale and abs(linear - pairwise) <= scale
                    )
                    if not matches:
                        witness = f"{tree!r}, weights={weights.tolist()}, terminal={terminal}"
                        report.fail("directed-identity", order, f"{witness}: {arc_form} != {pairwise}")
    return report
